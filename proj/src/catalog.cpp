#include "cordial/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

namespace cordial {

namespace detail {
std::string_view builtin_catalog_text();
}

namespace {

constexpr Residue kModulus = 7;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::parse, "catalog line " + std::to_string(line) + ": " + what);
}

std::vector<Residue> numbers_in(std::string_view text) {
  std::set<Residue> out;
  for (std::size_t i = 0; i < text.size();) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    Residue v = 0;
    std::from_chars(text.data() + i, text.data() + j, v);
    out.insert(v);
    i = j;
  }
  return {out.begin(), out.end()};
}

bool parse_claim(std::string_view text, Claim& claim) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  claim.text = std::string(text);
  claim.residues = numbers_in(lower);
  if (lower.starts_with("no majority weight")) {
    claim.kind = ClaimKind::no_majority_weight;
    return claim.residues.empty();
  }
  if (lower.starts_with("majority weight")) claim.kind = ClaimKind::majority_weight;
  else if (lower.starts_with("minority label")) claim.kind = ClaimKind::minority_labels;
  else if (lower.starts_with("minority weight")) claim.kind = ClaimKind::minority_weights;
  else return false;
  return !claim.residues.empty();
}

void parse_labels(CatalogEntry& e) {
  std::vector<std::string_view> tokens;
  std::string_view rest = e.raw_labels;
  for (;;) {
    const auto comma = rest.find(',');
    tokens.push_back(trim(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (tokens.size() > 1 && tokens.back().empty()) tokens.pop_back();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto tok = tokens[i];
    Residue v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size()) {
      e.malformed = true;
      e.problem = "token " + std::to_string(i + 1) + " is " + (tok.empty() ? "empty" : "not a number");
      return;
    }
    if (v >= kModulus) {
      e.malformed = true;
      e.problem = "token " + std::to_string(i + 1) + " (" + std::string(tok) + ") is not a residue mod 7";
      return;
    }
    e.labels.push_back(v);
  }
}

}  // namespace

std::string_view to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::no_majority_weight: return "no-majority-weight";
    case ClaimKind::majority_weight: return "majority-weight";
    case ClaimKind::minority_labels: return "minority-labels";
    case ClaimKind::minority_weights: return "minority-weights";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::claim_holds: return "claim-holds";
    case Verdict::claim_fails: return "claim-fails";
    case Verdict::shape_size_mismatch: return "shape-size-mismatch";
  }
  return "?";
}

std::size_t Catalog::malformed_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const CatalogEntry& e) { return e.malformed; }));
}

Catalog parse_catalog(std::string_view text) {
  Catalog cat;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto p_list = line.find("LIST:");
    const auto p_id = line.find(" ID:");
    const auto p_labels = line.find(" LABELS:");
    const auto p_claim = line.find(" CLAIM:");
    if (p_list != 0 || p_id == std::string_view::npos || p_labels == std::string_view::npos ||
        p_claim == std::string_view::npos || !(p_id < p_labels && p_labels < p_claim))
      bad_line(line_no, "expected LIST:, ID:, LABELS: and CLAIM: fields");

    CatalogEntry e;
    e.line = line_no;
    const auto list_text = trim(line.substr(5, p_id - 5));
    const auto [end, ec] = std::from_chars(list_text.data(), list_text.data() + list_text.size(), e.list);
    if (list_text.empty() || ec != std::errc() || end != list_text.data() + list_text.size())
      bad_line(line_no, "list number is not an integer");
    e.id = std::string(trim(line.substr(p_id + 4, p_labels - p_id - 4)));
    if (e.id.empty()) bad_line(line_no, "empty id");
    e.raw_labels = std::string(trim(line.substr(p_labels + 8, p_claim - p_labels - 8)));
    parse_labels(e);
    if (!parse_claim(trim(line.substr(p_claim + 7)), e.claim) && !e.malformed) {
      e.malformed = true;
      e.problem = "unrecognised claim";
    }
    cat.entries.push_back(std::move(e));
  }
  return cat;
}

const Catalog& builtin_catalog() {
  static const Catalog cat = parse_catalog(detail::builtin_catalog_text());
  return cat;
}

std::vector<std::uint32_t> level_order(const RootedPiece& shape) {
  std::vector<std::uint32_t> order(shape.vertex_count());
  std::iota(order.begin(), order.end(), 0u);
  const std::size_t r = shape.root_count();
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return shape.depth(static_cast<std::uint32_t>(r + a)) < shape.depth(static_cast<std::uint32_t>(r + b));
  });
  return order;
}

CatalogCheck check_catalog_entry(const CatalogEntry& entry, const RootedPiece& shape) {
  if (entry.malformed)
    throw Error(ErrorCode::parse, "malformed entry " + entry.id + " (line " + std::to_string(entry.line) +
                                      "): " + entry.problem);
  CatalogCheck out;
  const std::size_t r = shape.root_count();
  if (entry.labels.size() != r + shape.vertex_count()) {
    out.verdict = Verdict::shape_size_mismatch;
    out.detail = "entry has " + std::to_string(entry.labels.size()) + " labels, shape has " +
                 std::to_string(r + shape.vertex_count()) + " nodes";
    return out;
  }
  out.root_labels.assign(entry.labels.begin(), entry.labels.begin() + static_cast<std::ptrdiff_t>(r));
  out.labeling = Labeling{kModulus, std::vector<Residue>(shape.vertex_count(), 0)};
  const auto order = level_order(shape);
  for (std::size_t j = 0; j < order.size(); ++j) out.labeling.labels[order[j]] = entry.labels[r + j];
  out.profile = count_profile(shape, out.root_labels, out.labeling);

  const auto& e = out.profile.e_counts;
  const auto& v = out.profile.v_counts;
  bool holds = false;
  std::vector<Residue> found;
  switch (entry.claim.kind) {
    case ClaimKind::no_majority_weight:
      holds = std::all_of(e.begin(), e.end(), [](std::size_t c) { return c <= 1; });
      break;
    case ClaimKind::majority_weight: {
      holds = entry.claim.residues.size() == 1;
      for (Residue a = 0; a < kModulus && holds; ++a)
        holds = a == entry.claim.residues[0] ? e[a] == 2 : e[a] <= 1;
      break;
    }
    case ClaimKind::minority_labels:
      for (Residue a = 0; a < kModulus; ++a)
        if (v[a] == 0) found.push_back(a);
      holds = found == entry.claim.residues;
      break;
    case ClaimKind::minority_weights: {
      const std::size_t lo = *std::min_element(e.begin(), e.end());
      for (Residue a = 0; a < kModulus; ++a)
        if (e[a] == lo) found.push_back(a);
      holds = found == entry.claim.residues;
      break;
    }
  }
  out.verdict = holds ? Verdict::claim_holds : Verdict::claim_fails;
  out.detail = "e_counts";
  for (std::size_t c : e) out.detail += " " + std::to_string(c);
  return out;
}

}  // namespace cordial
