#include "cordial/cordiality.hpp"

#include <algorithm>
#include <cstdint>

namespace cordial {

Labeling Labeling::make(Residue k, std::vector<Residue> labels) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "modulus must be >= 1");
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] >= k)
      throw Error(ErrorCode::invalid_argument,
                  "label " + std::to_string(labels[i]) + " at position " +
                      std::to_string(i) + " is not a residue mod " + std::to_string(k));
  return Labeling{k, std::move(labels)};
}

namespace {

void require_size(std::size_t expected, const Labeling& f, const char* what) {
  if (f.labels.size() != expected)
    throw Error(ErrorCode::size_mismatch,
                std::string(what) + " has " + std::to_string(expected) +
                    " vertices but the labeling has " + std::to_string(f.labels.size()));
  if (f.k == 0) throw Error(ErrorCode::invalid_argument, "modulus must be >= 1");
}

void require_roots(const RootedPiece& piece, std::span<const Residue> g, Residue k) {
  if (g.size() != piece.root_count())
    throw Error(ErrorCode::size_mismatch, "expected " + std::to_string(piece.root_count()) +
                                              " root labels, got " + std::to_string(g.size()));
  for (Residue x : g)
    if (x >= k) throw Error(ErrorCode::invalid_argument, "root label out of range");
}

}  // namespace

std::vector<Residue> edge_weights(const Tree& t, const Labeling& f) {
  require_size(t.size(), f, "tree");
  std::vector<Residue> out;
  out.reserve(t.edge_count());
  for (const Edge& e : t.edges()) out.push_back((f.labels[e.u] + f.labels[e.v]) % f.k);
  return out;
}

std::vector<Residue> edge_weights(const RootedPiece& piece, std::span<const Residue> root_labels,
                                  const Labeling& f) {
  require_size(piece.vertex_count(), f, "piece");
  require_roots(piece, root_labels, f.k);
  const std::size_t r = piece.root_count();
  std::vector<Residue> out;
  out.reserve(piece.edge_count());
  for (std::size_t i = 0; i < piece.vertex_count(); ++i) {
    const std::uint32_t par = piece.parent(i);
    const Residue pl = par < r ? root_labels[par] : f.labels[par - r];
    out.push_back((pl + f.labels[i]) % f.k);
  }
  return out;
}

CountProfile count_profile(const Tree& t, const Labeling& f) {
  CountProfile p{std::vector<std::size_t>(f.k, 0), std::vector<std::size_t>(f.k, 0)};
  for (Residue x : f.labels) ++p.v_counts[x];
  for (Residue w : edge_weights(t, f)) ++p.e_counts[w];
  return p;
}

CountProfile count_profile(const RootedPiece& piece, std::span<const Residue> root_labels,
                           const Labeling& f) {
  CountProfile p{std::vector<std::size_t>(f.k, 0), std::vector<std::size_t>(f.k, 0)};
  for (Residue w : edge_weights(piece, root_labels, f)) ++p.e_counts[w];
  for (Residue x : f.labels) ++p.v_counts[x];
  return p;
}

std::string Violation::describe() const {
  const char* tag = kind == Kind::vertex ? "v" : "e";
  return std::string(tag) + "_" + std::to_string(a) + "=" + std::to_string(count_a) + " vs " +
         tag + "_" + std::to_string(b) + "=" + std::to_string(count_b);
}

std::optional<Violation> first_violation(const CountProfile& profile) {
  auto scan = [](std::span<const std::size_t> c, Violation::Kind kind) -> std::optional<Violation> {
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        if (c[a] > c[b] + 1 || c[b] > c[a] + 1)
          return Violation{kind, static_cast<Residue>(a), static_cast<Residue>(b), c[a], c[b]};
    return std::nullopt;
  };
  if (auto v = scan(profile.v_counts, Violation::Kind::vertex)) return v;
  return scan(profile.e_counts, Violation::Kind::edge);
}

CordialityReport check_k_cordial(const Tree& t, const Labeling& f) {
  CordialityReport r;
  r.profile = count_profile(t, f);
  r.violation = first_violation(r.profile);
  r.cordial = !r.violation.has_value();
  return r;
}

bool is_k_cordial(const Tree& t, const Labeling& f) { return check_k_cordial(t, f).cordial; }

bool satisfies_rooted_condition(const CountProfile& profile, Residue heavy) {
  const auto& v = profile.v_counts;
  const auto& e = profile.e_counts;
  if (heavy >= e.size()) return false;
  const auto [vmin, vmax] = std::minmax_element(v.begin(), v.end());
  if (*vmax > *vmin + 1) return false;
  std::size_t lo = SIZE_MAX, hi = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > e[heavy]) return false;       // e_heavy - e_i >= 0
    if (e[heavy] > e[i] + 2) return false;   // e_heavy - e_i <= 2
    if (i == heavy) continue;
    lo = std::min(lo, e[i]);
    hi = std::max(hi, e[i]);
  }
  return lo == SIZE_MAX || hi <= lo + 1;
}

bool satisfies_rooted_condition(const RootedPiece& piece, std::span<const Residue> root_labels,
                                Residue heavy, const Labeling& f) {
  return satisfies_rooted_condition(count_profile(piece, root_labels, f), heavy);
}

Labeling rotate(const Labeling& f, Residue a) {
  Labeling out = f;
  for (auto& x : out.labels) x = static_cast<Residue>((x + a % f.k) % f.k);
  return out;
}

Labeling negate(const Labeling& f) {
  Labeling out = f;
  for (auto& x : out.labels) x = (f.k - x) % f.k;
  return out;
}

Balance balance_of(std::span<const std::size_t> counts) {
  Balance b;
  if (counts.empty()) return b;
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  if (*hi == *lo) return b;
  if (*hi > *lo + 1) {
    b.state = Balance::State::invalid;
    return b;
  }
  b.state = Balance::State::spread_one;
  for (std::size_t a = 0; a < counts.size(); ++a)
    (counts[a] == *lo ? b.minority : b.majority).push_back(static_cast<Residue>(a));
  return b;
}

MinorityMajority minority_majority(const CountProfile& profile) {
  return {balance_of(profile.v_counts), balance_of(profile.e_counts)};
}

}  // namespace cordial
