// Command-line front end. Talks to the library only through cordial.h.
//
// Exit codes: 0 success, 1 property failure, 2 input error, 3 budget exhausted.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cordial/cordial.h"
#include "json.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;
constexpr std::uint64_t kDefaultMaxNodes = 50'000'000;

struct TreeFree {
  void operator()(cordial_tree* t) const { cordial_tree_free(t); }
};
struct LabelingFree {
  void operator()(cordial_labeling* f) const { cordial_labeling_free(f); }
};
struct PieceFree {
  void operator()(cordial_piece* p) const { cordial_piece_free(p); }
};
struct ListFree {
  void operator()(cordial_tree_list* l) const { cordial_tree_list_free(l); }
};
struct CatalogFree {
  void operator()(cordial_catalog* c) const { cordial_catalog_free(c); }
};
using TreePtr = std::unique_ptr<cordial_tree, TreeFree>;
using LabelingPtr = std::unique_ptr<cordial_labeling, LabelingFree>;
using PiecePtr = std::unique_ptr<cordial_piece, PieceFree>;
using ListPtr = std::unique_ptr<cordial_tree_list, ListFree>;
using CatalogPtr = std::unique_ptr<cordial_catalog, CatalogFree>;

// Owning wrapper for strings handed out by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  cordial_string_free(s);
  return out;
}

// Thrown to unwind a command with a given exit code.
struct Exit {
  int code;
};

int exit_code_for(cordial_status s) {
  switch (s) {
    case CORDIAL_OK: return kOk;
    case CORDIAL_ERR_BUDGET: return kBudget;
    case CORDIAL_ERR_INTERNAL: return kPropertyFailure;
    default: return kInputError;
  }
}

void check(cordial_status s, const std::string& what) {
  if (s == CORDIAL_OK) return;
  std::cerr << "error: " << what << ": " << cordial_status_name(s) << ": " << cordial_last_error() << "\n";
  throw Exit{exit_code_for(s)};
}

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ull;
  return h;
}

// Per-invocation summary printed to stderr (text) or stdout (json).
struct RunReport {
  std::string command;
  std::uint64_t digest = 1469598103934665603ull;
  std::string outcome = "ok";
  std::size_t trees = 0;
  std::size_t failures = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  nlohmann::json extra = nlohmann::json::object();

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

struct Options {
  std::string format = "text";
  std::string out;
};

bool json_output(const Options& o) { return o.format == "json"; }

std::string read_file(const std::string& path, RunReport& report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Exit{kInputError};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  report.digest = fnv1a(ss.str(), report.digest);
  return ss.str();
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: cannot write " << o.out << "\n";
    throw Exit{kInputError};
  }
}

TreePtr load_tree(const std::string& path, RunReport& report) {
  const std::string text = read_file(path, report);
  cordial_tree* t = nullptr;
  check(cordial_tree_parse(text.c_str(), &t), path);
  return TreePtr(t);
}

LabelingPtr load_labeling(const std::string& path, RunReport& report) {
  const std::string text = read_file(path, report);
  cordial_labeling* f = nullptr;
  check(cordial_labeling_from_json(text.c_str(), &f), path);
  return LabelingPtr(f);
}

PiecePtr load_piece(const std::string& path, RunReport& report) {
  const std::string text = read_file(path, report);
  cordial_piece* p = nullptr;
  check(cordial_piece_parse(text.c_str(), &p), path);
  return PiecePtr(p);
}

std::string verdict_text(const cordial_verdict& v) {
  if (v.cordial) return "PASS";
  std::ostringstream ss;
  ss << "FAIL " << (v.violation_kind == 1 ? "v_" : "e_") << v.a << " vs " << (v.violation_kind == 1 ? "v_" : "e_")
     << v.b << " (" << v.count_a << " vs " << v.count_b << ")";
  return ss.str();
}

void finish(const Options& o, RunReport& r) {
  if (r.failures && r.outcome == "ok") r.outcome = "failures";
  if (json_output(o) && !o.out.empty()) return;
  nlohmann::json j = {{"command", r.command},
                      {"input_digest", r.digest},
                      {"outcome", r.outcome},
                      {"seconds", r.seconds()},
                      {"trees", r.trees},
                      {"failures", r.failures}};
  j.update(r.extra);
  if (json_output(o)) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::fprintf(stderr, "# %s digest=%016llx outcome=%s trees=%zu failures=%zu time=%.3fs\n", r.command.c_str(),
               static_cast<unsigned long long>(r.digest), r.outcome.c_str(), r.trees, r.failures, r.seconds());
}

// --- commands -----------------------------------------------------------------

int cmd_label(const Options& o, RunReport& r, const std::string& path, unsigned k, std::uint64_t max_nodes,
              bool trace) {
  auto t = load_tree(path, r);
  r.trees = 1;
  cordial_labeling* raw = nullptr;
  char* trace_text = nullptr;
  if (k == 7) {
    check(cordial_label7(t.get(), &raw, trace ? &trace_text : nullptr), "label");
  } else {
    int found = 0;
    const auto s = cordial_exists_k_cordial(t.get(), k, max_nodes, &found, &raw);
    if (s == CORDIAL_ERR_BUDGET) r.outcome = "budget-exhausted";
    check(s, "label");
    if (!found) {
      std::cerr << "no " << k << "-cordial labeling exists\n";
      r.failures = 1;
      return kPropertyFailure;
    }
  }
  LabelingPtr f(raw);
  cordial_verdict v{};
  check(cordial_verify(t.get(), f.get(), &v), "verify");
  if (!v.cordial) {
    std::cerr << "constructed labeling failed verification: " << verdict_text(v) << "\n";
    r.failures = 1;
    return kPropertyFailure;
  }
  if (trace_text) std::cerr << take(trace_text);
  char* doc = nullptr;
  check(cordial_labeling_to_json(t.get(), f.get(), &doc), "format");
  write_output(o, take(doc));
  return kOk;
}

int cmd_verify(const Options& o, RunReport& r, const std::string& tree_path, const std::string& labeling_path) {
  auto t = load_tree(tree_path, r);
  auto f = load_labeling(labeling_path, r);
  r.trees = 1;
  cordial_verdict v{};
  check(cordial_verify(t.get(), f.get(), &v), "verify");
  r.failures = !v.cordial;
  r.extra["verdict"] = verdict_text(v);
  if (!json_output(o)) write_output(o, verdict_text(v));
  return v.cordial ? kOk : kPropertyFailure;
}

int cmd_sweep(const Options& o, RunReport& r, std::size_t n, unsigned k, std::uint64_t max_nodes) {
  cordial_tree_list* raw = nullptr;
  check(cordial_enumerate_trees(n, &raw), "enumerate");
  ListPtr list(raw);
  std::ostringstream table;
  bool budget = false;
  for (std::size_t i = 0; i < cordial_tree_list_size(list.get()); ++i) {
    const cordial_tree* t = cordial_tree_list_get(list.get(), i);
    int found = 0;
    const auto s = cordial_exists_k_cordial(t, k, max_nodes, &found, nullptr);
    std::string result;
    if (s == CORDIAL_ERR_BUDGET) {
      budget = true;
      result = "budget";
    } else {
      check(s, "search");
      result = found ? "true" : "false";
      r.failures += !found;
    }
    ++r.trees;
    char* code = nullptr;
    check(cordial_tree_canonical_code(t, &code), "canonical code");
    table << i << "\t" << take(code) << "\t" << result << "\n";
  }
  r.extra["n"] = n;
  r.extra["k"] = k;
  if (!json_output(o)) {
    table << "cordial " << r.trees - r.failures << "/" << r.trees << "\n";
    write_output(o, table.str());
  }
  if (r.failures) return kPropertyFailure;
  if (budget) {
    r.outcome = "budget-exhausted";
    return kBudget;
  }
  return kOk;
}

struct HoveyPrinter {
  std::ostringstream out;
  std::size_t index = 0;
};

void print_shape(void* user, const cordial_piece* shape, const cordial_hovey_summary* s) {
  auto* p = static_cast<HoveyPrinter*>(user);
  char* text = nullptr;
  std::string edges;
  if (cordial_piece_format(shape, &text) == CORDIAL_OK) edges = take(text);
  for (char& c : edges)
    if (c == '\n') c = ';';
  p->out << p->index++ << "\troots=" << cordial_piece_root_count(shape) << "\t"
         << (s->certified ? "certified" : (s->complete ? "FAILED" : "incomplete")) << "\tg=" << s->root_labelings_examined
         << "/" << s->root_labelings << "\tnodes=" << s->nodes << "\t" << edges << "\n";
}

int cmd_hovey(const Options& o, RunReport& r, std::size_t p, unsigned k, std::size_t max_roots,
              std::uint64_t max_nodes) {
  HoveyPrinter printer;
  std::size_t shapes = 0, certified = 0;
  int complete = 0;
  check(cordial_hovey_run(p, k, max_roots, max_nodes, print_shape, &printer, &shapes, &certified, &complete),
        "hovey");

  // Trees on p vertices are the other half of the hypothesis.
  cordial_tree_list* raw = nullptr;
  check(cordial_enumerate_trees(p, &raw), "enumerate");
  ListPtr list(raw);
  std::size_t trees_ok = 0;
  const std::size_t trees = cordial_tree_list_size(list.get());
  for (std::size_t i = 0; i < trees; ++i) {
    int found = 0;
    const auto s = cordial_exists_k_cordial(cordial_tree_list_get(list.get(), i), k, max_nodes, &found, nullptr);
    if (s == CORDIAL_ERR_BUDGET) complete = 0;
    else check(s, "search");
    trees_ok += found;
  }
  r.trees = shapes + trees;
  r.failures = (shapes - certified) + (trees - trees_ok);
  r.extra["forests"] = shapes;
  r.extra["forests_certified"] = certified;
  r.extra["free_trees"] = trees;
  r.extra["free_trees_cordial"] = trees_ok;
  if (!json_output(o)) {
    printer.out << "forests certified " << certified << "/" << shapes << "\n";
    printer.out << "trees cordial " << trees_ok << "/" << trees << "\n";
    write_output(o, printer.out.str());
  }
  if (r.failures && complete) return kPropertyFailure;
  if (!complete) {
    r.outcome = "budget-exhausted";
    return kBudget;
  }
  return kOk;
}

int cmd_grace(const Options& o, RunReport& r, const std::string& path, unsigned k, unsigned offset) {
  auto t = load_tree(path, r);
  r.trees = 1;
  cordial_labeling* raw = nullptr;
  check(cordial_grace(t.get(), k, offset, &raw), "grace");
  LabelingPtr f(raw);
  cordial_verdict v{};
  check(cordial_verify(t.get(), f.get(), &v), "verify");
  char* doc = nullptr;
  check(cordial_labeling_to_json(t.get(), f.get(), &doc), "format");
  write_output(o, take(doc));
  r.failures = !v.cordial;
  return v.cordial ? kOk : kPropertyFailure;
}

int cmd_export_dot(const Options& o, RunReport& r, const std::string& tree_path, const std::string& labeling_path) {
  auto t = load_tree(tree_path, r);
  auto f = load_labeling(labeling_path, r);
  r.trees = 1;
  char* dot = nullptr;
  check(cordial_labeling_to_dot(t.get(), f.get(), &dot), "export");
  write_output(o, take(dot));
  return kOk;
}

int cmd_catalog_check(const Options& o, RunReport& r, const std::string& catalog_path, const std::string& shape_path,
                      std::size_t list_no, const std::string& id) {
  CatalogPtr owned;
  const cordial_catalog* cat = nullptr;
  if (catalog_path.empty()) {
    check(cordial_catalog_builtin(&cat), "catalog");
  } else {
    const std::string text = read_file(catalog_path, r);
    cordial_catalog* raw = nullptr;
    check(cordial_catalog_parse(text.c_str(), &raw), catalog_path);
    owned.reset(raw);
    cat = raw;
  }
  const std::size_t size = cordial_catalog_size(cat);
  std::ostringstream out;

  if (shape_path.empty()) {
    // Inventory mode: list entries and flag the malformed ones.
    for (std::size_t i = 0; i < size; ++i) {
      cordial_catalog_entry_info e{};
      check(cordial_catalog_entry(cat, i, &e), "entry");
      if (list_no && e.list != list_no) continue;
      if (!id.empty() && id != e.id) continue;
      out << "list " << e.list << "\t" << e.id << "\t" << (e.malformed ? "MALFORMED" : "ok") << "\t" << e.raw_labels
          << "\t" << e.claim;
      if (e.malformed) out << "\t(" << e.problem << ")";
      out << "\n";
    }
    r.extra["entries"] = size;
    r.extra["malformed"] = cordial_catalog_malformed_count(cat);
    if (!json_output(o)) {
      out << "entries " << size << ", malformed " << cordial_catalog_malformed_count(cat) << "\n";
      write_output(o, out.str());
    }
    return kOk;
  }

  auto shape = load_piece(shape_path, r);
  std::size_t checked = 0, holds = 0, mismatched = 0, malformed = 0;
  for (std::size_t i = 0; i < size; ++i) {
    cordial_catalog_entry_info e{};
    check(cordial_catalog_entry(cat, i, &e), "entry");
    if (list_no && e.list != list_no) continue;
    if (!id.empty() && id != e.id) continue;
    out << "list " << e.list << "\t" << e.id << "\t";
    if (e.malformed) {
      ++malformed;
      out << "malformed\t" << e.problem << "\n";
      continue;
    }
    cordial_verdict_kind verdict{};
    char* detail = nullptr;
    check(cordial_catalog_check(cat, i, shape.get(), &verdict, &detail), "check");
    ++checked;
    const std::string d = take(detail);
    switch (verdict) {
      case CORDIAL_CLAIM_HOLDS: ++holds; out << "claim-holds"; break;
      case CORDIAL_CLAIM_FAILS: out << "claim-fails"; break;
      case CORDIAL_SHAPE_SIZE_MISMATCH: ++mismatched; out << "shape-size-mismatch"; break;
    }
    out << "\t" << e.claim << "\t" << d << "\n";
  }
  r.trees = checked;
  r.failures = checked - holds - mismatched;
  r.extra["checked"] = checked;
  r.extra["holds"] = holds;
  r.extra["size_mismatch"] = mismatched;
  r.extra["malformed"] = malformed;
  if (!json_output(o)) write_output(o, out.str());
  if (checked == 0 && malformed > 0) return kInputError;
  if (checked > 0 && mismatched == checked) return kInputError;
  return r.failures ? kPropertyFailure : kOk;
}

int cmd_fuzz(const Options& o, RunReport& r, std::size_t count, std::size_t min_n, std::size_t max_n,
             std::uint64_t seed) {
  if (min_n < 1 || min_n > max_n) {
    std::cerr << "error: need 1 <= --min-n <= --max-n\n";
    return kInputError;
  }
  std::ostringstream out;
  std::uint64_t state = seed;
  for (std::size_t i = 0; i < count; ++i) {
    // splitmix64 step chooses the size and the tree seed.
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    const std::size_t n = min_n + static_cast<std::size_t>(z % (max_n - min_n + 1));
    cordial_tree* raw = nullptr;
    check(cordial_tree_random(n, z, &raw), "random tree");
    TreePtr t(raw);
    cordial_labeling* lraw = nullptr;
    const auto s = cordial_label7(t.get(), &lraw, nullptr);
    LabelingPtr f(lraw);
    const std::string message = s == CORDIAL_OK ? "not cordial" : cordial_last_error();
    bool ok = s == CORDIAL_OK;
    if (ok) {
      cordial_verdict v{};
      check(cordial_verify(t.get(), f.get(), &v), "verify");
      ok = v.cordial;
    }
    ++r.trees;
    if (!ok) {
      ++r.failures;
      char* text = nullptr;
      check(cordial_tree_format(t.get(), &text), "format");
      out << "failure n=" << n << " seed=" << z << " (" << message << ")\n" << take(text);
    }
  }
  r.extra["seed"] = seed;
  if (!json_output(o)) {
    out << "verified " << r.trees - r.failures << "/" << r.trees << "\n";
    write_output(o, out.str());
  }
  return r.failures ? kPropertyFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify and certify k-cordial labelings of trees"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::string tree_path, labeling_path, shape_path, catalog_path, id;
  unsigned k = 7, offset = 0;
  std::uint64_t max_nodes = kDefaultMaxNodes, seed = 1;
  std::size_t n = 7, p = 7, max_roots = 7, list_no = 0, count = 100, min_n = 1, max_n = 200;
  bool trace = false;

  auto* label = app.add_subcommand("label", "Label a tree (constructive for k=7, searched otherwise)");
  label->add_option("tree", tree_path, "Edge-list file")->required();
  label->add_option("--k", k, "Modulus")->check(CLI::Range(1u, 64u));
  label->add_option("--out", opts.out, "Write the labeling document here");
  label->add_option("--max-nodes", max_nodes, "Search budget for k != 7 (0 = unlimited)");
  label->add_flag("--trace", trace, "Print the construction trace to stderr");

  auto* verify = app.add_subcommand("verify", "Check a labeling document against a tree");
  verify->add_option("tree", tree_path)->required();
  verify->add_option("labeling", labeling_path)->required();
  verify->add_option("--out", opts.out);

  auto* sweep = app.add_subcommand("sweep", "Search every tree on n vertices for a k-cordial labeling");
  sweep->add_option("--n", n)->check(CLI::Range(std::size_t{1}, std::size_t{12}));
  sweep->add_option("--k", k)->check(CLI::Range(1u, 64u));
  sweep->add_option("--max-nodes", max_nodes, "Per-tree budget (0 = unlimited)");
  sweep->add_option("--out", opts.out);

  auto* hovey = app.add_subcommand("hovey", "Certify all rooted forests and trees of a given size");
  hovey->add_option("--p", p)->check(CLI::Range(std::size_t{1}, std::size_t{8}));
  hovey->add_option("--k", k)->check(CLI::Range(1u, 64u));
  hovey->add_option("--max-roots", max_roots, "Largest number of roots");
  hovey->add_option("--max-nodes", max_nodes, "Per-case budget (0 = unlimited)");
  hovey->add_option("--out", opts.out);

  auto* grace = app.add_subcommand("grace", "Grace labeling of a caterpillar");
  grace->add_option("tree", tree_path)->required();
  grace->add_option("--k", k)->check(CLI::Range(1u, 64u));
  grace->add_option("--offset", offset, "Starting residue");
  grace->add_option("--out", opts.out);

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a labeled tree");
  dot->add_option("tree", tree_path)->required();
  dot->add_option("labeling", labeling_path)->required();
  dot->add_option("--out", opts.out);

  auto* catalog = app.add_subcommand("catalog-check", "List catalog entries or check them against a shape");
  catalog->add_option("--shape", shape_path, "Rooted shape file (\"roots r\" header)");
  catalog->add_option("--catalog", catalog_path, "Catalog file instead of the built-in one");
  catalog->add_option("--list", list_no, "Only this list");
  catalog->add_option("--id", id, "Only this entry id");
  catalog->add_option("--out", opts.out);

  auto* fuzz = app.add_subcommand("fuzz", "Label random trees and verify the results");
  fuzz->add_option("--count", count);
  fuzz->add_option("--min-n", min_n);
  fuzz->add_option("--max-n", max_n);
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--out", opts.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  RunReport report;
  for (int i = 1; i < argc; ++i) report.command += (i > 1 ? " " : "") + std::string(argv[i]);
  int rc = kOk;
  try {
    if (*label) rc = cmd_label(opts, report, tree_path, k, max_nodes, trace);
    else if (*verify) rc = cmd_verify(opts, report, tree_path, labeling_path);
    else if (*sweep) rc = cmd_sweep(opts, report, n, k, max_nodes);
    else if (*hovey) rc = cmd_hovey(opts, report, p, k, max_roots, max_nodes);
    else if (*grace) rc = cmd_grace(opts, report, tree_path, k, offset);
    else if (*dot) rc = cmd_export_dot(opts, report, tree_path, labeling_path);
    else if (*catalog) rc = cmd_catalog_check(opts, report, catalog_path, shape_path, list_no, id);
    else if (*fuzz) rc = cmd_fuzz(opts, report, count, min_n, max_n, seed);
  } catch (const Exit& e) {
    rc = e.code;
    if (report.outcome == "ok") report.outcome = rc == kBudget ? "budget-exhausted" : "error";
  }
  finish(opts, report);
  return rc;
}
