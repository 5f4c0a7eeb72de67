#include "cordial/cordial.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <random>
#include <string>

#include "cordial/catalog.hpp"
#include "cordial/grace.hpp"
#include "cordial/labeler.hpp"
#include "cordial/labeling_io.hpp"
#include "cordial/search.hpp"

struct cordial_tree {
  cordial::Tree tree;
};
struct cordial_tree_list {
  std::vector<cordial_tree> trees;
};
struct cordial_labeling {
  cordial::Labeling labeling;
};
struct cordial_piece {
  cordial::RootedPiece piece;
};
struct cordial_catalog {
  cordial::Catalog catalog;
};

namespace {

thread_local std::string last_error;

cordial_status code_of(cordial::ErrorCode c) {
  using cordial::ErrorCode;
  switch (c) {
    case ErrorCode::invalid_argument: return CORDIAL_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse: return CORDIAL_ERR_PARSE;
    case ErrorCode::size_mismatch: return CORDIAL_ERR_SIZE_MISMATCH;
    case ErrorCode::not_caterpillar: return CORDIAL_ERR_NOT_CATERPILLAR;
    case ErrorCode::precondition: return CORDIAL_ERR_PRECONDITION;
    case ErrorCode::budget_exhausted: return CORDIAL_ERR_BUDGET;
    case ErrorCode::internal: return CORDIAL_ERR_INTERNAL;
    case ErrorCode::io: return CORDIAL_ERR_IO;
  }
  return CORDIAL_ERR_INTERNAL;
}

cordial_status fail(cordial_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

// Runs body and turns exceptions into status codes.
template <class F>
cordial_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const cordial::Error& e) {
    return fail(code_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CORDIAL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CORDIAL_ERR_INTERNAL, e.what());
  }
}

#define CORDIAL_REQUIRE(cond)                                                     \
  do {                                                                            \
    if (!(cond)) return fail(CORDIAL_ERR_INVALID_ARGUMENT, "null or bad argument: " #cond); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cordial_hovey_summary summarize(const cordial::HoveyReport& r) {
  cordial_hovey_summary s{};
  s.certified = r.certified;
  s.complete = r.complete;
  s.root_labelings = r.root_labelings;
  s.root_labelings_examined = r.root_labelings_examined;
  s.cases = r.cases.size();
  for (const auto& c : r.cases) s.failed_cases += c.status != cordial::SolveStatus::found;
  s.nodes = r.nodes;
  return s;
}

}  // namespace

extern "C" {

const char* cordial_last_error(void) { return last_error.c_str(); }

const char* cordial_status_name(cordial_status status) {
  switch (status) {
    case CORDIAL_OK: return "ok";
    case CORDIAL_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case CORDIAL_ERR_PARSE: return "parse-error";
    case CORDIAL_ERR_SIZE_MISMATCH: return "size-mismatch";
    case CORDIAL_ERR_NOT_CATERPILLAR: return "not-caterpillar";
    case CORDIAL_ERR_PRECONDITION: return "precondition";
    case CORDIAL_ERR_BUDGET: return "budget-exhausted";
    case CORDIAL_ERR_INTERNAL: return "internal-error";
    case CORDIAL_ERR_IO: return "io-error";
  }
  return "unknown";
}

void cordial_string_free(char* s) { std::free(s); }

// --- trees --------------------------------------------------------------------

cordial_status cordial_tree_parse(const char* text, cordial_tree** out) {
  CORDIAL_REQUIRE(text && out);
  return guarded([&] {
    *out = new cordial_tree{cordial::parse_tree(text)};
    return CORDIAL_OK;
  });
}

cordial_status cordial_tree_from_edges(size_t n, const uint32_t* pairs, size_t edge_count,
                                       cordial_tree** out) {
  CORDIAL_REQUIRE(out && (pairs || edge_count == 0));
  return guarded([&] {
    std::vector<cordial::Edge> edges;
    for (size_t i = 0; i < edge_count; ++i) edges.push_back({pairs[2 * i], pairs[2 * i + 1]});
    *out = new cordial_tree{cordial::Tree::from_edges(n, std::move(edges))};
    return CORDIAL_OK;
  });
}

cordial_status cordial_tree_random(size_t n, uint64_t seed, cordial_tree** out) {
  CORDIAL_REQUIRE(out);
  return guarded([&] {
    std::mt19937_64 rng(seed);
    *out = new cordial_tree{cordial::random_tree(n, rng)};
    return CORDIAL_OK;
  });
}

void cordial_tree_free(cordial_tree* t) { delete t; }

size_t cordial_tree_size(const cordial_tree* t) { return t ? t->tree.size() : 0; }

cordial_status cordial_tree_edges(const cordial_tree* t, uint32_t* pairs_out) {
  CORDIAL_REQUIRE(t && pairs_out);
  size_t i = 0;
  for (const auto& e : t->tree.edges()) {
    pairs_out[i++] = e.u;
    pairs_out[i++] = e.v;
  }
  return CORDIAL_OK;
}

cordial_status cordial_tree_format(const cordial_tree* t, char** out) {
  CORDIAL_REQUIRE(t && out);
  return guarded([&] {
    *out = dup_string(cordial::format_tree(t->tree));
    return CORDIAL_OK;
  });
}

cordial_status cordial_tree_classify(const cordial_tree* t, cordial_tree_class* out) {
  CORDIAL_REQUIRE(t && out);
  return guarded([&] {
    switch (cordial::classify(t->tree)) {
      case cordial::TreeClass::caterpillar: *out = CORDIAL_CATERPILLAR; break;
      case cordial::TreeClass::lobster: *out = CORDIAL_LOBSTER; break;
      case cordial::TreeClass::other: *out = CORDIAL_OTHER; break;
    }
    return CORDIAL_OK;
  });
}

cordial_status cordial_tree_canonical_code(const cordial_tree* t, char** out) {
  CORDIAL_REQUIRE(t && out);
  return guarded([&] {
    *out = dup_string(cordial::canonical_code(t->tree).code);
    return CORDIAL_OK;
  });
}

cordial_status cordial_enumerate_trees(size_t n, cordial_tree_list** out) {
  CORDIAL_REQUIRE(out);
  return guarded([&] {
    auto list = new cordial_tree_list;
    for (auto& t : cordial::enumerate_trees(n)) list->trees.push_back({std::move(t)});
    *out = list;
    return CORDIAL_OK;
  });
}

size_t cordial_tree_list_size(const cordial_tree_list* list) { return list ? list->trees.size() : 0; }

const cordial_tree* cordial_tree_list_get(const cordial_tree_list* list, size_t i) {
  if (!list || i >= list->trees.size()) return nullptr;
  return &list->trees[i];
}

void cordial_tree_list_free(cordial_tree_list* list) { delete list; }

// --- labelings ----------------------------------------------------------------

cordial_status cordial_labeling_create(uint32_t k, const uint32_t* labels, size_t n, cordial_labeling** out) {
  CORDIAL_REQUIRE(out && (labels || n == 0));
  return guarded([&] {
    *out = new cordial_labeling{cordial::Labeling::make(k, {labels, labels + n})};
    return CORDIAL_OK;
  });
}

void cordial_labeling_free(cordial_labeling* f) { delete f; }

uint32_t cordial_labeling_k(const cordial_labeling* f) { return f ? f->labeling.k : 0; }

size_t cordial_labeling_size(const cordial_labeling* f) { return f ? f->labeling.labels.size() : 0; }

const uint32_t* cordial_labeling_data(const cordial_labeling* f) {
  return f ? f->labeling.labels.data() : nullptr;
}

cordial_status cordial_labeling_from_json(const char* text, cordial_labeling** out) {
  CORDIAL_REQUIRE(text && out);
  return guarded([&] {
    auto doc = cordial::parse_labeling_json(text);
    *out = new cordial_labeling{std::move(doc.labeling)};
    return CORDIAL_OK;
  });
}

cordial_status cordial_labeling_to_json(const cordial_tree* t, const cordial_labeling* f, char** out) {
  CORDIAL_REQUIRE(t && f && out);
  return guarded([&] {
    *out = dup_string(cordial::labeling_json(t->tree, f->labeling));
    return CORDIAL_OK;
  });
}

cordial_status cordial_labeling_to_dot(const cordial_tree* t, const cordial_labeling* f, char** out) {
  CORDIAL_REQUIRE(t && f && out);
  return guarded([&] {
    *out = dup_string(cordial::to_dot(t->tree, f->labeling));
    return CORDIAL_OK;
  });
}

cordial_status cordial_verify(const cordial_tree* t, const cordial_labeling* f, cordial_verdict* out) {
  CORDIAL_REQUIRE(t && f && out);
  return guarded([&] {
    const auto r = cordial::check_k_cordial(t->tree, f->labeling);
    *out = cordial_verdict{};
    out->cordial = r.cordial;
    if (r.violation) {
      out->violation_kind = r.violation->kind == cordial::Violation::Kind::vertex ? 1 : 2;
      out->a = r.violation->a;
      out->b = r.violation->b;
      out->count_a = r.violation->count_a;
      out->count_b = r.violation->count_b;
    }
    return CORDIAL_OK;
  });
}

// --- construction -------------------------------------------------------------

cordial_status cordial_label7(const cordial_tree* t, cordial_labeling** out, char** trace_out) {
  CORDIAL_REQUIRE(t && out);
  return guarded([&] {
    auto cert = cordial::label_tree_7(t->tree);
    if (!cert.verified) return fail(CORDIAL_ERR_INTERNAL, "labeling failed verification");
    if (trace_out) {
      std::string text;
      for (const auto& step : cert.trace) text += step.describe() + "\n";
      *trace_out = dup_string(text);
    }
    *out = new cordial_labeling{std::move(cert.labeling)};
    return CORDIAL_OK;
  });
}

cordial_status cordial_exists_k_cordial(const cordial_tree* t, uint32_t k, uint64_t max_nodes, int* found,
                                        cordial_labeling** witness) {
  CORDIAL_REQUIRE(t && found);
  return guarded([&] {
    cordial::SearchOptions opts;
    opts.max_nodes = max_nodes;
    auto r = cordial::exists_k_cordial(t->tree, k, opts);
    if (r.status == cordial::SolveStatus::budget_exhausted)
      return fail(CORDIAL_ERR_BUDGET, "search budget of " + std::to_string(max_nodes) + " nodes exhausted");
    *found = r.status == cordial::SolveStatus::found;
    if (witness) *witness = *found ? new cordial_labeling{std::move(r.labeling)} : nullptr;
    return CORDIAL_OK;
  });
}

cordial_status cordial_grace(const cordial_tree* t, uint32_t k, uint32_t offset, cordial_labeling** out) {
  CORDIAL_REQUIRE(t && out);
  return guarded([&] {
    *out = new cordial_labeling{cordial::grace_label(t->tree, k, offset)};
    return CORDIAL_OK;
  });
}

// --- pieces -------------------------------------------------------------------

cordial_status cordial_piece_parse(const char* text, cordial_piece** out) {
  CORDIAL_REQUIRE(text && out);
  return guarded([&] {
    *out = new cordial_piece{cordial::parse_piece(text)};
    return CORDIAL_OK;
  });
}

void cordial_piece_free(cordial_piece* piece) { delete piece; }

size_t cordial_piece_root_count(const cordial_piece* piece) { return piece ? piece->piece.root_count() : 0; }

size_t cordial_piece_vertex_count(const cordial_piece* piece) {
  return piece ? piece->piece.vertex_count() : 0;
}

cordial_status cordial_piece_format(const cordial_piece* piece, char** out) {
  CORDIAL_REQUIRE(piece && out);
  return guarded([&] {
    *out = dup_string(cordial::format_piece(piece->piece));
    return CORDIAL_OK;
  });
}

cordial_status cordial_hovey_certify(const cordial_piece* piece, uint32_t k, uint64_t max_nodes,
                                     cordial_hovey_summary* out) {
  CORDIAL_REQUIRE(piece && out);
  return guarded([&] {
    cordial::SearchOptions opts;
    opts.max_nodes = max_nodes;
    *out = summarize(cordial::hovey_certify(piece->piece, k, opts));
    return CORDIAL_OK;
  });
}

cordial_status cordial_hovey_run(size_t p, uint32_t k, size_t max_roots, uint64_t max_nodes,
                                 cordial_shape_callback callback, void* user, size_t* shapes,
                                 size_t* certified_shapes, int* complete) {
  CORDIAL_REQUIRE(shapes && certified_shapes && complete);
  return guarded([&] {
    cordial::SolveCache cache;
    cordial::SearchOptions opts;
    opts.max_nodes = max_nodes;
    opts.cache = &cache;
    *shapes = 0;
    *certified_shapes = 0;
    *complete = 1;
    for (auto& shape : cordial::enumerate_rooted_forests(p, max_roots)) {
      const cordial_hovey_summary s = summarize(cordial::hovey_certify(shape, k, opts));
      ++*shapes;
      *certified_shapes += s.certified;
      if (!s.complete) *complete = 0;
      if (callback) {
        const cordial_piece handle{std::move(shape)};
        callback(user, &handle, &s);
      }
    }
    return CORDIAL_OK;
  });
}

// --- catalog ------------------------------------------------------------------

cordial_status cordial_catalog_builtin(const cordial_catalog** out) {
  CORDIAL_REQUIRE(out);
  return guarded([&] {
    static const cordial_catalog builtin{cordial::builtin_catalog()};
    *out = &builtin;
    return CORDIAL_OK;
  });
}

cordial_status cordial_catalog_parse(const char* text, cordial_catalog** out) {
  CORDIAL_REQUIRE(text && out);
  return guarded([&] {
    *out = new cordial_catalog{cordial::parse_catalog(text)};
    return CORDIAL_OK;
  });
}

void cordial_catalog_free(cordial_catalog* cat) { delete cat; }

size_t cordial_catalog_size(const cordial_catalog* cat) { return cat ? cat->catalog.entries.size() : 0; }

size_t cordial_catalog_malformed_count(const cordial_catalog* cat) {
  return cat ? cat->catalog.malformed_count() : 0;
}

cordial_status cordial_catalog_entry(const cordial_catalog* cat, size_t i, cordial_catalog_entry_info* out) {
  CORDIAL_REQUIRE(cat && out && i < cat->catalog.entries.size());
  const auto& e = cat->catalog.entries[i];
  out->list = e.list;
  out->id = e.id.c_str();
  out->raw_labels = e.raw_labels.c_str();
  out->claim = e.claim.text.c_str();
  out->problem = e.problem.c_str();
  out->label_count = e.labels.size();
  out->malformed = e.malformed;
  return CORDIAL_OK;
}

cordial_status cordial_catalog_check(const cordial_catalog* cat, size_t i, const cordial_piece* shape,
                                     cordial_verdict_kind* out, char** detail) {
  CORDIAL_REQUIRE(cat && shape && out && i < cat->catalog.entries.size());
  return guarded([&] {
    const auto r = cordial::check_catalog_entry(cat->catalog.entries[i], shape->piece);
    switch (r.verdict) {
      case cordial::Verdict::claim_holds: *out = CORDIAL_CLAIM_HOLDS; break;
      case cordial::Verdict::claim_fails: *out = CORDIAL_CLAIM_FAILS; break;
      case cordial::Verdict::shape_size_mismatch: *out = CORDIAL_SHAPE_SIZE_MISMATCH; break;
    }
    if (detail) *detail = dup_string(r.detail);
    return CORDIAL_OK;
  });
}

}  // extern "C"
