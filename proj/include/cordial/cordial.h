/* C interface to the cordial labeling library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns a cordial_status; on failure cordial_last_error() holds
 * a message for the calling thread. Strings returned through char** are
 * owned by the caller and released with cordial_string_free.
 */
#ifndef CORDIAL_H
#define CORDIAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(CORDIAL_BUILDING_LIBRARY)
#define CORDIAL_API __attribute__((visibility("default")))
#else
#define CORDIAL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cordial_status {
  CORDIAL_OK = 0,
  CORDIAL_ERR_INVALID_ARGUMENT = 1,
  CORDIAL_ERR_PARSE = 2,
  CORDIAL_ERR_SIZE_MISMATCH = 3,
  CORDIAL_ERR_NOT_CATERPILLAR = 4,
  CORDIAL_ERR_PRECONDITION = 5,
  CORDIAL_ERR_BUDGET = 6,
  CORDIAL_ERR_INTERNAL = 7,
  CORDIAL_ERR_IO = 8
} cordial_status;

typedef enum cordial_tree_class {
  CORDIAL_CATERPILLAR = 0,
  CORDIAL_LOBSTER = 1,
  CORDIAL_OTHER = 2
} cordial_tree_class;

typedef enum cordial_verdict_kind {
  CORDIAL_CLAIM_HOLDS = 0,
  CORDIAL_CLAIM_FAILS = 1,
  CORDIAL_SHAPE_SIZE_MISMATCH = 2
} cordial_verdict_kind;

typedef struct cordial_tree cordial_tree;
typedef struct cordial_tree_list cordial_tree_list;
typedef struct cordial_labeling cordial_labeling;
typedef struct cordial_piece cordial_piece;
typedef struct cordial_catalog cordial_catalog;

/* Outcome of a cordiality check. violation_kind: 0 none, 1 vertex labels,
 * 2 edge weights; a < b name the lexicographically smallest bad pair. */
typedef struct cordial_verdict {
  int cordial;
  int violation_kind;
  uint32_t a;
  uint32_t b;
  size_t count_a;
  size_t count_b;
} cordial_verdict;

typedef struct cordial_hovey_summary {
  int certified;
  int complete;
  size_t root_labelings;
  size_t root_labelings_examined;
  size_t cases;
  size_t failed_cases;
  uint64_t nodes;
} cordial_hovey_summary;

typedef struct cordial_catalog_entry_info {
  size_t list;
  const char* id;         /* borrowed from the catalog */
  const char* raw_labels; /* borrowed */
  const char* claim;      /* borrowed */
  const char* problem;    /* borrowed; empty unless malformed */
  size_t label_count;
  int malformed;
} cordial_catalog_entry_info;

/* --- errors and strings ---------------------------------------------------- */

CORDIAL_API const char* cordial_last_error(void);
CORDIAL_API const char* cordial_status_name(cordial_status status);
CORDIAL_API void cordial_string_free(char* s);

/* --- trees ----------------------------------------------------------------- */

CORDIAL_API cordial_status cordial_tree_parse(const char* text, cordial_tree** out);
/* pairs holds 2 * edge_count vertex indices. */
CORDIAL_API cordial_status cordial_tree_from_edges(size_t n, const uint32_t* pairs, size_t edge_count,
                                                   cordial_tree** out);
CORDIAL_API cordial_status cordial_tree_random(size_t n, uint64_t seed, cordial_tree** out);
CORDIAL_API void cordial_tree_free(cordial_tree* t);
CORDIAL_API size_t cordial_tree_size(const cordial_tree* t);
/* Writes 2 * (n - 1) indices. */
CORDIAL_API cordial_status cordial_tree_edges(const cordial_tree* t, uint32_t* pairs_out);
CORDIAL_API cordial_status cordial_tree_format(const cordial_tree* t, char** out);
CORDIAL_API cordial_status cordial_tree_classify(const cordial_tree* t, cordial_tree_class* out);
CORDIAL_API cordial_status cordial_tree_canonical_code(const cordial_tree* t, char** out);

CORDIAL_API cordial_status cordial_enumerate_trees(size_t n, cordial_tree_list** out);
CORDIAL_API size_t cordial_tree_list_size(const cordial_tree_list* list);
/* Borrowed; valid until the list is freed. */
CORDIAL_API const cordial_tree* cordial_tree_list_get(const cordial_tree_list* list, size_t i);
CORDIAL_API void cordial_tree_list_free(cordial_tree_list* list);

/* --- labelings ------------------------------------------------------------- */

CORDIAL_API cordial_status cordial_labeling_create(uint32_t k, const uint32_t* labels, size_t n,
                                                   cordial_labeling** out);
CORDIAL_API void cordial_labeling_free(cordial_labeling* f);
CORDIAL_API uint32_t cordial_labeling_k(const cordial_labeling* f);
CORDIAL_API size_t cordial_labeling_size(const cordial_labeling* f);
CORDIAL_API const uint32_t* cordial_labeling_data(const cordial_labeling* f);

CORDIAL_API cordial_status cordial_labeling_from_json(const char* text, cordial_labeling** out);
CORDIAL_API cordial_status cordial_labeling_to_json(const cordial_tree* t, const cordial_labeling* f,
                                                    char** out);
CORDIAL_API cordial_status cordial_labeling_to_dot(const cordial_tree* t, const cordial_labeling* f,
                                                   char** out);
CORDIAL_API cordial_status cordial_verify(const cordial_tree* t, const cordial_labeling* f,
                                          cordial_verdict* out);

/* --- construction ---------------------------------------------------------- */

/* Verified 7-cordial labeling; trace_out (optional) receives one line per
 * construction step. */
CORDIAL_API cordial_status cordial_label7(const cordial_tree* t, cordial_labeling** out, char** trace_out);
/* Complete search with vertex 0 pinned to 0. max_nodes 0 means unlimited.
 * *found is 1 with a witness, 0 when no labeling exists; a tripped budget
 * returns CORDIAL_ERR_BUDGET. */
CORDIAL_API cordial_status cordial_exists_k_cordial(const cordial_tree* t, uint32_t k, uint64_t max_nodes,
                                                    int* found, cordial_labeling** witness);
CORDIAL_API cordial_status cordial_grace(const cordial_tree* t, uint32_t k, uint32_t offset,
                                         cordial_labeling** out);

/* --- rooted pieces and certification --------------------------------------- */

CORDIAL_API cordial_status cordial_piece_parse(const char* text, cordial_piece** out);
CORDIAL_API void cordial_piece_free(cordial_piece* piece);
CORDIAL_API size_t cordial_piece_root_count(const cordial_piece* piece);
CORDIAL_API size_t cordial_piece_vertex_count(const cordial_piece* piece);
CORDIAL_API cordial_status cordial_piece_format(const cordial_piece* piece, char** out);

CORDIAL_API cordial_status cordial_hovey_certify(const cordial_piece* piece, uint32_t k, uint64_t max_nodes,
                                                 cordial_hovey_summary* out);

/* Called once per rooted forest by cordial_hovey_run. */
typedef void (*cordial_shape_callback)(void* user, const cordial_piece* shape,
                                       const cordial_hovey_summary* summary);

/* Certifies every rooted forest with p non-root vertices and at most
 * max_roots roots; *shapes and *certified_shapes count them. */
CORDIAL_API cordial_status cordial_hovey_run(size_t p, uint32_t k, size_t max_roots, uint64_t max_nodes,
                                             cordial_shape_callback callback, void* user, size_t* shapes,
                                             size_t* certified_shapes, int* complete);

/* --- catalog ---------------------------------------------------------------- */

/* Borrowed; lives for the whole process. */
CORDIAL_API cordial_status cordial_catalog_builtin(const cordial_catalog** out);
CORDIAL_API cordial_status cordial_catalog_parse(const char* text, cordial_catalog** out);
CORDIAL_API void cordial_catalog_free(cordial_catalog* cat);
CORDIAL_API size_t cordial_catalog_size(const cordial_catalog* cat);
CORDIAL_API size_t cordial_catalog_malformed_count(const cordial_catalog* cat);
CORDIAL_API cordial_status cordial_catalog_entry(const cordial_catalog* cat, size_t i,
                                                 cordial_catalog_entry_info* out);
/* Malformed entries return CORDIAL_ERR_PARSE. detail (optional) receives the
 * weight counts. */
CORDIAL_API cordial_status cordial_catalog_check(const cordial_catalog* cat, size_t i,
                                                 const cordial_piece* shape, cordial_verdict_kind* out,
                                                 char** detail);

#ifdef __cplusplus
}
#endif

#endif /* CORDIAL_H */
