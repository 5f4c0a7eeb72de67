// Exercises the shared library through its C header only.

#include <cstring>
#include <string>
#include <thread>

#include "cordial/cordial.h"
#include "doctest.h"

namespace {

cordial_tree* tree(const char* text) {
  cordial_tree* t = nullptr;
  REQUIRE(cordial_tree_parse(text, &t) == CORDIAL_OK);
  return t;
}

std::string take(char* s) {
  std::string out = s;
  cordial_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse errors carry a status and a message") {
  cordial_tree* t = nullptr;
  CHECK(cordial_tree_parse("0 1\n0 1\n", &t) == CORDIAL_ERR_PARSE);
  CHECK(t == nullptr);
  CHECK(std::strlen(cordial_last_error()) > 0);
  CHECK(cordial_tree_parse(nullptr, &t) == CORDIAL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(cordial_status_name(CORDIAL_ERR_BUDGET)) == "budget-exhausted");
}

TEST_CASE("errors are per thread") {
  cordial_tree* t = nullptr;
  CHECK(cordial_tree_parse("x", &t) == CORDIAL_ERR_PARSE);
  std::string other = "unset";
  std::thread th([&] { other = cordial_last_error(); });
  th.join();
  CHECK(other.empty());
  CHECK(std::strlen(cordial_last_error()) > 0);
}

TEST_CASE("tree handles") {
  cordial_tree* t = tree("0 1\n1 2\n2 3\n");
  CHECK(cordial_tree_size(t) == 4);
  uint32_t pairs[6];
  REQUIRE(cordial_tree_edges(t, pairs) == CORDIAL_OK);
  CHECK(pairs[0] == 0);
  CHECK(pairs[5] == 3);
  cordial_tree_class c;
  REQUIRE(cordial_tree_classify(t, &c) == CORDIAL_OK);
  CHECK(c == CORDIAL_CATERPILLAR);
  char* code = nullptr;
  REQUIRE(cordial_tree_canonical_code(t, &code) == CORDIAL_OK);
  CHECK(!take(code).empty());
  char* text = nullptr;
  REQUIRE(cordial_tree_format(t, &text) == CORDIAL_OK);
  CHECK(take(text).find("2 3") != std::string::npos);
  cordial_tree_free(t);

  const uint32_t e[] = {0, 1, 1, 2};
  cordial_tree* u = nullptr;
  REQUIRE(cordial_tree_from_edges(3, e, 2, &u) == CORDIAL_OK);
  CHECK(cordial_tree_size(u) == 3);
  cordial_tree_free(u);
  CHECK(cordial_tree_from_edges(4, e, 2, &u) == CORDIAL_ERR_PARSE);
}

TEST_CASE("enumeration and sweeps") {
  cordial_tree_list* list = nullptr;
  REQUIRE(cordial_enumerate_trees(7, &list) == CORDIAL_OK);
  CHECK(cordial_tree_list_size(list) == 11);
  for (size_t i = 0; i < cordial_tree_list_size(list); ++i) {
    int found = 0;
    cordial_labeling* w = nullptr;
    REQUIRE(cordial_exists_k_cordial(cordial_tree_list_get(list, i), 7, 0, &found, &w) == CORDIAL_OK);
    CHECK(found == 1);
    cordial_verdict v{};
    REQUIRE(cordial_verify(cordial_tree_list_get(list, i), w, &v) == CORDIAL_OK);
    CHECK(v.cordial == 1);
    cordial_labeling_free(w);
  }
  CHECK(cordial_tree_list_get(list, 99) == nullptr);
  cordial_tree_list_free(list);
  CHECK(cordial_enumerate_trees(13, &list) == CORDIAL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("budget") {
  cordial_tree* t = tree("0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 10\n");
  int found = 0;
  CHECK(cordial_exists_k_cordial(t, 7, 2, &found, nullptr) == CORDIAL_ERR_BUDGET);
  cordial_tree_free(t);
}

TEST_CASE("label, verify, json and dot") {
  cordial_tree* t = nullptr;
  REQUIRE(cordial_tree_random(300, 9, &t) == CORDIAL_OK);
  cordial_labeling* f = nullptr;
  char* trace = nullptr;
  REQUIRE(cordial_label7(t, &f, &trace) == CORDIAL_OK);
  CHECK(!take(trace).empty());
  CHECK(cordial_labeling_k(f) == 7);
  CHECK(cordial_labeling_size(f) == 300);
  cordial_verdict v{};
  REQUIRE(cordial_verify(t, f, &v) == CORDIAL_OK);
  CHECK(v.cordial);

  char* json = nullptr;
  REQUIRE(cordial_labeling_to_json(t, f, &json) == CORDIAL_OK);
  cordial_labeling* back = nullptr;
  REQUIRE(cordial_labeling_from_json(json, &back) == CORDIAL_OK);
  cordial_string_free(json);
  CHECK(std::memcmp(cordial_labeling_data(back), cordial_labeling_data(f), 300 * sizeof(uint32_t)) == 0);

  char* dot = nullptr;
  REQUIRE(cordial_labeling_to_dot(t, f, &dot) == CORDIAL_OK);
  CHECK(take(dot).rfind("graph", 0) == 0);
  cordial_labeling_free(back);
  cordial_labeling_free(f);
  cordial_tree_free(t);
}

TEST_CASE("verify reports the violating pair") {
  cordial_tree* t = tree("0 1\n1 2\n");
  const uint32_t bad[] = {0, 0, 1};
  cordial_labeling* f = nullptr;
  REQUIRE(cordial_labeling_create(7, bad, 3, &f) == CORDIAL_OK);
  cordial_verdict v{};
  REQUIRE(cordial_verify(t, f, &v) == CORDIAL_OK);
  CHECK(v.cordial == 0);
  CHECK(v.violation_kind == 1);
  CHECK(v.a == 0);
  CHECK(v.b == 2);
  cordial_labeling_free(f);

  const uint32_t short_labels[] = {0, 1};
  REQUIRE(cordial_labeling_create(7, short_labels, 2, &f) == CORDIAL_OK);
  CHECK(cordial_verify(t, f, &v) == CORDIAL_ERR_SIZE_MISMATCH);
  cordial_labeling_free(f);
  const uint32_t out_of_range[] = {9};
  CHECK(cordial_labeling_create(7, out_of_range, 1, &f) == CORDIAL_ERR_INVALID_ARGUMENT);
  cordial_tree_free(t);
}

TEST_CASE("grace") {
  cordial_tree* t = tree("0 1\n1 2\n2 3\n");
  cordial_labeling* f = nullptr;
  REQUIRE(cordial_grace(t, 7, 0, &f) == CORDIAL_OK);
  const uint32_t* d = cordial_labeling_data(f);
  CHECK(d[0] == 0);
  CHECK(d[1] == 2);
  CHECK(d[2] == 1);
  CHECK(d[3] == 3);
  cordial_labeling_free(f);
  cordial_tree_free(t);

  cordial_tree* spider = tree("0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n");
  CHECK(cordial_grace(spider, 7, 0, &f) == CORDIAL_ERR_NOT_CATERPILLAR);
  cordial_tree_free(spider);
}

TEST_CASE("pieces and certification") {
  cordial_piece* p = nullptr;
  REQUIRE(cordial_piece_parse("roots 1\n0 1\n", &p) == CORDIAL_OK);
  CHECK(cordial_piece_root_count(p) == 1);
  CHECK(cordial_piece_vertex_count(p) == 1);
  cordial_hovey_summary s{};
  REQUIRE(cordial_hovey_certify(p, 7, 0, &s) == CORDIAL_OK);
  CHECK(s.certified);
  CHECK(s.cases == 7);
  CHECK(s.failed_cases == 0);
  cordial_piece_free(p);

  size_t shapes = 0, certified = 0;
  int complete = 0;
  size_t calls = 0;
  auto cb = [](void* user, const cordial_piece*, const cordial_hovey_summary*) { ++*static_cast<size_t*>(user); };
  REQUIRE(cordial_hovey_run(3, 3, 3, 0, cb, &calls, &shapes, &certified, &complete) == CORDIAL_OK);
  CHECK(shapes == 7);
  CHECK(calls == 7);
  CHECK(certified == 7);
  CHECK(complete == 1);
}

TEST_CASE("catalog") {
  const cordial_catalog* cat = nullptr;
  REQUIRE(cordial_catalog_builtin(&cat) == CORDIAL_OK);
  CHECK(cordial_catalog_size(cat) == 567);
  CHECK(cordial_catalog_malformed_count(cat) == 3);
  cordial_catalog_entry_info info{};
  REQUIRE(cordial_catalog_entry(cat, 0, &info) == CORDIAL_OK);
  CHECK(info.list == 1);
  CHECK(std::string(info.id) == "a");
  CHECK(info.label_count == 8);

  cordial_piece* shape = nullptr;
  REQUIRE(cordial_piece_parse("roots 1\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n", &shape) == CORDIAL_OK);
  cordial_verdict_kind verdict{};
  char* detail = nullptr;
  REQUIRE(cordial_catalog_check(cat, 0, shape, &verdict, &detail) == CORDIAL_OK);
  CHECK(!take(detail).empty());

  for (size_t i = 0; i < cordial_catalog_size(cat); ++i) {
    REQUIRE(cordial_catalog_entry(cat, i, &info) == CORDIAL_OK);
    if (info.malformed) {
      CHECK(cordial_catalog_check(cat, i, shape, &verdict, nullptr) == CORDIAL_ERR_PARSE);
      break;
    }
  }
  cordial_piece_free(shape);

  cordial_catalog* own = nullptr;
  REQUIRE(cordial_catalog_parse("LIST:1 ID:q LABELS:0,1 CLAIM:no majority weight\n", &own) == CORDIAL_OK);
  CHECK(cordial_catalog_size(own) == 1);
  cordial_catalog_free(own);
  CHECK(cordial_catalog_parse("garbage\n", &own) == CORDIAL_ERR_PARSE);
}
