#include <map>

#include "cordial/catalog.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cordial;

namespace {

const CatalogEntry& find_entry(const Catalog& cat, std::size_t list, const std::string& id, const std::string& raw) {
  for (const auto& e : cat.entries)
    if (e.list == list && e.id == id && e.raw_labels == raw) return e;
  FAIL("entry not found: " << id << " " << raw);
  return cat.entries.front();
}

// Root 0 -> centre -> five leaves.
RootedPiece star_under_root() { return RootedPiece::from_parents(1, {0, 1, 1, 1, 1, 1}); }

}  // namespace

TEST_CASE("built-in catalog inventory") {
  const Catalog& cat = builtin_catalog();
  CHECK(cat.entries.size() == 567);
  std::map<std::size_t, std::size_t> per_list;
  for (const auto& e : cat.entries) ++per_list[e.list];
  const std::map<std::size_t, std::size_t> expect{{1, 68}, {2, 42}, {3, 323}, {4, 16}, {5, 16},
                                                  {6, 56}, {7, 20}, {8, 12}, {9, 14}};
  CHECK(per_list == expect);

  std::vector<std::string> malformed;
  for (const auto& e : cat.entries)
    if (e.malformed) malformed.push_back(e.id + " " + e.raw_labels);
  CHECK(malformed == std::vector<std::string>{"F13 0,0,0,2,3,4,5,16,", "F13 0,0,2,0,34,6,1,5,",
                                              "F22 0,0,,2,4,5,6,3,0,1"});
}

TEST_CASE("malformed entries are reported, not repaired") {
  const Catalog& cat = builtin_catalog();
  const auto& e = find_entry(cat, 3, "F13", "0,0,0,2,3,4,5,16,");
  CHECK(e.malformed);
  CHECK(!e.problem.empty());
  CHECK_THROWS_AS(check_catalog_entry(e, testing::rooted_path(7)), Error);
}

TEST_CASE("claims are shape sensitive") {
  const Catalog& cat = builtin_catalog();
  const auto& h = find_entry(cat, 1, "h", "0,0,1,2,3,4,5,6");
  CHECK(h.claim.kind == ClaimKind::majority_weight);
  const auto r = check_catalog_entry(h, testing::rooted_path(7));
  CHECK(r.verdict == Verdict::claim_fails);
  CHECK(r.profile.e_counts == std::vector<std::size_t>{2, 1, 1, 1, 1, 1, 0});

  const auto& t10 = find_entry(cat, 2, "T10", "0,1,2,3,4,5,6");
  CHECK(t10.claim.kind == ClaimKind::minority_labels);
  CHECK(check_catalog_entry(t10, star_under_root()).verdict == Verdict::claim_holds);

  CHECK(check_catalog_entry(t10, testing::rooted_path(3)).verdict == Verdict::shape_size_mismatch);
}

TEST_CASE("level order puts shallower vertices first") {
  const auto piece = RootedPiece::from_parents(1, {0, 1, 0, 2});
  CHECK(level_order(piece) == std::vector<std::uint32_t>{0, 2, 1, 3});
}

TEST_CASE("parse_catalog") {
  const auto cat = parse_catalog(
      "# comment\n"
      "LIST:1 ID:x LABELS:0,1,2, CLAIM:no majority weight\n"
      "LIST:2 ID:y LABELS:0,9 CLAIM:minority weights 3 and 4\n"
      "LIST:2 ID:z LABELS:0,1 CLAIM:something else\n");
  REQUIRE(cat.entries.size() == 3);
  CHECK(cat.entries[0].labels == std::vector<Residue>{0, 1, 2});
  CHECK_FALSE(cat.entries[0].malformed);
  CHECK(cat.entries[1].malformed);
  CHECK(cat.entries[2].malformed);
  CHECK(cat.malformed_count() == 2);
  CHECK_THROWS_AS(parse_catalog("LIST:1 LABELS:0 CLAIM:no majority weight\n"), Error);
}

TEST_CASE("verdicts are deterministic") {
  const Catalog& cat = builtin_catalog();
  std::mt19937_64 rng(1);
  const auto shape = testing::random_piece(rng, 1, 7);
  for (const auto& e : cat.entries) {
    if (e.malformed) continue;
    const auto a = check_catalog_entry(e, shape);
    const auto b = check_catalog_entry(e, shape);
    CHECK(a.verdict == b.verdict);
    CHECK(a.detail == b.detail);
  }
}
