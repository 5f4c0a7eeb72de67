#include <numeric>

#include "cordial/labeler.hpp"
#include "cordial/search.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cordial;

namespace {

CountProfile piece_profile(const RootedPiece& piece, std::vector<Residue> roots, Residue k,
                           std::vector<Residue> labels) {
  return count_profile(piece, roots, Labeling::make(k, std::move(labels)));
}

}  // namespace

TEST_CASE("edge weights") {
  const Tree p2 = testing::path(2);
  CHECK(edge_weights(p2, Labeling::make(7, {3, 5})) == std::vector<Residue>{1});
  CHECK(edge_weights(testing::path(4), Labeling::make(7, {0, 0, 0, 0})) == std::vector<Residue>{0, 0, 0});
  CHECK(edge_weights(testing::path(3), Labeling::make(7, {2, 6, 4})) == std::vector<Residue>{1, 3});
}

TEST_CASE("count profiles") {
  const auto one = count_profile(parse_tree("n 1\n"), Labeling::make(7, {4}));
  CHECK(one.v_counts[4] == 1);
  CHECK(std::accumulate(one.e_counts.begin(), one.e_counts.end(), 0u) == 0);

  const auto p2 = count_profile(testing::path(2), Labeling::make(7, {0, 1}));
  CHECK(p2.v_counts[0] == 1);
  CHECK(p2.v_counts[1] == 1);
  CHECK(p2.e_counts[1] == 1);

  const auto leaf = RootedPiece::from_parents(1, {0});
  const auto pr = piece_profile(leaf, {2}, 7, {6});
  CHECK(pr.v_counts[6] == 1);
  CHECK(pr.v_counts[2] == 0);
  CHECK(pr.e_counts[1] == 1);
}

TEST_CASE("Labeling::make validates") {
  CHECK_THROWS_AS(Labeling::make(7, {7}), Error);
  CHECK_THROWS_AS(Labeling::make(0, {}), Error);
  CHECK_THROWS_AS(count_profile(testing::path(3), Labeling::make(7, {0, 1})), Error);
}

TEST_CASE("is_k_cordial with violation report") {
  CHECK(is_k_cordial(testing::path(2), Labeling::make(7, {0, 1})));
  const auto r = check_k_cordial(testing::path(3), Labeling::make(7, {0, 0, 1}));
  CHECK_FALSE(r.cordial);
  REQUIRE(r.violation);
  CHECK(r.violation->kind == Violation::Kind::vertex);
  CHECK(r.violation->a == 0);
  CHECK(r.violation->b == 2);
  CHECK(r.violation->count_a == 2);
  CHECK(r.violation->count_b == 0);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 2000; ++trial) {
    const Tree t = random_tree(1 + rng() % 12, rng);
    const Residue k = 2 + static_cast<Residue>(rng() % 6);
    std::vector<Residue> labels(t.size());
    for (auto& x : labels) x = static_cast<Residue>(rng() % k);
    const Labeling f = Labeling::make(k, labels);
    CHECK(is_k_cordial(t, f) == testing::oracle_cordial(t, f));
  }
}

TEST_CASE("rooted-forest condition") {
  const auto leaf = RootedPiece::from_parents(1, {0});
  CHECK(satisfies_rooted_condition(leaf, std::vector<Residue>{3}, 5, Labeling::make(7, {2})));
  CHECK_FALSE(satisfies_rooted_condition(leaf, std::vector<Residue>{3}, 5, Labeling::make(7, {0})));

  // Against the oracle on random labellings of random pieces.
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t r = 1 + rng() % 3, p = r + rng() % 5;
    const auto piece = testing::random_piece(rng, r, p);
    std::vector<Residue> g(r), labels(p);
    for (auto& x : g) x = static_cast<Residue>(rng() % 7);
    for (auto& x : labels) x = static_cast<Residue>(rng() % 7);
    const Residue heavy = static_cast<Residue>(rng() % 7);
    std::vector<int> vc(7, 0), ec(7, 0);
    for (std::size_t i = 0; i < p; ++i) {
      ++vc[labels[i]];
      const auto par = piece.parent(i);
      const Residue pl = par < r ? g[par] : labels[par - r];
      ++ec[(pl + labels[i]) % 7];
    }
    CHECK(satisfies_rooted_condition(piece, g, heavy, Labeling::make(7, labels)) ==
          oracle::rooted_condition(7, vc, ec, static_cast<int>(heavy)));
  }
}

TEST_CASE("rotate and negate") {
  CHECK(rotate(Labeling::make(7, {0, 1, 3}), 5).labels == std::vector<Residue>{5, 6, 1});
  CHECK(rotate(Labeling::make(7, {0, 1, 3}), 0).labels == std::vector<Residue>{0, 1, 3});
  CHECK(negate(Labeling::make(7, {0, 1, 3})).labels == std::vector<Residue>{0, 6, 4});
  const auto f = Labeling::make(7, {4, 2, 6, 0});
  CHECK(negate(negate(f)).labels == f.labels);
  CHECK(rotate(f, 8).labels == rotate(f, 1).labels);

  // Cordial labelings stay cordial under every rotation and under negation.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Tree t = random_tree(1 + rng() % 30, rng);
    const Labeling f = label_tree_7(t).labeling;
    REQUIRE(testing::oracle_cordial(t, f));
    for (Residue a = 0; a < 7; ++a) {
      CHECK(is_k_cordial(t, rotate(f, a)));
      CHECK(is_k_cordial(t, rotate(negate(f), a)));
    }
  }
}

TEST_CASE("a cordial labeling of a 7-vertex tree misses exactly one weight") {
  for (const auto& t : enumerate_trees(7)) {
    const auto r = exists_k_cordial(t, 7);
    REQUIRE(r.status == SolveStatus::found);
    const auto prof = count_profile(t, r.labeling);
    CHECK(std::count(prof.e_counts.begin(), prof.e_counts.end(), 0u) == 1);
  }
}

TEST_CASE("minority and majority") {
  CountProfile flat{std::vector<std::size_t>(7, 1), std::vector<std::size_t>(7, 1)};
  auto mm = minority_majority(flat);
  CHECK(mm.weights.state == Balance::State::uniform);
  CHECK(mm.weights.minority.empty());
  CHECK(mm.weights.majority.empty());

  CountProfile one{std::vector<std::size_t>(7, 1), {2, 1, 1, 1, 1, 1, 1}};
  mm = minority_majority(one);
  CHECK(mm.weights.majority == std::vector<Residue>{0});
  CHECK(mm.weights.minority == std::vector<Residue>{1, 2, 3, 4, 5, 6});

  CountProfile bad{std::vector<std::size_t>(7, 1), {3, 1, 1, 1, 1, 1, 1}};
  CHECK(minority_majority(bad).weights.state == Balance::State::invalid);
}
