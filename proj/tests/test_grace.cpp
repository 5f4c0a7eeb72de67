#include <set>

#include "cordial/grace.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cordial;

TEST_CASE("layout of small caterpillars") {
  const auto p4 = layout(testing::path(4));
  CHECK(p4.part_a == std::vector<Vertex>{0, 2});
  CHECK(p4.part_b == std::vector<Vertex>{1, 3});

  const auto st = layout(testing::star(3));
  const bool centre_alone = (st.part_a == std::vector<Vertex>{0}) || (st.part_b == std::vector<Vertex>{0});
  CHECK(centre_alone);
  CHECK(st.part_a.size() + st.part_b.size() == 4);

  CHECK_THROWS_AS(layout(testing::spider222()), Error);
  try {
    layout(testing::spider222());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_caterpillar);
  }
}

TEST_CASE("layout invariants on random caterpillars") {
  std::mt19937_64 rng(8);
  int seen = 0;
  while (seen < 300) {
    const Tree t = random_tree(1 + rng() % 16, rng);
    if (classify(t) != TreeClass::caterpillar) continue;
    ++seen;
    const auto lay = layout(t);
    std::set<Vertex> a(lay.part_a.begin(), lay.part_a.end()), b(lay.part_b.begin(), lay.part_b.end());
    CHECK(a.size() + b.size() == t.size());
    for (const auto& e : t.edges()) CHECK((a.count(e.u) != a.count(e.v)));
    CHECK(a.count(lay.spine.front()));
    // Sequential labeling makes consecutive edge sums consecutive.
    std::vector<Residue> label(t.size());
    for (std::size_t i = 0; i < lay.part_a.size(); ++i) label[lay.part_a[i]] = static_cast<Residue>(i);
    for (std::size_t i = 0; i < lay.part_b.size(); ++i)
      label[lay.part_b[i]] = static_cast<Residue>(lay.part_a.size() + i);
    std::set<Residue> sums;
    for (const auto& e : t.edges()) sums.insert(label[e.u] + label[e.v]);
    CHECK(sums.size() == t.edge_count());
    if (!sums.empty()) CHECK(*sums.rbegin() - *sums.begin() + 1 == t.edge_count());
  }
}

TEST_CASE("grace_label examples") {
  const auto f = grace_label(testing::path(4), 7, 0);
  CHECK(f.labels == std::vector<Residue>{0, 2, 1, 3});
  const auto w = edge_weights(testing::path(4), f);
  CHECK(std::multiset<Residue>(w.begin(), w.end()) == std::multiset<Residue>{2, 3, 4});
  CHECK(grace_label(testing::path(2), 2, 0).labels == std::vector<Residue>{0, 1});
}

TEST_CASE("grace_label is k-cordial on every caterpillar") {
  for (int n = 1; n <= 10; ++n)
    for (const auto& t : enumerate_trees(static_cast<std::size_t>(n))) {
      if (!oracle::is_caterpillar(testing::adj_of(t))) continue;
      for (Residue k = 2; k <= 12; ++k)
        for (Residue offset : {Residue{0}, Residue{1}, k - 1}) {
          const auto f = grace_label(t, k, offset);
          CHECK(testing::oracle_cordial(t, f));
        }
    }
}

TEST_CASE("rooted_grace gives distinct weights") {
  CHECK(admits_rooted_grace(testing::rooted_path(2)));
  for (std::size_t p : {2u, 3u, 7u}) {
    const auto piece = testing::rooted_path(p);
    const auto f = rooted_grace(piece);
    const auto w = edge_weights(piece, std::vector<Residue>{0}, f);
    CHECK(std::set<Residue>(w.begin(), w.end()).size() == p);
  }
  // p = 4 rooted caterpillar: root - u - v - {a, b}.
  const auto fork = RootedPiece::from_parents(1, {0, 1, 2, 2});
  REQUIRE(admits_rooted_grace(fork));
  const auto w = edge_weights(fork, std::vector<Residue>{0}, rooted_grace(fork));
  CHECK(std::set<Residue>(w.begin(), w.end()) == std::set<Residue>{0, 1, 2, 3});
  // u in the middle of the branch: not admissible.
  CHECK_FALSE(admits_rooted_grace(RootedPiece::from_parents(1, {0, 1, 1})));

  // Two children at the root: not admissible.
  CHECK_FALSE(admits_rooted_grace(RootedPiece::from_parents(1, {0, 0})));
  CHECK_THROWS_AS(rooted_grace(RootedPiece::from_parents(1, {0, 0})), Error);
}

TEST_CASE("grace_with_neighbor_label") {
  const auto leaf = RootedPiece::from_parents(1, {0});
  const auto f = grace_with_neighbor_label(leaf, 7, 4);
  CHECK(f.labels == std::vector<Residue>{4});

  const auto p7 = testing::rooted_path(7);
  std::set<Residue> reached;
  for (Residue w = 0; w < 7; ++w) {
    const auto g = grace_with_neighbor_label(p7, 7, w);
    CHECK(g.labels[0] == w);
    const auto prof = count_profile(p7, std::vector<Residue>{0}, g);
    CHECK(prof.e_counts[w] >= 1);
    reached.insert(g.labels[0]);
  }
  CHECK(reached.size() == 7);

  CHECK_THROWS_AS(grace_with_neighbor_label(RootedPiece::from_parents(2, {0, 1}), 7, 0), Error);
}

TEST_CASE("branch_tree") {
  const auto piece = RootedPiece::from_parents(1, {0, 1, 1, 2});
  const Tree b = branch_tree(piece);
  CHECK(b.size() == 4);
  CHECK(b.degree(0) == 2);
  CHECK(b.degree(1) == 2);
}
