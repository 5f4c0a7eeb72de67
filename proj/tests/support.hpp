#pragma once

#include <random>
#include <vector>

#include "cordial/cordiality.hpp"
#include "cordial/tree.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Edges edges_of(const cordial::Tree& t) {
  oracle::Edges out;
  for (const auto& e : t.edges()) out.push_back({static_cast<int>(e.u), static_cast<int>(e.v)});
  return out;
}

inline oracle::Adj adj_of(const cordial::Tree& t) {
  return oracle::adjacency(static_cast<int>(t.size()), edges_of(t));
}

inline std::vector<int> ints(const cordial::Labeling& f) { return {f.labels.begin(), f.labels.end()}; }

inline bool oracle_cordial(const cordial::Tree& t, const cordial::Labeling& f) {
  return f.labels.size() == t.size() && oracle::is_cordial(static_cast<int>(f.k), edges_of(t), ints(f));
}

inline cordial::Tree path(std::size_t n) {
  std::vector<cordial::Edge> e;
  for (cordial::Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return cordial::Tree::from_edges(n, e);
}

inline cordial::Tree star(std::size_t leaves) {
  std::vector<cordial::Edge> e;
  for (cordial::Vertex i = 1; i <= leaves; ++i) e.push_back({0, i});
  return cordial::Tree::from_edges(leaves + 1, e);
}

// Centre 0 with three legs of length 2.
inline cordial::Tree spider222() {
  return cordial::Tree::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

// Single root with a path of p vertices hanging from it.
inline cordial::RootedPiece rooted_path(std::size_t p) {
  std::vector<std::uint32_t> parents;
  for (std::uint32_t i = 0; i < p; ++i) parents.push_back(i);
  return cordial::RootedPiece::from_parents(1, parents);
}

// Random piece: r roots, p >= r vertices, each hanging from an earlier node.
inline cordial::RootedPiece random_piece(std::mt19937_64& rng, std::size_t r, std::size_t p) {
  std::vector<std::uint32_t> parents;
  // The first r vertices give every root a branch.
  for (std::size_t i = 0; i < p; ++i) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(r + i - 1));
    parents.push_back(i < r ? static_cast<std::uint32_t>(i) : pick(rng));
  }
  return cordial::RootedPiece::from_parents(r, parents);
}

// Rooted piece as a graph on r + p nodes with the roots glued to one extra
// super-node, so that root-preserving isomorphism becomes plain isomorphism
// with a marked vertex. Used with the brute-force check.
inline oracle::Edges piece_edges(const cordial::RootedPiece& piece) {
  oracle::Edges e;
  const int r = static_cast<int>(piece.root_count());
  for (std::size_t i = 0; i < piece.vertex_count(); ++i)
    e.push_back({static_cast<int>(piece.parent(i)), r + static_cast<int>(i)});
  return e;
}

}  // namespace testing
