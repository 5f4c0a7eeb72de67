#pragma once

// Algorithms over a subtree of a Tree selected by an alive mask. The labeler
// peels vertices off one tree in place instead of copying cores, so the
// structural routines it needs run on this view.

#include <cstdint>
#include <span>
#include <vector>

#include "cordial/decompose.hpp"
#include "cordial/tree.hpp"

namespace cordial::detail {

struct TreeView {
  const Tree& tree;
  std::span<const char> alive;  // empty: every vertex is alive
  std::size_t count;

  explicit TreeView(const Tree& t) : tree(t), alive(), count(t.size()) {}
  TreeView(const Tree& t, std::span<const char> mask, std::size_t n)
      : tree(t), alive(mask), count(n) {}

  bool contains(Vertex v) const noexcept { return alive.empty() || alive[v]; }

  /// Lowest-indexed alive vertex.
  Vertex first() const noexcept {
    if (alive.empty()) return 0;
    for (Vertex v = 0; v < alive.size(); ++v)
      if (alive[v]) return v;
    return 0;
  }
};

inline constexpr std::int32_t kUnreached = -1;

/// BFS distances from src over alive vertices; parent[v] receives the BFS
/// parent when non-null (src is its own parent).
std::vector<std::int32_t> bfs(const TreeView& view, Vertex src,
                              std::vector<Vertex>* parent = nullptr);

/// Farthest alive vertex from src, lowest index on ties.
Vertex farthest(const TreeView& view, Vertex src,
                std::vector<std::int32_t>* dist = nullptr,
                std::vector<Vertex>* parent = nullptr);

std::vector<Vertex> longest_path(const TreeView& view);

/// Distance of every alive vertex to the nearest vertex of sources.
std::vector<std::int32_t> distance_to_set(const TreeView& view,
                                          std::span<const Vertex> sources);

/// Induced tree on the alive vertices; to_original[i] is the view vertex
/// behind induced vertex i (alive vertices in ascending order).
Tree induced_tree(const TreeView& view, std::vector<Vertex>& to_original);

/// Split plans of the alive subtree; categories with a zero limit are
/// skipped. Returns an empty list only when every requested category is empty.
std::vector<SplitPlan> find_splits(const TreeView& view, std::size_t s, const SplitLimits& limits);

}  // namespace cordial::detail
