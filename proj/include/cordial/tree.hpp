#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cordial/error.hpp"

namespace cordial {

using Vertex = std::uint32_t;
using Residue = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
};

/// Undirected free tree on vertices 0..n-1. Immutable once built.
///
/// Edges keep the order they were supplied in; per-edge outputs such as
/// edge weights follow that order.
class Tree {
 public:
  /// Validates and builds. Throws Error(parse) naming the first defect found:
  /// out-of-range index, self-loop, duplicate edge, cycle, or disconnection.
  static Tree from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }

 private:
  Tree() = default;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> adj_;
};

/// A forest of branches hanging from designated roots.
///
/// Node ids: roots are 0..r-1, piece vertices are r..r+p-1. Roots carry
/// labels supplied by context and are not counted among the p vertices; every
/// vertex has exactly one parent edge, so the piece has p edges in total.
class RootedPiece {
 public:
  /// parents[i] is the node id of the parent of vertex i (node r+i).
  static RootedPiece from_parents(std::size_t root_count,
                                  std::vector<std::uint32_t> parents);

  std::size_t root_count() const noexcept { return roots_; }
  std::size_t vertex_count() const noexcept { return parents_.size(); }
  std::size_t node_count() const noexcept { return roots_ + parents_.size(); }
  std::size_t edge_count() const noexcept { return parents_.size(); }

  /// Parent node id of vertex i (0-based among non-root vertices).
  std::uint32_t parent(std::size_t i) const noexcept { return parents_[i]; }
  std::span<const std::uint32_t> parents() const noexcept { return parents_; }

  /// Children of a node, as node ids, ascending.
  std::span<const std::uint32_t> children(std::uint32_t node) const noexcept {
    return {child_.data() + child_offsets_[node],
            child_.data() + child_offsets_[node + 1]};
  }

  /// Depth of a node; roots have depth 0.
  std::size_t depth(std::uint32_t node) const noexcept { return depth_[node]; }

 private:
  RootedPiece() = default;

  std::size_t roots_ = 0;
  std::vector<std::uint32_t> parents_;
  std::vector<std::uint32_t> child_offsets_;
  std::vector<std::uint32_t> child_;
  std::vector<std::size_t> depth_;
};

/// Isomorphism-invariant encoding of a rooted tree, rooted forest, or free
/// tree. Child order is ignored: plane structure is not part of the identity.
struct CanonicalCode {
  std::string code;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Canonical code plus the node order that realises it.
///
/// root_order[j] is the original root placed at canonical root j;
/// vertex_order[j] is the original vertex (0-based, non-root) placed at
/// canonical vertex j. Canonical vertices are a DFS preorder from the
/// canonical roots with children sorted by code.
struct CanonicalForm {
  CanonicalCode code;
  std::vector<std::uint32_t> root_order;
  std::vector<std::uint32_t> vertex_order;
};

enum class TreeClass { caterpillar, lobster, other };

std::string_view to_string(TreeClass c);

// --- parsing -----------------------------------------------------------------

/// Edge-list document: one "u v" pair per line, '#' comments and blank lines
/// ignored, optional leading "n <count>" header.
Tree parse_tree(std::string_view text);

/// Same grammar with a mandatory "roots <r>" header; vertices 0..r-1 are the
/// roots and no edge may join two roots.
RootedPiece parse_piece(std::string_view text);

std::string format_tree(const Tree& t);
std::string format_piece(const RootedPiece& piece);

// --- structure ---------------------------------------------------------------

/// Maximum path, deterministic: BFS from vertex 0 to the farthest vertex
/// (lowest index on ties), then BFS from there likewise.
std::vector<Vertex> longest_path(const Tree& t);

/// Caterpillar if every vertex is within distance 1 of a maximum path, else
/// lobster if within distance 2, else other.
TreeClass classify(const Tree& t);

/// Tree on n vertices whose rooted structure is the given rooted tree, vertex
/// 0 the root, vertices numbered in preorder.
Tree tree_from_code(const CanonicalCode& rooted_code);

// --- canonical forms ---------------------------------------------------------

/// Rooted at the centroid; for bicentroidal trees the smaller of the two codes.
CanonicalCode canonical_code(const Tree& t);

CanonicalCode canonical_code(const RootedPiece& piece);

/// Root labels become part of the identity: two pieces get equal codes iff
/// some isomorphism maps roots to roots carrying equal labels.
CanonicalForm canonical_form(const RootedPiece& piece,
                             std::span<const Residue> root_labels = {});

/// Relabels piece into the node order described by form.
RootedPiece apply_canonical_order(const RootedPiece& piece,
                                  const CanonicalForm& form);

// --- enumeration -------------------------------------------------------------

/// One representative per isomorphism class of free trees on n vertices,
/// 1 <= n <= 12, sorted by canonical code.
std::vector<Tree> enumerate_trees(std::size_t n);

/// One representative per isomorphism class of rooted forests with p
/// non-root vertices and at most max_roots roots, 1 <= p <= 8.
std::vector<RootedPiece> enumerate_rooted_forests(std::size_t p,
                                                  std::size_t max_roots);

/// Uniform random labeled tree on n vertices (random Pruefer sequence).
Tree random_tree(std::size_t n, std::mt19937_64& rng);

}  // namespace cordial
