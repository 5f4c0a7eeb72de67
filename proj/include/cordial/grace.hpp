#pragma once

// Sequential labelings of caterpillars.
//
// Drawing a caterpillar as a bigraph along its spine and numbering each part
// top to bottom makes every edge sum one more than the previous, so both the
// labels and the edge weights are runs of consecutive integers.

#include <vector>

#include "cordial/cordiality.hpp"
#include "cordial/tree.hpp"

namespace cordial {

/// Spine plus both bipartition classes, each ordered by the spine position of
/// the vertex itself (spine vertices) or of its spine neighbour (leaves), then
/// by vertex index.
struct CaterpillarLayout {
  std::vector<Vertex> spine;
  std::vector<Vertex> part_a;  // contains spine[0]
  std::vector<Vertex> part_b;
};

/// Spine from longest_path, oriented to start at its lower-numbered end.
/// Throws Error(not_caterpillar) unless classify(t) is caterpillar.
CaterpillarLayout layout(const Tree& t);

/// Layout around a caller-chosen maximum path.
CaterpillarLayout layout_with_spine(const Tree& t, std::vector<Vertex> spine);

/// part_a gets offset, offset+1, ... in order; part_b continues the run.
Labeling grace_label(const Tree& t, Residue k, Residue offset);
Labeling grace_label(const Tree& t, const CaterpillarLayout& lay, Residue k, Residue offset);

/// Single-root piece whose root has one child u, the branch below the root is
/// a caterpillar, and u ends a longest path of that branch. With the root
/// labelled 0 and k = p, every weight mod p appears exactly once.
Labeling rooted_grace(const RootedPiece& piece);

/// True when rooted_grace accepts the piece.
bool admits_rooted_grace(const RootedPiece& piece);

/// Single-root, single-branch caterpillar piece; sequentially labels the
/// branch with the offset that puts w on the root's neighbour, so with the
/// root at 0 the root edge has weight w. Throws Error(precondition) for other
/// pieces so the caller can fall back to search.
Labeling grace_with_neighbor_label(const RootedPiece& piece, Residue k, Residue w);

/// The branch below a single-root, single-child piece as a free tree; vertex i
/// of the piece is vertex i of the tree.
Tree branch_tree(const RootedPiece& piece);

}  // namespace cordial
