#pragma once

// Splitting a tree into a core and a small rooted piece that share only the
// root vertices.
//
// Plans are configurations rather than named shapes: a root (or two) near
// the start of a longest path plus a choice of branches hanging below it,
// with the tree rooted at the far end of the path so branches never reach
// back into the core.

#include <cstddef>
#include <string_view>
#include <vector>

#include "cordial/tree.hpp"

namespace cordial {

enum class SplitKind { exact_tree, short_tree, two_root_forest };

std::string_view to_string(SplitKind kind);

struct SplitPlan {
  SplitKind kind = SplitKind::exact_tree;
  std::size_t target = 0;                    // requested piece size s
  std::vector<Vertex> roots;                 // 1 or 2 vertices kept in the core
  std::vector<std::vector<Vertex>> branches; // per root: children heading removed subtrees
  std::vector<Vertex> members;               // removed vertices, parents before children
  std::vector<Vertex> member_parent;         // tree neighbour towards the root

  std::size_t piece_size() const noexcept { return members.size(); }
};

struct SplitLimits {
  std::size_t exact = 64;
  std::size_t short_plans = 64;
  std::size_t two_root = 256;
};

/// Candidate plans in preference order: single root with exactly s branch
/// vertices, single root with s - 1, then two roots sharing s. Throws
/// Error(invalid_argument) when |t| < s + 1 or s is not in [1, 7], and
/// Error(internal) if no plan exists.
std::vector<SplitPlan> find_splits(const Tree& t, std::size_t s, const SplitLimits& limits = {});

/// The removed part of a plan as a rooted piece: root j is plan.roots[j] and
/// piece vertex i is plan.members[i].
RootedPiece plan_piece(const SplitPlan& plan);

struct SplitResult {
  Tree core;
  std::vector<Vertex> core_to_original;   // ascending
  RootedPiece piece;
  std::vector<Vertex> piece_to_original;  // piece vertex i -> original vertex
  std::vector<Vertex> root_to_original;   // piece root j -> original vertex
  std::vector<Vertex> root_in_core;       // piece root j -> core vertex
};

/// Materialises a plan. Throws Error(invalid_argument) when the plan does not
/// describe a split of t.
SplitResult apply_split(const Tree& t, const SplitPlan& plan);

/// Reassembles the original tree (original vertex ids) from a split.
Tree paste(const SplitResult& split);

}  // namespace cordial
