#pragma once

// Inductive 7-cordial labeling of arbitrary trees.
//
// Trees on at most 7 vertices are labelled directly. Otherwise, depending on
// n mod 7, either a leaf is peeled off and re-attached once the rest is
// labelled, or a small piece is split off, the core labelled, and the piece
// labelled to fit the core's counts (sequentially where possible, by search
// otherwise). Every step is recorded so the result can be replayed.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cordial/cordiality.hpp"
#include "cordial/decompose.hpp"
#include "cordial/search.hpp"
#include "cordial/tree.hpp"

namespace cordial {

enum class PieceSource { grace, search };

std::string_view to_string(PieceSource s);

struct TraceStep {
  enum class Kind { base, leaf_attach, split };
  Kind kind = Kind::base;

  // base: the vertices labelled directly and how.
  std::vector<Vertex> vertices;
  bool base_by_search = false;

  // leaf_attach
  Vertex leaf = 0;
  Vertex attach_at = 0;

  // split: the core labels were negated (optionally) then shifted by
  // `rotation` before the piece was labelled.
  SplitPlan plan;
  bool negated = false;
  Residue rotation = 0;
  PieceSource source = PieceSource::search;
  std::optional<Residue> target_weight;  // grace: root-edge weight

  // Labels placed by this step: vertices, the leaf, or plan.members.
  std::vector<Residue> labels;

  std::string describe() const;
};

struct LabelingCertificate {
  Labeling labeling;
  std::vector<TraceStep> trace;
  bool verified = false;
};

struct LabelerOptions {
  SolveCache* cache = nullptr;            // null: a process-wide cache
  std::uint64_t piece_max_nodes = 2'000'000;
};

/// Always returns a verified certificate; an Error(internal) carrying the
/// offending tree signals a bug rather than a mathematical obstruction.
LabelingCertificate label_tree_7(const Tree& t, const LabelerOptions& options = {});

/// Smallest label c whose vertex count and induced weight (c + attach_label)
/// both sit below their ceilings once a vertex and an edge are added. Such a c
/// exists whenever the core is k-cordial on mk + j vertices with k - j > j - 1.
std::optional<Residue> choose_leaf_label(const CountProfile& core, Residue attach_label);

struct LeafAttachment {
  Tree tree;  // the new leaf is the last vertex
  LabelingCertificate certificate;
};

/// Adds a leaf at attach_at and labels it by choose_leaf_label. Throws
/// Error(precondition) when the core labeling is not cordial or no label fits.
LeafAttachment attach_leaf(const Tree& core, const LabelingCertificate& core_cert, Vertex attach_at);

/// Labels the piece of a split so the pasted tree is 7-cordial, trying the
/// sequential fast path and then the 14 rotations/negations of the core.
/// core_labels covers the original tree (piece entries are ignored) and is
/// rewritten with the chosen transform on success. Returns the split step, or
/// nothing when every variant failed.
std::optional<TraceStep> combine(const Tree& t, std::span<const char> core_alive,
                                 std::vector<Residue>& labels, const SplitPlan& plan,
                                 const LabelerOptions& options = {});

/// Re-derives every step of a trace on t and checks it reproduces the
/// recorded labels. Throws Error(internal) at the first disagreement.
Labeling replay_trace(const Tree& t, std::span<const TraceStep> trace,
                      const LabelerOptions& options = {});

}  // namespace cordial
