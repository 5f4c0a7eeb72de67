#pragma once

// Labeling documents (JSON) and Graphviz export.

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cordial/cordiality.hpp"
#include "cordial/tree.hpp"

namespace cordial {

struct RootLabel {
  Vertex vertex = 0;
  Residue label = 0;
};

struct LabelingDocument {
  Labeling labeling;
  std::vector<RootLabel> roots;
};

/// {"k", "labels", "valid", "v_counts", "e_counts"} for a tree.
std::string labeling_json(const Tree& t, const Labeling& f);

/// Piece variant: labels cover the non-root vertices, roots carry their fixed
/// labels, and "valid" reports the rooted-forest condition for `heavy`.
std::string labeling_json(const RootedPiece& piece, std::span<const Residue> root_labels,
                          const Labeling& f, Residue heavy);

/// Reads "k", "labels" and the optional "roots"; the derived fields are
/// ignored. Throws Error(parse) on malformed documents.
LabelingDocument parse_labeling_json(std::string_view text);

/// Vertices "v<i>:<label>", edges labelled with their weight.
std::string to_dot(const Tree& t, const Labeling& f);

}  // namespace cordial
