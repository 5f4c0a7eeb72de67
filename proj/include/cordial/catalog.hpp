#pragma once

// Published label sequences for small rooted trees and forests, each with a
// claim about the resulting weights or unused labels. The shapes themselves
// are not shipped; callers supply a shape and the checker applies the labels
// in level order (roots first, then by depth, then by vertex index).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cordial/cordiality.hpp"
#include "cordial/tree.hpp"

namespace cordial {

enum class ClaimKind { no_majority_weight, majority_weight, minority_labels, minority_weights };

std::string_view to_string(ClaimKind kind);

struct Claim {
  ClaimKind kind = ClaimKind::no_majority_weight;
  std::vector<Residue> residues;  // sorted, unique
  std::string text;               // as written
};

struct CatalogEntry {
  std::size_t list = 0;
  std::string id;
  std::string raw_labels;       // verbatim token text
  std::vector<Residue> labels;  // parsed tokens (valid when !malformed)
  Claim claim;
  bool malformed = false;
  std::string problem;          // why the entry is malformed
  std::size_t line = 0;         // 1-based line in the source text
};

struct Catalog {
  std::vector<CatalogEntry> entries;

  std::size_t malformed_count() const;
};

/// One entry per line: "LIST:<n> ID:<name> LABELS:<comma ints> CLAIM:<text>".
/// Blank lines and '#' comments are skipped. A single trailing comma in the
/// labels is tolerated; empty interior tokens, non-numbers and values >= 7
/// mark the entry malformed instead of being repaired. Lines missing a field
/// throw Error(parse).
Catalog parse_catalog(std::string_view text);

/// The catalog compiled into the library.
const Catalog& builtin_catalog();

enum class Verdict { claim_holds, claim_fails, shape_size_mismatch };

std::string_view to_string(Verdict v);

struct CatalogCheck {
  Verdict verdict = Verdict::shape_size_mismatch;
  std::vector<Residue> root_labels;
  Labeling labeling;       // piece vertices in piece order
  CountProfile profile;
  std::string detail;
};

/// Piece vertices in level order: by depth, then index.
std::vector<std::uint32_t> level_order(const RootedPiece& shape);

/// Throws Error(parse) for a malformed entry.
CatalogCheck check_catalog_entry(const CatalogEntry& entry, const RootedPiece& shape);

}  // namespace cordial
