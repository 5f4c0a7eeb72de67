#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cordial/tree.hpp"

namespace cordial {

/// Assignment of residues mod k to the vertices of a structure. For rooted
/// pieces the labels cover the non-root vertices only; root labels travel
/// separately as fixed context.
struct Labeling {
  Residue k = 0;
  std::vector<Residue> labels;

  /// Throws Error(invalid_argument) unless k >= 1 and every label is < k.
  static Labeling make(Residue k, std::vector<Residue> labels);

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// v_counts[a]: vertices labelled a. e_counts[a]: edges of weight a.
struct CountProfile {
  std::vector<std::size_t> v_counts;
  std::vector<std::size_t> e_counts;

  friend bool operator==(const CountProfile&, const CountProfile&) = default;
};

std::vector<Residue> edge_weights(const Tree& t, const Labeling& f);
std::vector<Residue> edge_weights(const RootedPiece& piece,
                                  std::span<const Residue> root_labels,
                                  const Labeling& f);

CountProfile count_profile(const Tree& t, const Labeling& f);
/// Roots are excluded from v_counts; root edges are included in e_counts.
CountProfile count_profile(const RootedPiece& piece,
                           std::span<const Residue> root_labels,
                           const Labeling& f);

struct Violation {
  enum class Kind { vertex, edge };
  Kind kind;
  Residue a;
  Residue b;
  std::size_t count_a;
  std::size_t count_b;

  std::string describe() const;
};

struct CordialityReport {
  bool cordial = false;
  std::optional<Violation> violation;  // lexicographically smallest pair
  CountProfile profile;
};

/// Smallest (a, b) with a < b and |counts[a] - counts[b]| >= 2, vertex counts
/// checked before edge counts.
std::optional<Violation> first_violation(const CountProfile& profile);

CordialityReport check_k_cordial(const Tree& t, const Labeling& f);
bool is_k_cordial(const Tree& t, const Labeling& f);

/// Hovey's rooted-forest condition for one root labelling g and one
/// distinguished weight: vertex counts within 1 of each other, weights other
/// than `heavy` within 1 of each other, and 0 <= e_heavy - e_i <= 2 for all i.
bool satisfies_rooted_condition(const CountProfile& profile, Residue heavy);
bool satisfies_rooted_condition(const RootedPiece& piece,
                                std::span<const Residue> root_labels,
                                Residue heavy, const Labeling& f);

/// f + a (mod k).
Labeling rotate(const Labeling& f, Residue a);
/// -f (mod k).
Labeling negate(const Labeling& f);

/// Residue-count spread of one count array. Minority and majority sets are
/// defined only when max - min == 1; uniform counts leave both empty.
struct Balance {
  enum class State { uniform, spread_one, invalid };
  State state = State::uniform;
  std::vector<Residue> minority;
  std::vector<Residue> majority;
};

struct MinorityMajority {
  Balance labels;
  Balance weights;
};

Balance balance_of(std::span<const std::size_t> counts);
MinorityMajority minority_majority(const CountProfile& profile);

}  // namespace cordial
