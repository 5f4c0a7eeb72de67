#pragma once

// Complete backtracking over label assignments with count-capacity pruning.
//
// Variables are taken in DFS preorder from the fixed vertices (roots), so each
// assignment settles the weight of every edge back to an earlier vertex.
// Values are tried in order of largest remaining label capacity, ties by
// ascending residue. A branch is cut as soon as the remaining vertices (or
// edges) cannot meet the per-residue lower bounds or exceed the remaining
// room under the caps.

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cordial/cordiality.hpp"
#include "cordial/tree.hpp"

namespace cordial {

/// Bounds on the final counts (context plus new labels) of a search.
///
/// Empty floor/cap vectors mean "no bound". When special_weight is set the
/// edge totals must instead satisfy the rooted-forest relaxation with that
/// weight as the heavy one (still intersected with floor_e/cap_e if given).
struct ConstraintSpec {
  Residue k = 7;
  std::vector<std::size_t> base_v;  // counts of the already-labelled context
  std::vector<std::size_t> base_e;
  std::vector<std::size_t> floor_v;
  std::vector<std::size_t> cap_v;
  std::vector<std::size_t> floor_e;
  std::vector<std::size_t> cap_e;
  std::optional<Residue> special_weight;
  std::vector<std::pair<Vertex, Residue>> fixed;  // trees only

  /// Plain k-cordiality of a standalone structure.
  static ConstraintSpec cordial(Residue k, std::size_t vertices, std::size_t edges);
  /// Rooted-forest condition on p vertices with the given heavy weight.
  static ConstraintSpec rooted(Residue k, std::size_t p, Residue heavy);
};

enum class SolveStatus { found, exhausted, budget_exhausted };

std::string_view to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::exhausted;
  Labeling labeling;      // meaningful when status == found
  std::uint64_t nodes = 0;
  bool from_cache = false;
};

/// Thread-safe memo of piece searches keyed by canonical code, root labels,
/// and effective count bounds. Only definitive outcomes are stored.
class SolveCache {
 public:
  struct Entry {
    bool found = false;
    std::vector<Residue> labels;  // canonical vertex order
  };

  std::optional<Entry> find(const std::string& key) const;
  void store(const std::string& key, Entry entry);
  std::size_t size() const;
  void clear();

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::string, Entry> map;
  };
  Shard& shard_for(const std::string& key) const;
  mutable std::array<Shard, kShards> shards_;
};

struct SearchOptions {
  std::uint64_t max_nodes = 0;  // 0: unlimited
  SolveCache* cache = nullptr;
};

/// Labels every non-fixed vertex of t. Throws Error(invalid_argument) when the
/// spec's vectors do not match k or a fixed vertex is out of range.
SolveResult solve(const Tree& t, const ConstraintSpec& spec, const SearchOptions& options = {});

/// Labels the p non-root vertices of the piece. The search always runs on the
/// canonical form of (piece, root_labels), so the answer does not depend on
/// how the piece was numbered or on cache state.
SolveResult solve(const RootedPiece& piece, std::span<const Residue> root_labels,
                  const ConstraintSpec& spec, const SearchOptions& options = {});

/// Complete decision of k-cordiality; vertex 0 is pinned to label 0, which
/// loses nothing because rotating a cordial labeling keeps it cordial.
SolveResult exists_k_cordial(const Tree& t, Residue k, const SearchOptions& options = {});

struct HoveyCase {
  std::vector<Residue> root_labels;
  Residue heavy = 0;
  SolveStatus status = SolveStatus::exhausted;
  std::vector<Residue> witness;
};

struct HoveyReport {
  bool certified = false;
  bool complete = true;  // false when a budget tripped before a verdict
  std::size_t root_labelings = 0;           // with the first root pinned to 0
  std::size_t root_labelings_examined = 0;  // after merging isomorphic roots
  std::uint64_t nodes = 0;
  std::vector<HoveyCase> cases;
};

/// Checks the rooted-forest condition for every root labelling and every
/// heavy weight. The first root is pinned to 0 (translating all labels by a
/// constant translates every weight by 2a, a bijection of Z_k), and root
/// labellings that differ only by permuting isomorphic components are
/// examined once.
HoveyReport hovey_certify(const RootedPiece& piece, Residue k, const SearchOptions& options = {});

}  // namespace cordial
