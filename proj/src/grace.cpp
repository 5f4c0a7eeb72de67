#include "cordial/grace.hpp"

#include <algorithm>
#include <tuple>

#include "view.hpp"

namespace cordial {

CaterpillarLayout layout_with_spine(const Tree& t, std::vector<Vertex> spine) {
  const std::size_t n = t.size();
  constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::size_t> pos(n, kNone);
  std::vector<char> on_spine(n, 0);
  for (std::size_t i = 0; i < spine.size(); ++i) {
    pos[spine[i]] = i;
    on_spine[spine[i]] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (on_spine[v]) continue;
    for (Vertex y : t.neighbors(v))
      if (on_spine[y]) pos[v] = pos[y];
    if (pos[v] == kNone || t.degree(v) != 1)
      throw Error(ErrorCode::not_caterpillar,
                  "vertex " + std::to_string(v) + " is not within distance 1 of the spine");
  }

  CaterpillarLayout lay;
  for (Vertex v = 0; v < n; ++v) {
    // Spine vertex i sits in part (i mod 2); a leaf at spine position i sits
    // in the opposite part.
    const bool even = (pos[v] % 2 == 0) == static_cast<bool>(on_spine[v]);
    (even ? lay.part_a : lay.part_b).push_back(v);
  }
  auto by_position = [&](Vertex a, Vertex b) { return std::tie(pos[a], a) < std::tie(pos[b], b); };
  std::sort(lay.part_a.begin(), lay.part_a.end(), by_position);
  std::sort(lay.part_b.begin(), lay.part_b.end(), by_position);
  lay.spine = std::move(spine);
  return lay;
}

CaterpillarLayout layout(const Tree& t) {
  if (classify(t) != TreeClass::caterpillar)
    throw Error(ErrorCode::not_caterpillar, "tree is not a caterpillar");
  auto spine = longest_path(t);
  // Read the spine from its lower-numbered end.
  if (spine.front() > spine.back()) std::reverse(spine.begin(), spine.end());
  return layout_with_spine(t, std::move(spine));
}

Labeling grace_label(const Tree& t, const CaterpillarLayout& lay, Residue k, Residue offset) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "modulus must be >= 1");
  std::vector<Residue> labels(t.size(), 0);
  std::uint64_t next = offset % k;
  for (Vertex v : lay.part_a) labels[v] = static_cast<Residue>(next++ % k);
  for (Vertex v : lay.part_b) labels[v] = static_cast<Residue>(next++ % k);
  return Labeling{k, std::move(labels)};
}

Labeling grace_label(const Tree& t, Residue k, Residue offset) {
  return grace_label(t, layout(t), k, offset);
}

Tree branch_tree(const RootedPiece& piece) {
  if (piece.root_count() != 1 || piece.children(0).size() != 1)
    throw Error(ErrorCode::precondition, "piece must have one root with a single child");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < piece.vertex_count(); ++i)
    if (piece.parent(i) != 0) edges.push_back({piece.parent(i) - 1, static_cast<Vertex>(i)});
  return Tree::from_edges(piece.vertex_count(), std::move(edges));
}

namespace {

// Longest path of the branch starting at the root's child, or empty when that
// child does not end a longest path.
std::vector<Vertex> spine_from_child(const Tree& branch, Vertex child) {
  const detail::TreeView view(branch);
  std::vector<std::int32_t> dist_a, dist_b;
  detail::farthest(view, detail::farthest(view, 0), &dist_a);
  const std::int32_t diameter = *std::max_element(dist_a.begin(), dist_a.end());
  std::vector<Vertex> parent;
  const Vertex end = detail::farthest(view, child, &dist_b, &parent);
  if (dist_b[end] != diameter) return {};
  std::vector<Vertex> path;
  for (Vertex x = end;; x = parent[x]) {
    path.push_back(x);
    if (x == child) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

bool admits_rooted_grace(const RootedPiece& piece) {
  if (piece.root_count() != 1 || piece.children(0).size() != 1) return false;
  const Tree branch = branch_tree(piece);
  if (classify(branch) != TreeClass::caterpillar) return false;
  return !spine_from_child(branch, piece.children(0)[0] - 1).empty();
}

Labeling rooted_grace(const RootedPiece& piece) {
  if (!admits_rooted_grace(piece))
    throw Error(ErrorCode::precondition,
                "rooted sequential labeling needs a single-child root adjacent to the end "
                "of a longest path of a caterpillar branch");
  const Tree branch = branch_tree(piece);
  const Vertex child = piece.children(0)[0] - 1;
  const std::size_t p = piece.vertex_count();

  // Extended tree: the root becomes vertex p, hanging off the branch.
  std::vector<Edge> edges(branch.edges().begin(), branch.edges().end());
  edges.push_back({static_cast<Vertex>(p), child});
  const Tree extended = Tree::from_edges(p + 1, std::move(edges));
  std::vector<Vertex> spine{static_cast<Vertex>(p)};
  for (Vertex v : spine_from_child(branch, child)) spine.push_back(v);

  // The root heads part_a, so it receives 0; the run ends on p == 0 (mod p)
  // at the last vertex of the other part.
  const CaterpillarLayout lay = layout_with_spine(extended, std::move(spine));
  const Labeling full = grace_label(extended, lay, static_cast<Residue>(p), 0);
  return Labeling{static_cast<Residue>(p), {full.labels.begin(), full.labels.begin() + p}};
}

Labeling grace_with_neighbor_label(const RootedPiece& piece, Residue k, Residue w) {
  if (k == 0 || w >= k) throw Error(ErrorCode::invalid_argument, "target weight out of range");
  if (piece.root_count() != 1 || piece.children(0).size() != 1)
    throw Error(ErrorCode::precondition, "piece must have one root with a single child");
  const Tree branch = branch_tree(piece);
  if (classify(branch) != TreeClass::caterpillar)
    throw Error(ErrorCode::precondition, "branch below the root is not a caterpillar");
  const Vertex child = piece.children(0)[0] - 1;
  const CaterpillarLayout lay = layout(branch);

  // Position of the child in the sequential run fixes the offset.
  std::size_t index = 0;
  const auto in_a = std::find(lay.part_a.begin(), lay.part_a.end(), child);
  if (in_a != lay.part_a.end()) {
    index = static_cast<std::size_t>(in_a - lay.part_a.begin());
  } else {
    index = lay.part_a.size() +
            static_cast<std::size_t>(std::find(lay.part_b.begin(), lay.part_b.end(), child) -
                                     lay.part_b.begin());
  }
  const Residue offset = static_cast<Residue>((w + k - index % k) % k);
  Labeling f = grace_label(branch, lay, k, offset);
  if (f.labels[child] != w)
    throw Error(ErrorCode::internal, "sequential offset did not reach the target label");
  return f;
}

}  // namespace cordial
