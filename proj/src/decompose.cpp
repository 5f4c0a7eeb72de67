#include "cordial/decompose.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "view.hpp"

namespace cordial {

std::string_view to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::exact_tree: return "exact-tree";
    case SplitKind::short_tree: return "short-tree";
    case SplitKind::two_root_forest: return "two-root-forest";
  }
  return "?";
}

namespace detail {

namespace {

// The view rooted at the far end of a longest path.
struct Rooted {
  const TreeView& view;
  std::vector<Vertex> parent;
  std::vector<std::int32_t> depth;
  std::vector<std::size_t> size;

  Rooted(const TreeView& v, Vertex root) : view(v) {
    depth = bfs(view, root, &parent);
    std::vector<Vertex> order;
    order.reserve(view.count);
    for (Vertex x = 0; x < depth.size(); ++x)
      if (depth[x] != kUnreached) order.push_back(x);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return depth[a] > depth[b]; });
    size.assign(depth.size(), 1);
    for (Vertex x : order)
      if (x != root) size[parent[x]] += size[x];
  }

  bool is_child(Vertex y, Vertex x) const { return parent[y] == x && depth[y] == depth[x] + 1; }

  template <class F>
  void for_children(Vertex x, F&& f) const {
    for (Vertex y : view.tree.neighbors(x))
      if (view.contains(y) && is_child(y, x)) f(y);
  }

  bool is_ancestor(Vertex a, Vertex y) const {
    while (depth[y] > depth[a]) y = parent[y];
    return y == a;
  }

  std::string code(Vertex x) const {
    std::vector<std::string> kids;
    for_children(x, [&](Vertex y) { kids.push_back(code(y)); });
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    return out + ")";
  }

  void collect(Vertex c, std::vector<Vertex>& members, std::vector<Vertex>& member_parent) const {
    members.push_back(c);
    member_parent.push_back(parent[c]);
    for_children(c, [&](Vertex y) { collect(y, members, member_parent); });
  }
};

// Children of one root grouped into isomorphism classes of their subtrees;
// interchangeable branches are taken lowest index first.
struct BranchGroup {
  std::size_t size;
  std::vector<Vertex> members;
};

std::vector<BranchGroup> branch_groups(const Rooted& rt, Vertex x, std::size_t max_size,
                                       const std::function<bool(Vertex)>& allowed) {
  std::map<std::string, std::size_t> index;
  std::vector<BranchGroup> groups;
  rt.for_children(x, [&](Vertex c) {
    if (rt.size[c] > max_size || !allowed(c)) return;
    const std::string code = rt.code(c);
    auto [it, fresh] = index.emplace(code, groups.size());
    if (fresh) groups.push_back({rt.size[c], {}});
    groups[it->second].members.push_back(c);
  });
  // Groups were created in order of their smallest child index.
  for (auto& g : groups) std::sort(g.members.begin(), g.members.end());
  std::stable_sort(groups.begin(), groups.end(),
                   [](const BranchGroup& a, const BranchGroup& b) { return a.members[0] < b.members[0]; });
  return groups;
}

// Calls emit for each multiset of branches totalling exactly target, earlier
// groups taken as heavily as possible first. emit returns false to stop.
bool select_branches(const std::vector<BranchGroup>& groups, std::size_t target,
                     const std::function<bool(const std::vector<Vertex>&)>& emit) {
  std::vector<Vertex> chosen;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t g, std::size_t left) {
    if (left == 0) return emit(chosen);
    if (g == groups.size()) return true;
    const auto& grp = groups[g];
    const std::size_t most = std::min(grp.members.size(), left / grp.size);
    for (std::size_t q = most + 1; q-- > 0;) {
      for (std::size_t i = 0; i < q; ++i) chosen.push_back(grp.members[i]);
      const bool go_on = rec(g + 1, left - q * grp.size);
      chosen.resize(chosen.size() - q);
      if (!go_on) return false;
    }
    return true;
  };
  return rec(0, target);
}

SplitPlan make_plan(const Rooted& rt, SplitKind kind, std::size_t target,
                    std::vector<Vertex> roots, std::vector<std::vector<Vertex>> branches) {
  SplitPlan plan;
  plan.kind = kind;
  plan.target = target;
  for (const auto& per_root : branches)
    for (Vertex c : per_root) rt.collect(c, plan.members, plan.member_parent);
  plan.roots = std::move(roots);
  plan.branches = std::move(branches);
  return plan;
}

}  // namespace

std::vector<SplitPlan> find_splits(const TreeView& view, std::size_t s, const SplitLimits& limits) {
  if (s == 0 || s > 7) throw Error(ErrorCode::invalid_argument, "split target must be in [1, 7]");
  if (view.count < s + 1)
    throw Error(ErrorCode::invalid_argument, "tree too small to split off " + std::to_string(s) +
                                                 " vertices");
  const auto path = longest_path(view);
  const Rooted rt(view, path.back());
  const auto from_start = bfs(view, path.front());
  const auto from_path = distance_to_set(view, path);
  const std::int32_t reach = static_cast<std::int32_t>(2 * s);

  // Roots: path vertices walking away from v0, then off-path vertices by
  // distance from v0. Leaves of the rooting cannot hold a branch.
  std::vector<Vertex> candidates;
  for (std::size_t i = 1; i < path.size() && static_cast<std::int32_t>(i) <= reach; ++i)
    candidates.push_back(path[i]);
  std::vector<Vertex> off;
  for (Vertex x = 0; x < from_start.size(); ++x)
    if (from_start[x] != kUnreached && from_start[x] <= reach && from_path[x] > 0 && rt.size[x] > 1)
      off.push_back(x);
  std::stable_sort(off.begin(), off.end(),
                   [&](Vertex a, Vertex b) { return from_start[a] < from_start[b]; });
  candidates.insert(candidates.end(), off.begin(), off.end());

  auto any = [](Vertex) { return true; };
  std::vector<SplitPlan> plans;

  auto single = [&](SplitKind kind, std::size_t target, std::size_t cap) {
    if (target == 0 || cap == 0) return;
    std::size_t made = 0;
    for (Vertex x : candidates) {
      const auto groups = branch_groups(rt, x, target, any);
      const bool go_on = select_branches(groups, target, [&](const std::vector<Vertex>& pick) {
        plans.push_back(make_plan(rt, kind, s, {x}, {pick}));
        return ++made < cap;
      });
      if (!go_on) return;
    }
  };
  single(SplitKind::exact_tree, s, limits.exact);
  single(SplitKind::short_tree, s - 1, limits.short_plans);

  if (limits.two_root > 0 && s >= 2) {
    std::vector<Vertex> near;
    for (Vertex x : candidates)
      if (from_path[x] <= 1) near.push_back(x);
    std::size_t made = 0;
    for (std::size_t i = 0; i < near.size() && made < limits.two_root; ++i) {
      for (std::size_t j = i + 1; j < near.size() && made < limits.two_root; ++j) {
        const Vertex x = near[i], y = near[j];
        const auto gx = branch_groups(rt, x, s - 1, [&](Vertex c) { return !rt.is_ancestor(c, y); });
        const auto gy = branch_groups(rt, y, s - 1, [&](Vertex c) { return !rt.is_ancestor(c, x); });
        if (gx.empty() || gy.empty()) continue;
        for (std::size_t a = s - 1; a >= 1 && made < limits.two_root; --a) {
          select_branches(gx, a, [&](const std::vector<Vertex>& px) {
            return select_branches(gy, s - a, [&](const std::vector<Vertex>& py) {
              plans.push_back(make_plan(rt, SplitKind::two_root_forest, s, {x, y}, {px, py}));
              return ++made < limits.two_root;
            });
          });
        }
      }
    }
  }
  return plans;
}

}  // namespace detail

std::vector<SplitPlan> find_splits(const Tree& t, std::size_t s, const SplitLimits& limits) {
  auto plans = detail::find_splits(detail::TreeView(t), s, limits);
  if (plans.empty())
    throw Error(ErrorCode::internal, "no split of " + std::to_string(s) + " vertices found in a tree on " +
                                         std::to_string(t.size()) + " vertices:\n" + format_tree(t));
  return plans;
}

namespace {

bool adjacent(const Tree& t, Vertex a, Vertex b) {
  const auto nb = t.neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

[[noreturn]] void mismatch(const std::string& what) {
  throw Error(ErrorCode::invalid_argument, "plan does not fit the tree: " + what);
}

}  // namespace

RootedPiece plan_piece(const SplitPlan& plan) {
  const std::size_t r = plan.roots.size();
  if (r == 0 || r > 2) mismatch("needs one or two roots");
  if (plan.members.empty() || plan.members.size() != plan.member_parent.size())
    mismatch("member lists are inconsistent");
  std::map<Vertex, std::uint32_t> node;
  for (std::size_t j = 0; j < r; ++j)
    if (!node.emplace(plan.roots[j], static_cast<std::uint32_t>(j)).second) mismatch("repeated root");
  std::vector<std::uint32_t> parents;
  for (std::size_t i = 0; i < plan.members.size(); ++i) {
    const auto up = node.find(plan.member_parent[i]);
    if (up == node.end())
      mismatch("member " + std::to_string(plan.members[i]) + " does not hang from an earlier vertex");
    parents.push_back(up->second);
    if (!node.emplace(plan.members[i], static_cast<std::uint32_t>(r + i)).second)
      mismatch("repeated member " + std::to_string(plan.members[i]));
  }
  return RootedPiece::from_parents(r, std::move(parents));
}

SplitResult apply_split(const Tree& t, const SplitPlan& plan) {
  const std::size_t n = t.size();
  const std::size_t r = plan.roots.size();
  if (r == 0 || r > 2) mismatch("needs one or two roots");
  if (plan.members.empty() || plan.members.size() != plan.member_parent.size())
    mismatch("member lists are inconsistent");

  for (Vertex x : plan.roots)
    if (x >= n) mismatch("root out of range");
  for (std::size_t i = 0; i < plan.members.size(); ++i) {
    const Vertex m = plan.members[i], par = plan.member_parent[i];
    if (m >= n || par >= n || !adjacent(t, m, par))
      mismatch("member " + std::to_string(m) + " is not joined to its parent");
  }
  RootedPiece piece = [&] {
    try {
      return plan_piece(plan);
    } catch (const Error& e) {
      mismatch(e.what());
    }
  }();
  std::vector<char> in_piece(n, 0);
  for (Vertex m : plan.members) in_piece[m] = 1;
  // Members may only touch their own parent and their own children.
  for (std::size_t i = 0; i < plan.members.size(); ++i)
    for (Vertex y : t.neighbors(plan.members[i]))
      if (y != plan.member_parent[i] && !in_piece[y])
        mismatch("member " + std::to_string(plan.members[i]) + " touches the core");

  std::vector<char> alive(n, 1);
  for (Vertex m : plan.members) alive[m] = 0;
  const detail::TreeView core_view(t, alive, n - plan.members.size());
  std::vector<Vertex> core_to_original;
  Tree core = [&] {
    try {
      return detail::induced_tree(core_view, core_to_original);
    } catch (const Error& e) {
      mismatch(e.what());
    }
  }();

  std::vector<Vertex> roots_in_core;
  for (Vertex x : plan.roots)
    roots_in_core.push_back(static_cast<Vertex>(
        std::lower_bound(core_to_original.begin(), core_to_original.end(), x) - core_to_original.begin()));

  return SplitResult{std::move(core),
                     std::move(core_to_original),
                     std::move(piece),
                     plan.members,
                     plan.roots,
                     std::move(roots_in_core)};
}

Tree paste(const SplitResult& split) {
  std::vector<Edge> edges;
  for (const Edge& e : split.core.edges())
    edges.push_back({split.core_to_original[e.u], split.core_to_original[e.v]});
  const std::size_t r = split.piece.root_count();
  for (std::size_t i = 0; i < split.piece.vertex_count(); ++i) {
    const std::uint32_t par = split.piece.parent(i);
    const Vertex up = par < r ? split.root_to_original[par] : split.piece_to_original[par - r];
    edges.push_back({split.piece_to_original[i], up});
  }
  return Tree::from_edges(split.core.size() + split.piece.vertex_count(), std::move(edges));
}

}  // namespace cordial
