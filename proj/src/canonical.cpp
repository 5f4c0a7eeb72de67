#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "cordial/tree.hpp"
#include "view.hpp"

namespace cordial {

namespace {

// Bottom-up AHU encoding. children(x) lists the children of x; order is any
// top-down order (parents before children).
template <class Children>
std::vector<std::string> subtree_codes(std::size_t nodes,
                                       std::span<const std::uint32_t> order,
                                       Children&& children) {
  std::vector<std::string> code(nodes);
  std::vector<std::string_view> parts;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::uint32_t x = *it;
    parts.clear();
    for (std::uint32_t c : children(x)) parts.emplace_back(code[c]);
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto p : parts) s += p;
    s += ')';
    code[x] = std::move(s);
  }
  return code;
}

// BFS order from root plus the resulting parent array.
void root_tree(const Tree& t, Vertex root, std::vector<std::uint32_t>& order,
               std::vector<Vertex>& parent) {
  parent.assign(t.size(), root);
  order.assign(1, root);
  order.reserve(t.size());
  for (std::size_t h = 0; h < order.size(); ++h) {
    const Vertex x = order[h];
    for (Vertex y : t.neighbors(x)) {
      if (x != root && y == parent[x]) continue;
      parent[y] = x;
      order.push_back(y);
    }
  }
}

std::string rooted_tree_code(const Tree& t, Vertex root) {
  std::vector<std::uint32_t> order;
  std::vector<Vertex> parent;
  root_tree(t, root, order, parent);
  std::vector<std::vector<std::uint32_t>> kids(t.size());
  for (std::size_t i = 1; i < order.size(); ++i) kids[parent[order[i]]].push_back(order[i]);
  auto codes = subtree_codes(t.size(), order,
                             [&](std::uint32_t x) -> const auto& { return kids[x]; });
  return std::move(codes[root]);
}

std::vector<Vertex> centroids(const Tree& t) {
  const std::size_t n = t.size();
  std::vector<std::uint32_t> order;
  std::vector<Vertex> parent;
  root_tree(t, 0, order, parent);
  std::vector<std::size_t> size(n, 1);
  for (std::size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t worst = n - size[v];
    for (Vertex y : t.neighbors(v))
      if (y != 0 && parent[y] == v) worst = std::max(worst, size[y]);
    if (2 * worst <= n) out.push_back(v);
  }
  return out;
}

// Rooted shape used while growing enumerations: node 0 is the root.
struct Shape {
  std::vector<std::int32_t> parent;  // parent[0] == -1

  std::string code() const {
    const std::size_t n = parent.size();
    std::vector<std::vector<std::uint32_t>> kids(n);
    for (std::size_t v = 1; v < n; ++v) kids[parent[v]].push_back(static_cast<std::uint32_t>(v));
    std::vector<std::uint32_t> order{0};
    for (std::size_t h = 0; h < order.size(); ++h)
      for (auto c : kids[order[h]]) order.push_back(c);
    return std::move(subtree_codes(n, order, [&](std::uint32_t x) -> const auto& { return kids[x]; })[0]);
  }

  static Shape from_code(std::string_view code) {
    Shape s;
    std::vector<std::int32_t> stack;
    for (char ch : code) {
      if (ch == '(') {
        s.parent.push_back(stack.empty() ? -1 : stack.back());
        stack.push_back(static_cast<std::int32_t>(s.parent.size() - 1));
      } else {
        stack.pop_back();
      }
    }
    return s;
  }
};

std::size_t code_nodes(std::string_view code) {
  return static_cast<std::size_t>(std::count(code.begin(), code.end(), '('));
}

}  // namespace

Tree tree_from_code(const CanonicalCode& rooted_code) {
  const Shape s = Shape::from_code(rooted_code.code);
  if (s.parent.empty()) throw Error(ErrorCode::invalid_argument, "empty canonical code");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < s.parent.size(); ++v)
    edges.push_back({static_cast<Vertex>(s.parent[v]), static_cast<Vertex>(v)});
  return Tree::from_edges(s.parent.size(), std::move(edges));
}

CanonicalCode canonical_code(const Tree& t) {
  std::string best;
  for (Vertex c : centroids(t)) {
    std::string code = rooted_tree_code(t, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return {std::move(best)};
}

CanonicalForm canonical_form(const RootedPiece& piece, std::span<const Residue> root_labels) {
  const std::size_t r = piece.root_count();
  if (!root_labels.empty() && root_labels.size() != r)
    throw Error(ErrorCode::size_mismatch, "root label count does not match root count");

  std::vector<std::uint32_t> order;
  order.reserve(piece.node_count());
  for (std::uint32_t x = 0; x < r; ++x) order.push_back(x);
  for (std::size_t h = 0; h < order.size(); ++h)
    for (auto c : piece.children(order[h])) order.push_back(c);
  const auto codes = subtree_codes(piece.node_count(), order,
                                   [&](std::uint32_t x) { return piece.children(x); });

  CanonicalForm form;
  form.root_order.resize(r);
  std::iota(form.root_order.begin(), form.root_order.end(), 0u);
  auto root_key = [&](std::uint32_t x) {
    return std::make_tuple(root_labels.empty() ? Residue{0} : root_labels[x],
                           std::string_view(codes[x]), x);
  };
  std::sort(form.root_order.begin(), form.root_order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return root_key(a) < root_key(b); });

  std::string& out = form.code.code;
  for (std::size_t j = 0; j < r; ++j) {
    const std::uint32_t x = form.root_order[j];
    if (j) out += '|';
    if (!root_labels.empty()) out += std::to_string(root_labels[x]) + ':';
    out += codes[x];
  }

  // Preorder, children sorted by code then id.
  std::vector<std::uint32_t> stack;
  std::vector<std::uint32_t> kids;
  for (std::size_t j = 0; j < r; ++j) {
    stack.push_back(form.root_order[j]);
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      if (x >= r) form.vertex_order.push_back(static_cast<std::uint32_t>(x - r));
      auto ch = piece.children(x);
      kids.assign(ch.begin(), ch.end());
      std::sort(kids.begin(), kids.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::tie(codes[a], a) < std::tie(codes[b], b);
      });
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
  }
  return form;
}

CanonicalCode canonical_code(const RootedPiece& piece) {
  return canonical_form(piece).code;
}

RootedPiece apply_canonical_order(const RootedPiece& piece, const CanonicalForm& form) {
  const std::size_t r = piece.root_count();
  std::vector<std::uint32_t> new_id(piece.node_count());
  for (std::size_t j = 0; j < r; ++j) new_id[form.root_order[j]] = static_cast<std::uint32_t>(j);
  for (std::size_t j = 0; j < form.vertex_order.size(); ++j)
    new_id[r + form.vertex_order[j]] = static_cast<std::uint32_t>(r + j);
  std::vector<std::uint32_t> parents(piece.vertex_count());
  for (std::size_t j = 0; j < form.vertex_order.size(); ++j)
    parents[j] = new_id[piece.parent(form.vertex_order[j])];
  return RootedPiece::from_parents(r, std::move(parents));
}

std::vector<Tree> enumerate_trees(std::size_t n) {
  if (n < 1 || n > 12)
    throw Error(ErrorCode::invalid_argument, "tree enumeration supports 1 <= n <= 12");
  // Every tree on m+1 vertices arises from one on m vertices by adding a leaf.
  std::set<std::string> level{"()"};
  for (std::size_t m = 1; m < n; ++m) {
    std::set<std::string> next;
    for (const auto& code : level) {
      const Tree base = tree_from_code({code});
      std::vector<Edge> edges(base.edges().begin(), base.edges().end());
      for (Vertex v = 0; v < base.size(); ++v) {
        auto grown = edges;
        grown.push_back({v, static_cast<Vertex>(base.size())});
        next.insert(canonical_code(Tree::from_edges(base.size() + 1, std::move(grown))).code);
      }
    }
    level = std::move(next);
  }
  std::vector<Tree> out;
  out.reserve(level.size());
  for (const auto& code : level) out.push_back(tree_from_code({code}));
  return out;
}

namespace {

// Codes of rooted trees with exactly m non-root nodes, sorted.
std::vector<std::string> rooted_tree_codes(std::size_t m) {
  std::set<std::string> level{"()"};
  for (std::size_t step = 0; step < m; ++step) {
    std::set<std::string> next;
    for (const auto& code : level) {
      const Shape s = Shape::from_code(code);
      for (std::size_t v = 0; v < s.parent.size(); ++v) {
        Shape g = s;
        g.parent.push_back(static_cast<std::int32_t>(v));
        next.insert(g.code());
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

}  // namespace

std::vector<RootedPiece> enumerate_rooted_forests(std::size_t p, std::size_t max_roots) {
  if (p < 1 || p > 8)
    throw Error(ErrorCode::invalid_argument, "rooted forest enumeration supports 1 <= p <= 8");
  if (max_roots < 1) throw Error(ErrorCode::invalid_argument, "max_roots must be >= 1");

  // Components are rooted trees with at least one non-root node; a forest is a
  // non-increasing sequence of component indices.
  std::vector<std::string> components;
  for (std::size_t m = p; m >= 1; --m)
    for (auto& c : rooted_tree_codes(m)) components.push_back(std::move(c));

  std::vector<RootedPiece> out;
  std::vector<std::size_t> chosen;
  auto build = [&]() {
    const std::size_t r = chosen.size();
    std::vector<std::uint32_t> parents;
    for (std::size_t j = 0; j < r; ++j) {
      const Shape s = Shape::from_code(components[chosen[j]]);
      const std::size_t base = r + parents.size();  // node id of shape node 1
      for (std::size_t v = 1; v < s.parent.size(); ++v) {
        const auto par = static_cast<std::size_t>(s.parent[v]);
        parents.push_back(static_cast<std::uint32_t>(par == 0 ? j : base + par - 1));
      }
    }
    out.push_back(RootedPiece::from_parents(r, std::move(parents)));
  };
  auto recurse = [&](auto&& self, std::size_t from, std::size_t remaining) -> void {
    if (remaining == 0) {
      build();
      return;
    }
    if (chosen.size() == max_roots) return;
    for (std::size_t i = from; i < components.size(); ++i) {
      const std::size_t m = code_nodes(components[i]) - 1;
      if (m > remaining) continue;
      chosen.push_back(i);
      self(self, i, remaining - m);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, p);
  return out;
}

}  // namespace cordial
