#include "cordial/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "view.hpp"

namespace cordial {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string edge_text(const Edge& e) {
  return std::to_string(e.u) + " " + std::to_string(e.v);
}

}  // namespace

Tree Tree::from_edges(std::size_t n, std::vector<Edge> edges) {
  if (n == 0) throw Error(ErrorCode::parse, "tree must have at least one vertex");
  std::set<std::pair<Vertex, Vertex>> seen;
  DisjointSets sets(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw Error(ErrorCode::parse, "edge " + edge_text(e) +
                                        " uses a vertex outside [0, " +
                                        std::to_string(n) + ")");
    if (e.u == e.v) throw Error(ErrorCode::parse, "self-loop at vertex " + std::to_string(e.u));
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw Error(ErrorCode::parse, "duplicate edge " + edge_text(e));
    if (!sets.unite(e.u, e.v))
      throw Error(ErrorCode::parse, "cycle detected at edge " + edge_text(e));
  }
  if (edges.size() != n - 1)
    throw Error(ErrorCode::parse, "disconnected input: " + std::to_string(n) +
                                      " vertices but " +
                                      std::to_string(edges.size()) + " edges");

  Tree t;
  t.n_ = n;
  t.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++t.offsets_[e.u + 1];
    ++t.offsets_[e.v + 1];
  }
  std::partial_sum(t.offsets_.begin(), t.offsets_.end(), t.offsets_.begin());
  t.adj_.resize(2 * edges.size());
  std::vector<std::uint32_t> fill(t.offsets_.begin(), t.offsets_.end() - 1);
  for (const Edge& e : edges) {
    t.adj_[fill[e.u]++] = e.v;
    t.adj_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(t.adj_.begin() + t.offsets_[v], t.adj_.begin() + t.offsets_[v + 1]);
  t.edges_ = std::move(edges);
  return t;
}

RootedPiece RootedPiece::from_parents(std::size_t root_count,
                                      std::vector<std::uint32_t> parents) {
  const std::size_t nodes = root_count + parents.size();
  if (root_count == 0)
    throw Error(ErrorCode::invalid_argument, "rooted piece needs at least one root");
  for (std::size_t i = 0; i < parents.size(); ++i) {
    if (parents[i] >= nodes)
      throw Error(ErrorCode::invalid_argument,
                  "piece vertex " + std::to_string(i) + " has parent out of range");
    if (parents[i] == root_count + i)
      throw Error(ErrorCode::invalid_argument,
                  "piece vertex " + std::to_string(i) + " is its own parent");
  }

  RootedPiece piece;
  piece.roots_ = root_count;
  piece.parents_ = std::move(parents);
  piece.child_offsets_.assign(nodes + 1, 0);
  for (std::uint32_t p : piece.parents_) ++piece.child_offsets_[p + 1];
  std::partial_sum(piece.child_offsets_.begin(), piece.child_offsets_.end(),
                   piece.child_offsets_.begin());
  piece.child_.resize(piece.parents_.size());
  std::vector<std::uint32_t> fill(piece.child_offsets_.begin(),
                                  piece.child_offsets_.end() - 1);
  for (std::size_t i = 0; i < piece.parents_.size(); ++i)
    piece.child_[fill[piece.parents_[i]]++] =
        static_cast<std::uint32_t>(root_count + i);

  for (std::uint32_t r = 0; r < root_count; ++r)
    if (piece.children(r).empty())
      throw Error(ErrorCode::invalid_argument,
                  "root " + std::to_string(r) + " has no branch");

  // Every vertex must be reachable from a root; anything else sits on a cycle.
  piece.depth_.assign(nodes, 0);
  std::vector<std::uint32_t> queue;
  std::vector<char> seen(nodes, 0);
  for (std::uint32_t r = 0; r < root_count; ++r) {
    queue.push_back(r);
    seen[r] = 1;
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t x = queue[head];
    for (std::uint32_t c : piece.children(x)) {
      piece.depth_[c] = piece.depth_[x] + 1;
      seen[c] = 1;
      queue.push_back(c);
    }
  }
  if (queue.size() != nodes)
    throw Error(ErrorCode::invalid_argument, "piece parent links contain a cycle");
  return piece;
}

std::string_view to_string(TreeClass c) {
  switch (c) {
    case TreeClass::caterpillar: return "caterpillar";
    case TreeClass::lobster: return "lobster";
    case TreeClass::other: return "other";
  }
  return "other";
}

// --- parsing -----------------------------------------------------------------

namespace {

struct EdgeDocument {
  std::optional<std::size_t> header_n;
  std::optional<std::size_t> header_roots;
  std::vector<Edge> edges;
};

bool parse_uint(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

EdgeDocument read_edge_document(std::string_view text, bool allow_roots) {
  EdgeDocument doc;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::parse, "line " + std::to_string(line_no) + ": " + why);
    };
    if (tokens.size() != 2) fail("malformed line '" + std::string(line) + "'");

    std::uint64_t value = 0;
    if (tokens[0] == "n" || tokens[0] == "roots") {
      if (!parse_uint(tokens[1], value)) fail("malformed header '" + std::string(line) + "'");
      if (tokens[0] == "n") {
        if (seen_content || doc.header_n) fail("'n' header must precede all edges");
        doc.header_n = value;
      } else {
        if (!allow_roots) fail("unexpected 'roots' header in a tree document");
        if (doc.header_roots) fail("repeated 'roots' header");
        if (!doc.edges.empty()) fail("'roots' header must precede all edges");
        doc.header_roots = value;
      }
      continue;
    }
    std::uint64_t u = 0, v = 0;
    if (!parse_uint(tokens[0], u) || !parse_uint(tokens[1], v))
      fail("malformed line '" + std::string(line) + "'");
    if (u > UINT32_MAX - 1 || v > UINT32_MAX - 1) fail("vertex index too large");
    doc.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    seen_content = true;
  }
  return doc;
}

std::size_t inferred_count(const EdgeDocument& doc) {
  if (doc.header_n) return *doc.header_n;
  Vertex hi = 0;
  if (doc.edges.empty()) throw Error(ErrorCode::parse, "empty edge list needs an 'n' header");
  for (const Edge& e : doc.edges) hi = std::max({hi, e.u, e.v});
  return static_cast<std::size_t>(hi) + 1;
}

}  // namespace

Tree parse_tree(std::string_view text) {
  EdgeDocument doc = read_edge_document(text, false);
  const std::size_t n = inferred_count(doc);
  return Tree::from_edges(n, std::move(doc.edges));
}

RootedPiece parse_piece(std::string_view text) {
  EdgeDocument doc = read_edge_document(text, true);
  if (!doc.header_roots || *doc.header_roots == 0)
    throw Error(ErrorCode::parse, "piece document needs a 'roots <r>' header with r >= 1");
  const std::size_t r = *doc.header_roots;
  const std::size_t n = inferred_count(doc);
  if (n <= r) throw Error(ErrorCode::parse, "piece has no non-root vertices");
  for (const Edge& e : doc.edges)
    if (e.u < r && e.v < r)
      throw Error(ErrorCode::parse, "edge joins two roots");

  // Validate as a forest, then check each component holds exactly one root.
  std::vector<std::vector<Vertex>> adj(n);
  std::set<std::pair<Vertex, Vertex>> seen;
  DisjointSets sets(n);
  for (const Edge& e : doc.edges) {
    if (e.u >= n || e.v >= n) throw Error(ErrorCode::parse, "edge uses a vertex outside the header count");
    if (e.u == e.v) throw Error(ErrorCode::parse, "self-loop");
    if (!seen.insert(std::minmax(e.u, e.v)).second)
      throw Error(ErrorCode::parse, "duplicate edge " + edge_text(e));
    if (!sets.unite(e.u, e.v)) throw Error(ErrorCode::parse, "cycle detected at edge " + edge_text(e));
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  if (doc.edges.size() != n - r)
    throw Error(ErrorCode::parse, "piece is disconnected: some vertex is not attached to a root");

  std::vector<std::uint32_t> parents(n - r, 0);
  std::vector<char> seen_v(n, 0);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < r; ++root) {
    queue.assign(1, root);
    seen_v[root] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex y : adj[queue[h]])
        if (!seen_v[y]) {
          seen_v[y] = 1;
          parents[y - r] = queue[h];
          queue.push_back(y);
        }
  }
  return RootedPiece::from_parents(r, std::move(parents));
}

std::string format_tree(const Tree& t) {
  std::ostringstream out;
  out << "n " << t.size() << '\n';
  for (const Edge& e : t.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string format_piece(const RootedPiece& piece) {
  std::ostringstream out;
  out << "roots " << piece.root_count() << '\n';
  out << "n " << piece.node_count() << '\n';
  for (std::size_t i = 0; i < piece.vertex_count(); ++i)
    out << piece.parent(i) << ' ' << piece.root_count() + i << '\n';
  return out.str();
}

// --- views -------------------------------------------------------------------

namespace detail {

std::vector<std::int32_t> bfs(const TreeView& view, Vertex src,
                              std::vector<Vertex>* parent) {
  const std::size_t n = view.tree.size();
  std::vector<std::int32_t> dist(n, kUnreached);
  if (parent) parent->assign(n, src);
  std::vector<Vertex> queue;
  queue.reserve(view.count);
  queue.push_back(src);
  dist[src] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const Vertex x = queue[h];
    for (Vertex y : view.tree.neighbors(x)) {
      if (dist[y] != kUnreached || !view.contains(y)) continue;
      dist[y] = dist[x] + 1;
      if (parent) (*parent)[y] = x;
      queue.push_back(y);
    }
  }
  return dist;
}

Vertex farthest(const TreeView& view, Vertex src, std::vector<std::int32_t>* dist_out,
                std::vector<Vertex>* parent) {
  auto dist = bfs(view, src, parent);
  Vertex best = src;
  for (Vertex v = 0; v < dist.size(); ++v)
    if (dist[v] > dist[best]) best = v;  // strict: lowest index wins ties
  if (dist_out) *dist_out = std::move(dist);
  return best;
}

std::vector<Vertex> longest_path(const TreeView& view) {
  const Vertex a = farthest(view, view.first());
  std::vector<Vertex> parent;
  const Vertex b = farthest(view, a, nullptr, &parent);
  std::vector<Vertex> path;
  for (Vertex x = b;; x = parent[x]) {
    path.push_back(x);
    if (x == a) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::int32_t> distance_to_set(const TreeView& view,
                                          std::span<const Vertex> sources) {
  std::vector<std::int32_t> dist(view.tree.size(), kUnreached);
  std::vector<Vertex> queue(sources.begin(), sources.end());
  for (Vertex s : sources) dist[s] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const Vertex x = queue[h];
    for (Vertex y : view.tree.neighbors(x)) {
      if (dist[y] != kUnreached || !view.contains(y)) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

Tree induced_tree(const TreeView& view, std::vector<Vertex>& to_original) {
  const std::size_t n = view.tree.size();
  std::vector<Vertex> index(n, 0);
  to_original.clear();
  for (Vertex v = 0; v < n; ++v)
    if (view.contains(v)) {
      index[v] = static_cast<Vertex>(to_original.size());
      to_original.push_back(v);
    }
  std::vector<Edge> edges;
  for (const Edge& e : view.tree.edges())
    if (view.contains(e.u) && view.contains(e.v))
      edges.push_back({index[e.u], index[e.v]});
  return Tree::from_edges(to_original.size(), std::move(edges));
}

}  // namespace detail

std::vector<Vertex> longest_path(const Tree& t) {
  return detail::longest_path(detail::TreeView(t));
}

TreeClass classify(const Tree& t) {
  const detail::TreeView view(t);
  const auto path = detail::longest_path(view);
  const auto dist = detail::distance_to_set(view, path);
  const std::int32_t worst = *std::max_element(dist.begin(), dist.end());
  if (worst <= 1) return TreeClass::caterpillar;
  if (worst <= 2) return TreeClass::lobster;
  return TreeClass::other;
}

Tree random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "random tree needs n >= 1");
  if (n == 1) return Tree::from_edges(1, {});
  if (n == 2) return Tree::from_edges(2, {{0, 1}});
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> seq(n - 2);
  for (auto& x : seq) x = pick(rng);

  // Linear-time Pruefer decoding.
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) ++degree[x];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = static_cast<Vertex>(ptr);
  for (Vertex x : seq) {
    edges.push_back({leaf, x});
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = static_cast<Vertex>(ptr);
    }
  }
  edges.push_back({leaf, static_cast<Vertex>(n - 1)});
  return Tree::from_edges(n, std::move(edges));
}

}  // namespace cordial
