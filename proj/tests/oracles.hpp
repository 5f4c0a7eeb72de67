#pragma once

// Slow, independent reference computations. Nothing here calls the library;
// tests convert library objects to plain edge lists first.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Edges = std::vector<std::pair<int, int>>;
using Adj = std::vector<std::vector<int>>;

inline Adj adjacency(int n, const Edges& edges) {
  Adj adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Labeled tree from a Pruefer sequence of length n - 2.
inline Edges prufer_decode(const std::vector<int>& seq, int n) {
  Edges edges;
  if (n == 2) return {{0, 1}};
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.push_back({leaf, x});
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) (a < 0 ? a : b) = v;
  edges.push_back({a, b});
  return edges;
}

inline std::vector<int> bfs_dist(const Adj& adj, int s) {
  std::vector<int> d(adj.size(), -1);
  std::queue<int> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x])
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        q.push(y);
      }
  }
  return d;
}

// Diameter by BFS from every vertex.
inline int diameter(const Adj& adj) {
  int best = 0;
  for (int s = 0; s < static_cast<int>(adj.size()); ++s) {
    auto d = bfs_dist(adj, s);
    best = std::max(best, *std::max_element(d.begin(), d.end()));
  }
  return best;
}

// Centres by repeated leaf stripping.
inline std::vector<int> centers(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 2) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] == 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int x : layer)
      for (int y : adj[x])
        if (--deg[y] == 1) next.push_back(y);
    layer = next;
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// "1 ... 0" parenthesisation with sorted children.
inline std::string rooted_string(const Adj& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int y : adj[v])
    if (y != parent) kids.push_back(rooted_string(adj, y, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "1";
  for (auto& k : kids) s += k;
  return s + "0";
}

// Isomorphism invariant of a free tree, rooted at its centre(s).
inline std::string free_code(const Adj& adj) {
  if (adj.empty()) return "";
  std::string best;
  for (int c : centers(adj)) {
    std::string s = rooted_string(adj, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// Isomorphism classes of free trees on n vertices, by decoding every Pruefer
// sequence. Feasible for n <= 9.
inline std::set<std::string> free_tree_classes(int n) {
  std::set<std::string> out;
  if (n == 1) return {free_code(Adj(1))};
  if (n == 2) return {free_code(adjacency(2, {{0, 1}}))};
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    out.insert(free_code(adjacency(n, prufer_decode(seq, n))));
    int i = 0;
    while (i < n - 2 && seq[i] == n - 1) seq[i++] = 0;
    if (i == n - 2) break;
    ++seq[i];
  }
  return out;
}

// Rooted unlabeled trees on n nodes (A000081).
inline std::vector<std::uint64_t> rooted_tree_counts(int max_n) {
  std::vector<std::uint64_t> r(max_n + 1, 0);
  if (max_n >= 1) r[1] = 1;
  for (int n = 1; n < max_n; ++n) {
    std::uint64_t sum = 0;
    for (int k = 1; k <= n; ++k) {
      std::uint64_t s = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) s += static_cast<std::uint64_t>(d) * r[d];
      sum += s * r[n - k + 1];
    }
    r[n + 1] = sum / n;
  }
  return r;
}

// Free unlabeled trees on n nodes via Otter's dissimilarity formula (A000055).
inline std::uint64_t free_tree_count(int n) {
  if (n <= 1) return 1;
  auto r = rooted_tree_counts(n);
  std::int64_t pairs = 0;
  for (int i = 1; i < n; ++i) pairs += static_cast<std::int64_t>(r[i] * r[n - i]);
  std::int64_t twice = 2 * static_cast<std::int64_t>(r[n]) - pairs;
  if (n % 2 == 0) twice += static_cast<std::int64_t>(r[n / 2]);
  return static_cast<std::uint64_t>(twice / 2);
}

// Rooted forests with p non-root vertices, each root carrying at least one
// vertex and at most max_roots roots: multisets of rooted trees on q + 1 nodes
// (q >= 1) with sizes summing to p.
inline std::uint64_t rooted_forest_count(int p, int max_roots) {
  auto r = rooted_tree_counts(p + 1);
  // ways[j][s]: multisets of j components with total weight s, built by
  // processing one component weight at a time.
  std::vector<std::vector<std::uint64_t>> ways(max_roots + 1, std::vector<std::uint64_t>(p + 1, 0));
  ways[0][0] = 1;
  for (int q = 1; q <= p; ++q) {
    const std::uint64_t types = r[q + 1];
    auto next = ways;
    for (int j = 0; j <= max_roots; ++j)
      for (int s = 0; s <= p; ++s) {
        if (!ways[j][s]) continue;
        // choose c >= 1 components of weight q: multichoose(types, c)
        std::uint64_t choose = 1;
        for (int c = 1; j + c <= max_roots && s + c * q <= p; ++c) {
          choose = choose * (types + c - 1) / c;
          next[j + c][s + c * q] += ways[j][s] * choose;
        }
      }
    ways = next;
  }
  std::uint64_t total = 0;
  for (int j = 1; j <= max_roots; ++j) total += ways[j][p];
  return total;
}

// Brute-force isomorphism by trying all vertex permutations.
inline bool isomorphic_brute(int n, const Edges& a, const Edges& b) {
  if (a.size() != b.size()) return false;
  std::set<std::pair<int, int>> eb;
  for (auto [u, v] : b) eb.insert({std::min(u, v), std::max(u, v)});
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a) {
      int x = perm[u], y = perm[v];
      if (!eb.count({std::min(x, y), std::max(x, y)})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Same, but only over permutations that fix vertex `pin`.
inline bool isomorphic_pinned_brute(int n, int pin, const Edges& a, const Edges& b) {
  if (a.size() != b.size()) return false;
  std::set<std::pair<int, int>> eb;
  for (auto [u, v] : b) eb.insert({std::min(u, v), std::max(u, v)});
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != pin) rest.push_back(v);
  std::vector<int> perm(n);
  do {
    perm[pin] = pin;
    for (int i = 0, j = 0; i < n; ++i)
      if (i != pin) perm[i] = rest[j++];
    bool ok = true;
    for (auto [u, v] : a)
      if (!eb.count({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])})) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

// Tree with every leaf removed (a single vertex or edge stays as is).
inline std::vector<char> strip_leaves(const Adj& adj, const std::vector<char>& alive) {
  std::vector<char> out = alive;
  int count = 0;
  for (char c : alive) count += c;
  if (count <= 2) return out;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if (!alive[v]) continue;
    int d = 0;
    for (int y : adj[v]) d += alive[y];
    if (d <= 1) out[v] = 0;
  }
  return out;
}

inline bool induced_is_path(const Adj& adj, const std::vector<char>& alive) {
  int count = 0, edges = 0;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if (!alive[v]) continue;
    ++count;
    int d = 0;
    for (int y : adj[v]) d += alive[y];
    if (d > 2) return false;
    edges += d;
  }
  return count == 0 || edges / 2 == count - 1;
}

// Caterpillar: leaf removal leaves a path. Lobster: twice.
inline bool is_caterpillar(const Adj& adj) {
  std::vector<char> alive(adj.size(), 1);
  return induced_is_path(adj, strip_leaves(adj, alive));
}

inline bool is_lobster(const Adj& adj) {
  std::vector<char> alive(adj.size(), 1);
  return induced_is_path(adj, strip_leaves(adj, strip_leaves(adj, alive)));
}

inline bool spread_ok(const std::vector<int>& c) {
  return *std::max_element(c.begin(), c.end()) - *std::min_element(c.begin(), c.end()) <= 1;
}

inline bool is_cordial(int k, const Edges& edges, const std::vector<int>& labels) {
  std::vector<int> v(k, 0), e(k, 0);
  for (int x : labels) ++v[x % k];
  for (auto [a, b] : edges) ++e[(labels[a] + labels[b]) % k];
  return spread_ok(v) && spread_ok(e);
}

// Every labeling in Z_k^n; n small.
inline bool exists_cordial_brute(int n, int k, const Edges& edges) {
  std::vector<int> labels(n, 0);
  for (;;) {
    if (is_cordial(k, edges, labels)) return true;
    int i = 0;
    while (i < n && labels[i] == k - 1) labels[i++] = 0;
    if (i == n) return false;
    ++labels[i];
  }
}

// The rooted-forest condition with heavy weight l: vertex counts (non-roots)
// within 1, non-heavy weights within 1, and 0 <= e_l - e_i <= 2.
inline bool rooted_condition(int k, const std::vector<int>& vcount, const std::vector<int>& ecount, int heavy) {
  if (!spread_ok(vcount)) return false;
  int lo = 1 << 30, hi = -1;
  for (int a = 0; a < k; ++a) {
    if (a == heavy) continue;
    lo = std::min(lo, ecount[a]);
    hi = std::max(hi, ecount[a]);
    if (ecount[heavy] < ecount[a] || ecount[heavy] - ecount[a] > 2) return false;
  }
  return k == 1 || hi - lo <= 1;
}

}  // namespace oracle
