#include "cordial/search.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace cordial {

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max() / 4;

// Per-residue bounds on the counts contributed by the search itself.
struct Bounds {
  std::vector<std::size_t> lo;
  std::vector<std::size_t> hi;
};

// Nodes 0..N-1; fixed nodes carry a label, free nodes are assigned in `order`.
// back[i] lists the neighbours of order[i] that are fixed or earlier in order.
struct Problem {
  Residue k = 0;
  std::vector<std::int64_t> fixed;  // -1 when free
  std::vector<char> counted;
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> back;
  std::vector<std::size_t> start_v;  // contributions of fixed nodes
  std::vector<std::size_t> start_e;
};

enum class Outcome { found, exhausted, budget };

class Engine {
 public:
  Engine(const Problem& pr, const Bounds& v, const Bounds& e, std::uint64_t max_nodes,
         std::uint64_t& nodes)
      : pr_(pr), v_(v), e_(e), max_nodes_(max_nodes), nodes_(nodes) {}

  Outcome run(std::vector<Residue>& labels) {
    const std::size_t k = pr_.k;
    cnt_v_ = pr_.start_v;
    cnt_e_ = pr_.start_e;
    label_.assign(pr_.fixed.size(), 0);
    for (std::size_t x = 0; x < pr_.fixed.size(); ++x)
      if (pr_.fixed[x] >= 0) label_[x] = static_cast<Residue>(pr_.fixed[x]);
    vars_left_ = 0;
    edges_left_ = 0;
    for (std::size_t i = 0; i < pr_.order.size(); ++i) {
      vars_left_ += pr_.counted[pr_.order[i]] ? 1 : 0;
      edges_left_ += pr_.back[i].size();
    }
    for (std::size_t a = 0; a < k; ++a)
      if (cnt_v_[a] > v_.hi[a] || cnt_e_[a] > e_.hi[a]) return Outcome::exhausted;
    if (!feasible()) return Outcome::exhausted;
    const Outcome out = descend(0);
    if (out == Outcome::found) labels = label_;
    return out;
  }

 private:
  static bool fits(const std::vector<std::size_t>& cnt, const Bounds& b, std::size_t left) {
    std::size_t need = 0, room = 0;
    for (std::size_t a = 0; a < cnt.size(); ++a) {
      if (b.lo[a] > cnt[a]) need += b.lo[a] - cnt[a];
      room += std::min(b.hi[a] - cnt[a], left);
    }
    return need <= left && left <= room;
  }

  bool feasible() const { return fits(cnt_v_, v_, vars_left_) && fits(cnt_e_, e_, edges_left_); }

  Outcome descend(std::size_t depth) {
    if (depth == pr_.order.size()) return Outcome::found;
    const Vertex x = pr_.order[depth];
    const auto& back = pr_.back[depth];
    const bool counted = pr_.counted[x];
    const std::size_t k = pr_.k;

    std::vector<Residue> values(k);
    std::iota(values.begin(), values.end(), Residue{0});
    if (counted) {
      std::stable_sort(values.begin(), values.end(), [&](Residue a, Residue b) {
        return v_.hi[a] - cnt_v_[a] > v_.hi[b] - cnt_v_[b];
      });
    }

    bool budget_hit = false;
    for (Residue a : values) {
      if (counted && cnt_v_[a] >= v_.hi[a]) continue;
      if (max_nodes_ != 0 && nodes_ >= max_nodes_) return Outcome::budget;
      ++nodes_;

      std::size_t placed = 0;
      bool ok = true;
      for (Vertex y : back) {
        const Residue w = static_cast<Residue>((a + label_[y]) % k);
        ++placed;
        if (++cnt_e_[w] > e_.hi[w]) {
          ok = false;
          break;
        }
      }
      if (counted) {
        ++cnt_v_[a];
        --vars_left_;
      }
      edges_left_ -= back.size();
      label_[x] = a;

      if (ok && feasible()) {
        const Outcome sub = descend(depth + 1);
        if (sub == Outcome::found) return sub;
        if (sub == Outcome::budget) budget_hit = true;
      }

      edges_left_ += back.size();
      if (counted) {
        --cnt_v_[a];
        ++vars_left_;
      }
      for (std::size_t i = 0; i < placed; ++i) --cnt_e_[(a + label_[back[i]]) % k];
      if (budget_hit) return Outcome::budget;
    }
    return Outcome::exhausted;
  }

  const Problem& pr_;
  const Bounds& v_;
  const Bounds& e_;
  std::uint64_t max_nodes_;
  std::uint64_t& nodes_;
  std::vector<std::size_t> cnt_v_;
  std::vector<std::size_t> cnt_e_;
  std::vector<Residue> label_;
  std::size_t vars_left_ = 0;
  std::size_t edges_left_ = 0;
};

void validate(const ConstraintSpec& spec) {
  if (spec.k == 0) throw Error(ErrorCode::invalid_argument, "modulus must be >= 1");
  auto check = [&](const std::vector<std::size_t>& v, const char* name) {
    if (!v.empty() && v.size() != spec.k)
      throw Error(ErrorCode::invalid_argument,
                  std::string(name) + " has " + std::to_string(v.size()) + " entries, expected " +
                      std::to_string(spec.k));
  };
  check(spec.base_v, "base_v");
  check(spec.base_e, "base_e");
  check(spec.floor_v, "floor_v");
  check(spec.cap_v, "cap_v");
  check(spec.floor_e, "floor_e");
  check(spec.cap_e, "cap_e");
  if (spec.special_weight && *spec.special_weight >= spec.k)
    throw Error(ErrorCode::invalid_argument, "special weight out of range");
  for (const auto& [v, label] : spec.fixed)
    if (label >= spec.k) throw Error(ErrorCode::invalid_argument, "fixed label out of range");
}

std::size_t at(const std::vector<std::size_t>& v, std::size_t i, std::size_t fallback) {
  return v.empty() ? fallback : v[i];
}

// Final-count bounds relative to the context: subtracting base turns them into
// bounds on what the search adds. Returns nothing when the context already
// breaks a cap.
std::optional<Bounds> relative(const std::vector<std::size_t>& lo, const std::vector<std::size_t>& hi,
                               const std::vector<std::size_t>& base) {
  Bounds b{lo, hi};
  for (std::size_t a = 0; a < lo.size(); ++a) {
    const std::size_t c = at(base, a, 0);
    if (hi[a] < c || lo[a] > hi[a]) return std::nullopt;
    b.lo[a] = lo[a] > c ? lo[a] - c : 0;
    b.hi[a] = hi[a] == kUnbounded ? kUnbounded : hi[a] - c;
  }
  return b;
}

std::vector<Bounds> vertex_windows(const ConstraintSpec& spec) {
  std::vector<std::size_t> lo(spec.k), hi(spec.k);
  for (std::size_t a = 0; a < spec.k; ++a) {
    lo[a] = at(spec.floor_v, a, 0);
    hi[a] = at(spec.cap_v, a, kUnbounded);
  }
  if (auto b = relative(lo, hi, spec.base_v)) return {*b};
  return {};
}

// Without a special weight the edge window is just floor/cap. With heavy
// weight l the final totals must satisfy E_l = t and E_i in [m, m+1] ∩ [t-2, t]
// for the others; each (t, m) is one window, dropping windows contained in
// another one with the same t.
std::vector<Bounds> edge_windows(const ConstraintSpec& spec, std::size_t total_edges) {
  const std::size_t k = spec.k;
  auto floor_at = [&](std::size_t a) { return at(spec.floor_e, a, 0); };
  auto cap_at = [&](std::size_t a) { return at(spec.cap_e, a, kUnbounded); };
  std::vector<Bounds> out;
  if (!spec.special_weight) {
    std::vector<std::size_t> lo(k), hi(k);
    for (std::size_t a = 0; a < k; ++a) {
      lo[a] = floor_at(a);
      hi[a] = cap_at(a);
    }
    if (auto b = relative(lo, hi, spec.base_e)) out.push_back(*b);
    return out;
  }
  const std::size_t heavy = *spec.special_weight;
  for (std::size_t t = 0; t <= total_edges; ++t) {
    std::vector<std::pair<std::size_t, std::size_t>> others;
    if (t == 0) {
      others.push_back({0, 0});
    } else {
      for (std::size_t m = t >= 2 ? t - 2 : 0; m + 1 <= t; ++m) others.push_back({m, m + 1});
    }
    for (auto [olo, ohi] : others) {
      std::vector<std::size_t> lo(k), hi(k);
      std::size_t sum_lo = 0, sum_hi = 0;
      bool empty = false;
      for (std::size_t a = 0; a < k; ++a) {
        lo[a] = std::max(a == heavy ? t : olo, floor_at(a));
        hi[a] = std::min(a == heavy ? t : ohi, cap_at(a));
        if (lo[a] > hi[a]) empty = true;
        sum_lo += lo[a];
        sum_hi += hi[a];
      }
      if (empty || sum_lo > total_edges || sum_hi < total_edges) continue;
      if (auto b = relative(lo, hi, spec.base_e)) out.push_back(*b);
    }
  }
  return out;
}

std::size_t total(const std::vector<std::size_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{0});
}

bool quick_reject(const Bounds& b, std::size_t amount) {
  std::size_t lo = 0, hi = 0;
  for (std::size_t a = 0; a < b.lo.size(); ++a) {
    lo += b.lo[a];
    hi += std::min(b.hi[a], amount);
  }
  return lo > amount || hi < amount;
}

void append_bounds(std::string& key, const Bounds& b) {
  for (std::size_t a = 0; a < b.lo.size(); ++a) {
    key += std::to_string(b.lo[a]);
    key += '-';
    key += b.hi[a] == kUnbounded ? std::string("*") : std::to_string(b.hi[a]);
    key += ',';
  }
  key += ';';
}

struct WindowRun {
  Outcome outcome = Outcome::exhausted;
  std::vector<Residue> labels;  // per node
};

// Tries every (vertex window, edge window) pair; windows may overlap, which
// only repeats work.
WindowRun run_windows(const Problem& pr, const std::vector<Bounds>& vw, const std::vector<Bounds>& ew,
                      std::size_t new_vertices, std::size_t new_edges, const SearchOptions& options,
                      std::uint64_t& nodes) {
  WindowRun result;
  bool budget = false;
  // Bounds cover fixed nodes as well as the free ones.
  new_vertices += total(pr.start_v);
  new_edges += total(pr.start_e);
  for (const Bounds& v : vw) {
    if (quick_reject(v, new_vertices)) continue;
    for (const Bounds& e : ew) {
      if (quick_reject(e, new_edges)) continue;
      Engine engine(pr, v, e, options.max_nodes, nodes);
      const Outcome out = engine.run(result.labels);
      if (out == Outcome::found) {
        result.outcome = out;
        return result;
      }
      if (out == Outcome::budget) {
        budget = true;
        break;
      }
    }
    if (budget) break;
  }
  result.outcome = budget ? Outcome::budget : Outcome::exhausted;
  return result;
}

SolveStatus status_of(Outcome o) {
  switch (o) {
    case Outcome::found: return SolveStatus::found;
    case Outcome::budget: return SolveStatus::budget_exhausted;
    case Outcome::exhausted: break;
  }
  return SolveStatus::exhausted;
}

// Final profile check shared by both structures.
bool meets(const ConstraintSpec& spec, const CountProfile& added) {
  const std::size_t k = spec.k;
  std::vector<std::size_t> fv(k), fe(k);
  for (std::size_t a = 0; a < k; ++a) {
    fv[a] = at(spec.base_v, a, 0) + added.v_counts[a];
    fe[a] = at(spec.base_e, a, 0) + added.e_counts[a];
    if (fv[a] < at(spec.floor_v, a, 0) || fv[a] > at(spec.cap_v, a, kUnbounded)) return false;
    if (fe[a] < at(spec.floor_e, a, 0) || fe[a] > at(spec.cap_e, a, kUnbounded)) return false;
  }
  if (spec.special_weight) {
    CountProfile full{fv, fe};
    // Vertex balance is governed by the vertex bounds alone here.
    full.v_counts.assign(k, 0);
    if (!satisfies_rooted_condition(full, *spec.special_weight)) return false;
  }
  return true;
}

}  // namespace

ConstraintSpec ConstraintSpec::cordial(Residue k, std::size_t vertices, std::size_t edges) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "modulus must be >= 1");
  ConstraintSpec s;
  s.k = k;
  s.floor_v.assign(k, vertices / k);
  s.cap_v.assign(k, (vertices + k - 1) / k);
  s.floor_e.assign(k, edges / k);
  s.cap_e.assign(k, (edges + k - 1) / k);
  return s;
}

ConstraintSpec ConstraintSpec::rooted(Residue k, std::size_t p, Residue heavy) {
  if (k == 0 || heavy >= k) throw Error(ErrorCode::invalid_argument, "bad modulus or heavy weight");
  ConstraintSpec s;
  s.k = k;
  s.floor_v.assign(k, p / k);
  s.cap_v.assign(k, (p + k - 1) / k);
  s.special_weight = heavy;
  return s;
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::found: return "found";
    case SolveStatus::exhausted: return "exhausted";
    case SolveStatus::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

// --- cache -------------------------------------------------------------------

SolveCache::Shard& SolveCache::shard_for(const std::string& key) const {
  return shards_[std::hash<std::string>{}(key) % kShards];
}

std::optional<SolveCache::Entry> SolveCache::find(const std::string& key) const {
  Shard& s = shard_for(key);
  std::lock_guard lock(s.mutex);
  const auto it = s.map.find(key);
  if (it == s.map.end()) return std::nullopt;
  return it->second;
}

void SolveCache::store(const std::string& key, Entry entry) {
  Shard& s = shard_for(key);
  std::lock_guard lock(s.mutex);
  s.map.emplace(key, std::move(entry));
}

std::size_t SolveCache::size() const {
  std::size_t n = 0;
  for (const Shard& s : shards_) {
    std::lock_guard lock(s.mutex);
    n += s.map.size();
  }
  return n;
}

void SolveCache::clear() {
  for (Shard& s : shards_) {
    std::lock_guard lock(s.mutex);
    s.map.clear();
  }
}

// --- trees -------------------------------------------------------------------

SolveResult solve(const Tree& t, const ConstraintSpec& spec, const SearchOptions& options) {
  validate(spec);
  const std::size_t n = t.size();
  const Residue k = spec.k;

  Problem pr;
  pr.k = k;
  pr.fixed.assign(n, -1);
  pr.counted.assign(n, 1);
  for (const auto& [v, label] : spec.fixed) {
    if (v >= n) throw Error(ErrorCode::invalid_argument, "fixed vertex out of range");
    if (pr.fixed[v] >= 0 && pr.fixed[v] != label)
      throw Error(ErrorCode::invalid_argument, "vertex fixed to two labels");
    pr.fixed[v] = label;
  }
  pr.start_v.assign(k, 0);
  pr.start_e.assign(k, 0);
  for (Vertex v = 0; v < n; ++v)
    if (pr.fixed[v] >= 0) ++pr.start_v[pr.fixed[v]];
  for (const Edge& e : t.edges())
    if (pr.fixed[e.u] >= 0 && pr.fixed[e.v] >= 0) ++pr.start_e[(pr.fixed[e.u] + pr.fixed[e.v]) % k];

  // DFS preorder from the smallest fixed vertex (or 0).
  Vertex start = 0;
  for (Vertex v = 0; v < n; ++v)
    if (pr.fixed[v] >= 0) {
      start = v;
      break;
    }
  std::vector<std::size_t> pos(n, SIZE_MAX);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    if (pr.fixed[x] < 0) {
      pos[x] = pr.order.size();
      pr.order.push_back(x);
    }
    const auto nb = t.neighbors(x);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it)
      if (!seen[*it]) {
        seen[*it] = 1;
        stack.push_back(*it);
      }
  }
  for (Vertex x : pr.order) {
    std::vector<Vertex> back;
    for (Vertex y : t.neighbors(x))
      if (pr.fixed[y] >= 0 || pos[y] < pos[x]) back.push_back(y);
    pr.back.push_back(std::move(back));
  }

  std::size_t new_edges = 0;
  for (const auto& b : pr.back) new_edges += b.size();

  SolveResult result;
  result.labeling.k = k;
  const auto vw = vertex_windows(spec);
  const auto ew = edge_windows(spec, total(spec.base_e) + t.edge_count());
  const WindowRun run = run_windows(pr, vw, ew, pr.order.size(), new_edges, options, result.nodes);
  result.status = status_of(run.outcome);
  if (result.status == SolveStatus::found) {
    result.labeling.labels = run.labels;
    if (!meets(spec, count_profile(t, result.labeling)))
      throw Error(ErrorCode::internal, "search returned a labeling outside its bounds");
  }
  return result;
}

// --- pieces ------------------------------------------------------------------

SolveResult solve(const RootedPiece& piece, std::span<const Residue> root_labels,
                  const ConstraintSpec& spec, const SearchOptions& options) {
  validate(spec);
  if (!spec.fixed.empty())
    throw Error(ErrorCode::invalid_argument, "pieces take root labels, not fixed vertices");
  if (root_labels.size() != piece.root_count())
    throw Error(ErrorCode::size_mismatch, "expected " + std::to_string(piece.root_count()) +
                                              " root labels, got " +
                                              std::to_string(root_labels.size()));
  for (Residue g : root_labels)
    if (g >= spec.k) throw Error(ErrorCode::invalid_argument, "root label out of range");

  const Residue k = spec.k;
  const std::size_t r = piece.root_count();
  const std::size_t p = piece.vertex_count();
  const CanonicalForm form = canonical_form(piece, root_labels);
  const RootedPiece cp = apply_canonical_order(piece, form);

  const auto vw = vertex_windows(spec);
  const auto ew = edge_windows(spec, total(spec.base_e) + p);

  std::string key;
  if (options.cache) {
    key = std::to_string(k) + "#" + form.code.code + "#";
    for (const Bounds& b : vw) append_bounds(key, b);
    key += '#';
    for (const Bounds& b : ew) append_bounds(key, b);
  }

  SolveResult result;
  result.labeling.k = k;
  std::vector<Residue> canon;
  bool have = false;
  if (options.cache) {
    if (auto hit = options.cache->find(key)) {
      result.from_cache = true;
      result.status = hit->found ? SolveStatus::found : SolveStatus::exhausted;
      canon = hit->labels;
      have = true;
    }
  }
  if (!have) {
    Problem pr;
    pr.k = k;
    pr.fixed.assign(r + p, -1);
    pr.counted.assign(r + p, 1);
    for (std::size_t j = 0; j < r; ++j) {
      pr.fixed[j] = root_labels[form.root_order[j]];
      pr.counted[j] = 0;
    }
    pr.start_v.assign(k, 0);
    pr.start_e.assign(k, 0);
    for (std::size_t i = 0; i < p; ++i) {
      if (cp.parent(i) >= r + i)
        throw Error(ErrorCode::internal, "canonical order is not a preorder");
      pr.order.push_back(static_cast<Vertex>(r + i));
      pr.back.push_back({cp.parent(i)});
    }
    const WindowRun run = run_windows(pr, vw, ew, p, p, options, result.nodes);
    result.status = status_of(run.outcome);
    if (result.status == SolveStatus::found)
      canon.assign(run.labels.begin() + static_cast<std::ptrdiff_t>(r), run.labels.end());
    if (options.cache && result.status != SolveStatus::budget_exhausted)
      options.cache->store(key, {result.status == SolveStatus::found, canon});
  }

  if (result.status == SolveStatus::found) {
    result.labeling.labels.assign(p, 0);
    for (std::size_t j = 0; j < p; ++j) result.labeling.labels[form.vertex_order[j]] = canon[j];
    if (!meets(spec, count_profile(piece, root_labels, result.labeling)))
      throw Error(ErrorCode::internal, "search returned a labeling outside its bounds");
  }
  return result;
}

SolveResult exists_k_cordial(const Tree& t, Residue k, const SearchOptions& options) {
  ConstraintSpec spec = ConstraintSpec::cordial(k, t.size(), t.edge_count());
  spec.fixed.push_back({0, 0});
  SolveResult r = solve(t, spec, options);
  if (r.status == SolveStatus::found && !is_k_cordial(t, r.labeling))
    throw Error(ErrorCode::internal, "cordial search returned a non-cordial labeling");
  return r;
}

// --- Hovey certification -----------------------------------------------------

HoveyReport hovey_certify(const RootedPiece& piece, Residue k, const SearchOptions& options) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "modulus must be >= 1");
  const std::size_t r = piece.root_count();
  const std::size_t p = piece.vertex_count();
  HoveyReport report;

  // Root labellings with g[0] = 0, merged when a translation plus a
  // permutation of isomorphic components maps one onto another: the
  // canonical code with root labels captures the permutation part.
  std::set<std::string> seen;
  std::vector<std::vector<Residue>> reps;
  std::vector<Residue> g(r, 0);
  std::vector<Residue> shifted(r);
  for (;;) {
    ++report.root_labelings;
    std::string best;
    for (Residue t = 0; t < k; ++t) {
      for (std::size_t i = 0; i < r; ++i) shifted[i] = (g[i] + t) % k;
      std::string code = canonical_form(piece, shifted).code.code;
      if (t == 0 || code < best) best = std::move(code);
    }
    if (seen.insert(best).second) reps.push_back(g);
    std::size_t i = 1;
    while (i < r && g[i] == k - 1) g[i++] = 0;
    if (i >= r) break;
    ++g[i];
  }
  report.root_labelings_examined = reps.size();

  report.certified = true;
  for (const auto& rep : reps) {
    for (Residue heavy = 0; heavy < k; ++heavy) {
      const SolveResult res = solve(piece, rep, ConstraintSpec::rooted(k, p, heavy), options);
      report.nodes += res.nodes;
      HoveyCase c;
      c.root_labels = rep;
      c.heavy = heavy;
      c.status = res.status;
      if (res.status == SolveStatus::found) {
        if (!satisfies_rooted_condition(piece, rep, heavy, res.labeling))
          throw Error(ErrorCode::internal, "rooted witness fails the rooted-forest condition");
        c.witness = res.labeling.labels;
      } else {
        report.certified = false;
        if (res.status == SolveStatus::budget_exhausted) report.complete = false;
      }
      report.cases.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace cordial
