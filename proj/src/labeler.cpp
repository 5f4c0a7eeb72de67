#include "cordial/labeler.hpp"

#include <algorithm>
#include <sstream>

#include "cordial/grace.hpp"
#include "view.hpp"

namespace cordial {

namespace {

constexpr Residue kSeven = 7;

SolveCache& process_cache() {
  static SolveCache cache;
  return cache;
}

SearchOptions search_options(const LabelerOptions& options) {
  return {options.piece_max_nodes, options.cache ? options.cache : &process_cache()};
}

// Counts over the labelled (alive) part of the tree.
CountProfile profile_of(const detail::TreeView& view, std::span<const Residue> labels) {
  CountProfile p{std::vector<std::size_t>(kSeven, 0), std::vector<std::size_t>(kSeven, 0)};
  for (Vertex v = 0; v < view.tree.size(); ++v)
    if (view.contains(v)) ++p.v_counts[labels[v]];
  for (const Edge& e : view.tree.edges())
    if (view.contains(e.u) && view.contains(e.v)) ++p.e_counts[(labels[e.u] + labels[e.v]) % kSeven];
  return p;
}

bool balanced(std::span<const std::size_t> counts) {
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  return *hi <= *lo + 1;
}

Residue transform_label(Residue x, bool negated, Residue a) {
  const Residue y = negated ? (kSeven - x) % kSeven : x;
  return (y + a) % kSeven;
}

// Counts after relabelling every x as (+-x) + a; weights move by (+-w) + 2a.
CountProfile transform_profile(const CountProfile& p, bool negated, Residue a) {
  CountProfile out{std::vector<std::size_t>(kSeven, 0), std::vector<std::size_t>(kSeven, 0)};
  for (Residue x = 0; x < kSeven; ++x) {
    out.v_counts[transform_label(x, negated, a)] += p.v_counts[x];
    out.e_counts[transform_label(x, negated, (2 * a) % kSeven)] += p.e_counts[x];
  }
  return out;
}

// Labels of the alive vertices for a tree of order <= 7, sequentially for
// caterpillars and by search for the rest.
std::vector<Residue> base_labels(const detail::TreeView& view, std::vector<Vertex>& vertices,
                                 bool& by_search) {
  const Tree small = detail::induced_tree(view, vertices);
  if (classify(small) == TreeClass::caterpillar) {
    by_search = false;
    return grace_label(small, kSeven, 0).labels;
  }
  by_search = true;
  const SolveResult r = exists_k_cordial(small, kSeven);
  if (r.status != SolveStatus::found)
    throw Error(ErrorCode::internal, "no 7-cordial labeling of a base tree:\n" + format_tree(small));
  return r.labeling.labels;
}

Vertex highest_leaf(const detail::TreeView& view, Vertex& neighbor) {
  for (Vertex v = static_cast<Vertex>(view.tree.size()); v-- > 0;) {
    if (!view.contains(v)) continue;
    std::size_t deg = 0;
    for (Vertex y : view.tree.neighbors(v))
      if (view.contains(y)) {
        ++deg;
        neighbor = y;
      }
    if (deg == 1) return v;
  }
  throw Error(ErrorCode::internal, "no leaf in a tree with at least two vertices");
}

std::vector<Residue> root_labels_of(const SplitPlan& plan, std::span<const Residue> labels,
                                    bool negated, Residue a) {
  std::vector<Residue> g;
  for (Vertex x : plan.roots) g.push_back(transform_label(labels[x], negated, a));
  return g;
}

ConstraintSpec piece_spec(const CountProfile& core, std::size_t total_vertices) {
  ConstraintSpec spec = ConstraintSpec::cordial(kSeven, total_vertices, total_vertices - 1);
  spec.base_v = core.v_counts;
  spec.base_e = core.e_counts;
  return spec;
}

bool pasted_cordial(const CountProfile& core, const RootedPiece& piece, std::span<const Residue> g,
                    const std::vector<Residue>& piece_labels) {
  const CountProfile add = count_profile(piece, g, Labeling{kSeven, piece_labels});
  CountProfile sum = core;
  for (Residue a = 0; a < kSeven; ++a) {
    sum.v_counts[a] += add.v_counts[a];
    sum.e_counts[a] += add.e_counts[a];
  }
  return balanced(sum.v_counts) && balanced(sum.e_counts);
}

bool sequential_candidate(const RootedPiece& piece) {
  if (piece.root_count() != 1 || piece.children(0).size() != 1) return false;
  return classify(branch_tree(piece)) == TreeClass::caterpillar;
}

// Piece labels for one recorded variant; used by both combine and replay.
std::optional<std::vector<Residue>> piece_labels_for(const RootedPiece& piece,
                                                     std::span<const Residue> g,
                                                     const CountProfile& core,
                                                     std::size_t total_vertices, PieceSource source,
                                                     std::optional<Residue> w,
                                                     const LabelerOptions& options) {
  if (source == PieceSource::grace) {
    if (!w) return std::nullopt;
    try {
      return grace_with_neighbor_label(piece, kSeven, *w).labels;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::precondition) return std::nullopt;
      throw;
    }
  }
  const SolveResult r = solve(piece, g, piece_spec(core, total_vertices), search_options(options));
  if (r.status != SolveStatus::found) return std::nullopt;
  return r.labeling.labels;
}

void apply_transform(std::span<const char> alive, std::vector<Residue>& labels, bool negated,
                     Residue a) {
  if (!negated && a == 0) return;
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (alive[v]) labels[v] = transform_label(labels[v], negated, a);
}

}  // namespace

std::string_view to_string(PieceSource s) { return s == PieceSource::grace ? "grace" : "search"; }

std::string TraceStep::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::base:
      out << "base " << vertices.size() << " vertices by " << (base_by_search ? "search" : "grace");
      break;
    case Kind::leaf_attach:
      out << "leaf " << leaf << " at " << attach_at << " label " << (labels.empty() ? 0 : labels[0]);
      break;
    case Kind::split:
      out << "split " << to_string(plan.kind) << " p=" << plan.members.size() << " roots";
      for (Vertex r : plan.roots) out << ' ' << r;
      out << (negated ? " negate" : "") << " rotate " << rotation << " via " << to_string(source);
      if (target_weight) out << " w=" << *target_weight;
      break;
  }
  return out.str();
}

std::optional<Residue> choose_leaf_label(const CountProfile& core, Residue attach_label) {
  const std::size_t k = core.v_counts.size();
  if (k == 0 || core.e_counts.size() != k || attach_label >= k)
    throw Error(ErrorCode::invalid_argument, "profile and label disagree on the modulus");
  std::size_t n = 1, m = 1;
  for (std::size_t a = 0; a < k; ++a) {
    n += core.v_counts[a];
    m += core.e_counts[a];
  }
  const std::size_t cap_v = (n + k - 1) / k, cap_e = (m + k - 1) / k;
  for (Residue c = 0; c < k; ++c)
    if (core.v_counts[c] < cap_v && core.e_counts[(c + attach_label) % k] < cap_e) return c;
  return std::nullopt;
}

LeafAttachment attach_leaf(const Tree& core, const LabelingCertificate& core_cert, Vertex attach_at) {
  const Labeling& f = core_cert.labeling;
  if (attach_at >= core.size()) throw Error(ErrorCode::invalid_argument, "attach vertex out of range");
  const CordialityReport report = check_k_cordial(core, f);
  if (!report.cordial)
    throw Error(ErrorCode::precondition, "core labeling is not cordial: " + report.violation->describe());
  const auto c = choose_leaf_label(report.profile, f.labels[attach_at]);
  if (!c) throw Error(ErrorCode::precondition, "no label fits the new leaf");

  const Vertex leaf = static_cast<Vertex>(core.size());
  std::vector<Edge> edges(core.edges().begin(), core.edges().end());
  edges.push_back({attach_at, leaf});
  LeafAttachment out{Tree::from_edges(core.size() + 1, std::move(edges)), core_cert};
  out.certificate.labeling.labels.push_back(*c);
  TraceStep step;
  step.kind = TraceStep::Kind::leaf_attach;
  step.leaf = leaf;
  step.attach_at = attach_at;
  step.labels = {*c};
  out.certificate.trace.push_back(std::move(step));
  out.certificate.verified = is_k_cordial(out.tree, out.certificate.labeling);
  return out;
}

std::optional<TraceStep> combine(const Tree& t, std::span<const char> core_alive,
                                 std::vector<Residue>& labels, const SplitPlan& plan,
                                 const LabelerOptions& options) {
  const std::size_t core_size = static_cast<std::size_t>(std::count(core_alive.begin(), core_alive.end(), 1));
  const detail::TreeView core_view(t, core_alive, core_size);
  const CountProfile core = profile_of(core_view, labels);
  const RootedPiece piece = plan_piece(plan);
  const std::size_t total = core_size + piece.vertex_count();

  auto accept = [&](bool negated, Residue a, PieceSource source, std::optional<Residue> w,
                    std::vector<Residue> piece_labels) {
    apply_transform(core_alive, labels, negated, a);
    for (std::size_t i = 0; i < plan.members.size(); ++i) labels[plan.members[i]] = piece_labels[i];
    TraceStep step;
    step.kind = TraceStep::Kind::split;
    step.plan = plan;
    step.negated = negated;
    step.rotation = a;
    step.source = source;
    step.target_weight = w;
    step.labels = std::move(piece_labels);
    return step;
  };

  // Sequential fast path: rotate the core so the root reads 0, then aim the
  // root edge at a minority weight of the core.
  if (sequential_candidate(piece)) {
    const Residue a = (kSeven - labels[plan.roots[0]]) % kSeven;
    const CountProfile rotated = transform_profile(core, false, a);
    const Balance bal = balance_of(rotated.e_counts);
    std::vector<Residue> targets = bal.minority;
    if (targets.empty())
      for (Residue w = 0; w < kSeven; ++w) targets.push_back(w);
    const std::vector<Residue> g{0};
    for (Residue w : targets) {
      auto f = piece_labels_for(piece, g, rotated, total, PieceSource::grace, w, options);
      if (f && pasted_cordial(rotated, piece, g, *f))
        return accept(false, a, PieceSource::grace, w, std::move(*f));
    }
  }

  for (bool negated : {false, true}) {
    for (Residue a = 0; a < kSeven; ++a) {
      const CountProfile moved = transform_profile(core, negated, a);
      const auto g = root_labels_of(plan, labels, negated, a);
      auto f = piece_labels_for(piece, g, moved, total, PieceSource::search, std::nullopt, options);
      if (!f) continue;
      if (!pasted_cordial(moved, piece, g, *f))
        throw Error(ErrorCode::internal, "piece search broke the pasted counts");
      return accept(negated, a, PieceSource::search, std::nullopt, std::move(*f));
    }
  }
  return std::nullopt;
}

// --- induction ---------------------------------------------------------------

namespace {

struct Frame {
  bool is_leaf = false;
  Vertex leaf = 0;
  Vertex at = 0;
  std::size_t s = 0;
  std::vector<SplitPlan> plans;
  std::size_t index = 0;
  bool widened = false;
};

class Induction {
 public:
  Induction(const Tree& t, const LabelerOptions& options)
      : t_(t), options_(options), alive_(t.size(), 1), labels_(t.size(), 0), count_(t.size()) {}

  LabelingCertificate run() {
    forward();
    while (!stack_.empty()) {
      if (stack_.back().is_leaf) {
        finish_leaf();
        continue;
      }
      if (finish_split()) continue;
      // This frame's plan failed; move it (or a frame below) to its next plan.
      for (;;) {
        Frame& f = stack_.back();
        if (!f.is_leaf && advance(f)) {
          trace_.clear();
          forward();
          break;
        }
        if (f.is_leaf) revive(f.leaf);
        stack_.pop_back();
        if (stack_.empty())
          throw Error(ErrorCode::internal,
                      "every split plan failed; tree:\n" + format_tree(t_));
      }
    }
    LabelingCertificate cert;
    cert.labeling = Labeling{kSeven, labels_};
    cert.trace = std::move(trace_);
    cert.verified = is_k_cordial(t_, cert.labeling);
    if (!cert.verified)
      throw Error(ErrorCode::internal, "assembled labeling is not 7-cordial; tree:\n" + format_tree(t_));
    return cert;
  }

 private:
  detail::TreeView view() const { return detail::TreeView(t_, alive_, count_); }

  void kill(Vertex v) {
    alive_[v] = 0;
    --count_;
  }
  void revive(Vertex v) {
    alive_[v] = 1;
    ++count_;
  }

  void forward() {
    for (;;) {
      if (count_ <= kSeven) {
        TraceStep step;
        step.kind = TraceStep::Kind::base;
        step.labels = base_labels(view(), step.vertices, step.base_by_search);
        for (std::size_t i = 0; i < step.vertices.size(); ++i) labels_[step.vertices[i]] = step.labels[i];
        trace_.push_back(std::move(step));
        profile_ = profile_of(view(), labels_);
        return;
      }
      const std::size_t r = count_ % kSeven;
      Frame f;
      if (r >= 1 && r <= 4) {
        f.is_leaf = true;
        f.leaf = highest_leaf(view(), f.at);
        kill(f.leaf);
        stack_.push_back(std::move(f));
        continue;
      }
      f.s = r == 0 ? kSeven : r;
      f.plans = detail::find_splits(view(), f.s, SplitLimits{64, 64, 0});
      if (f.plans.empty()) {
        f.plans = detail::find_splits(view(), f.s, SplitLimits{0, 0, 256});
        f.widened = true;
      }
      if (f.plans.empty())
        throw Error(ErrorCode::internal, "no split of " + std::to_string(f.s) +
                                             " vertices; tree:\n" + format_tree(t_));
      for (Vertex m : f.plans[0].members) kill(m);
      stack_.push_back(std::move(f));
    }
  }

  void finish_leaf() {
    const Frame f = stack_.back();
    stack_.pop_back();
    const auto c = choose_leaf_label(profile_, labels_[f.at]);
    if (!c) throw Error(ErrorCode::internal, "leaf attachment found no label; tree:\n" + format_tree(t_));
    revive(f.leaf);
    labels_[f.leaf] = *c;
    ++profile_.v_counts[*c];
    ++profile_.e_counts[(*c + labels_[f.at]) % kSeven];
    TraceStep step;
    step.kind = TraceStep::Kind::leaf_attach;
    step.leaf = f.leaf;
    step.attach_at = f.at;
    step.labels = {*c};
    trace_.push_back(std::move(step));
  }

  bool finish_split() {
    Frame& f = stack_.back();
    const SplitPlan& plan = f.plans[f.index];
    auto step = combine(t_, alive_, labels_, plan, options_);
    if (!step) return false;
    for (Vertex m : plan.members) revive(m);
    trace_.push_back(std::move(*step));
    stack_.pop_back();
    profile_ = profile_of(view(), labels_);
    return true;
  }

  // Restores the frame's current piece and removes the next plan's piece.
  bool advance(Frame& f) {
    for (Vertex m : f.plans[f.index].members) revive(m);
    ++f.index;
    if (f.index == f.plans.size() && !f.widened) {
      auto more = detail::find_splits(view(), f.s, SplitLimits{0, 0, 256});
      for (auto& p : more) f.plans.push_back(std::move(p));
      f.widened = true;
    }
    if (f.index >= f.plans.size()) return false;
    for (Vertex m : f.plans[f.index].members) kill(m);
    return true;
  }

  const Tree& t_;
  const LabelerOptions& options_;
  std::vector<char> alive_;
  std::vector<Residue> labels_;
  std::size_t count_;
  CountProfile profile_;
  std::vector<Frame> stack_;
  std::vector<TraceStep> trace_;
};

[[noreturn]] void replay_error(std::size_t i, const std::string& what) {
  throw Error(ErrorCode::internal, "trace step " + std::to_string(i) + ": " + what);
}

}  // namespace

LabelingCertificate label_tree_7(const Tree& t, const LabelerOptions& options) {
  return Induction(t, options).run();
}

Labeling replay_trace(const Tree& t, std::span<const TraceStep> trace, const LabelerOptions& options) {
  const std::size_t n = t.size();
  std::vector<char> done(n, 0);
  std::vector<Residue> labels(n, 0);
  std::size_t count = 0;
  auto view = [&] { return detail::TreeView(t, done, count); };

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceStep& step = trace[i];
    switch (step.kind) {
      case TraceStep::Kind::base: {
        if (i != 0) replay_error(i, "base step after the start");
        for (Vertex v : step.vertices) {
          if (v >= n || done[v]) replay_error(i, "bad base vertex");
          done[v] = 1;
          ++count;
        }
        std::vector<Vertex> vertices;
        bool by_search = false;
        const auto f = base_labels(view(), vertices, by_search);
        if (vertices != step.vertices || f != step.labels || by_search != step.base_by_search)
          replay_error(i, "base labeling differs");
        for (std::size_t j = 0; j < vertices.size(); ++j) labels[vertices[j]] = f[j];
        break;
      }
      case TraceStep::Kind::leaf_attach: {
        if (step.leaf >= n || step.attach_at >= n || done[step.leaf] || !done[step.attach_at])
          replay_error(i, "bad leaf step");
        const auto nb = t.neighbors(step.leaf);
        if (!std::binary_search(nb.begin(), nb.end(), step.attach_at)) replay_error(i, "leaf not adjacent");
        const auto c = choose_leaf_label(profile_of(view(), labels), labels[step.attach_at]);
        if (!c || step.labels != std::vector<Residue>{*c}) replay_error(i, "leaf label differs");
        done[step.leaf] = 1;
        ++count;
        labels[step.leaf] = *c;
        break;
      }
      case TraceStep::Kind::split: {
        for (Vertex x : step.plan.roots)
          if (x >= n || !done[x]) replay_error(i, "split root not yet labelled");
        for (Vertex m : step.plan.members)
          if (m >= n || done[m]) replay_error(i, "split member already labelled");
        const RootedPiece piece = plan_piece(step.plan);
        const CountProfile core = transform_profile(profile_of(view(), labels), step.negated, step.rotation);
        const auto g = root_labels_of(step.plan, labels, step.negated, step.rotation);
        const auto f = piece_labels_for(piece, g, core, count + piece.vertex_count(), step.source,
                                        step.target_weight, options);
        if (!f || *f != step.labels) replay_error(i, "piece labeling differs");
        apply_transform(done, labels, step.negated, step.rotation);
        for (std::size_t j = 0; j < step.plan.members.size(); ++j) {
          done[step.plan.members[j]] = 1;
          labels[step.plan.members[j]] = (*f)[j];
        }
        count += piece.vertex_count();
        break;
      }
    }
  }
  if (count != n) replay_error(trace.size(), "trace leaves vertices unlabelled");
  return Labeling{kSeven, std::move(labels)};
}

}  // namespace cordial
