#include "secluded/enumerator.hpp"

#include <algorithm>
#include <string>

#include "secluded/errors.hpp"
#include "secluded/separators.hpp"

namespace secluded {

const char* to_string(NodeAction action) {
  switch (action) {
    case NodeAction::kStopNegativeBudget: return "stop-negative-budget";
    case NodeAction::kStopSeparatorTooLarge: return "stop-separator-too-large";
    case NodeAction::kStopSourceSplit: return "stop-source-split";
    case NodeAction::kStopSourceNotFree: return "stop-source-not-free";
    case NodeAction::kEmit: return "emit";
    case NodeAction::kLocalEnrichment: return "local-enrichment";
    case NodeAction::kSeparatorIncrease: return "separator-increase";
    case NodeAction::kPushSeparator: return "push-separator";
  }
  return "unknown";
}

namespace {

void check_params(const EnumParams& params) {
  if (params.s.empty()) throw InputError("enumeration needs a non-empty s");
  if (params.k < 0) throw InputError("k must be non-negative");
  require_vertices(params.graph, params.s, "s");
  require_vertices(params.graph, params.t, "t");
  if (params.s.intersects(params.t)) throw InputError("s and t must be disjoint");
}

class Enumerator {
 public:
  using StoppableSink = std::function<bool(const Candidate&)>;

  Enumerator(const EnumParams& params, const StoppableSink& sink, const EnumHooks& hooks)
      : params_(params), sink_(sink), hooks_(hooks) {}

  RecursionStats run() {
    visit(params_.graph, params_.s, params_.t, params_.k, 0, false);
    return stats_;
  }

 private:
  // Keeps the space accounting and the leave hook balanced on every exit.
  class Frame {
   public:
    Frame(Enumerator& e, std::size_t bytes) : e_(e), bytes_(bytes) {
      e_.live_bytes_ += bytes_;
      e_.stats_.peak_state_bytes = std::max(e_.stats_.peak_state_bytes, e_.live_bytes_);
    }
    ~Frame() {
      e_.live_bytes_ -= bytes_;
      if (e_.hooks_.on_leave) e_.hooks_.on_leave();
    }
    Frame(const Frame&) = delete;
    Frame& operator=(const Frame&) = delete;

   private:
    Enumerator& e_;
    std::size_t bytes_;
  };

  static std::size_t set_bytes(const VertexSet& x) { return x.size() * sizeof(Vertex); }

  void report(NodeTrace& trace, NodeAction action, std::size_t children) {
    trace.action = action;
    trace.children = children;
    if (children == 0) ++stats_.leaves;
    if (hooks_.on_node) hooks_.on_node(trace);
  }

  void visit_without(const Graph& g, Vertex u, const VertexSet& s, const VertexSet& t, int k,
                     std::size_t depth) {
    Graph reduced = delete_vertices(g, VertexSet{u});
    visit(reduced, s, t, k, depth, true);
  }

  void visit(const Graph& g, const VertexSet& s, const VertexSet& t, int k, std::size_t depth,
             bool owns_graph) {
    if (stopped_) return;
    Frame frame(*this, (owns_graph ? g.memory_bytes() : 0) + set_bytes(s) + set_bytes(t));
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    const ForbiddenFamily& fam = params_.family;

    NodeTrace trace;
    trace.depth = depth;
    trace.k = k;
    if (k < 0) return report(trace, NodeAction::kStopNegativeBudget, 0);

    const SeparatorAnalysis cut = analyze(g, s, t, k);
    if (!cut.finite()) return report(trace, NodeAction::kStopSeparatorTooLarge, 0);
    if (hooks_.compute_measure) {
      const auto whole = static_cast<long>(count_present_partials(g, g.vertices(), fam));
      const auto inside = static_cast<long>(count_present_partials(g, s, fam));
      trace.measure = 2L * k - cut.lambda + (whole - inside);
    }

    const VertexSet component = reachable(g, VertexSet{s.front()}, {});
    if (!s.is_subset_of(component)) return report(trace, NodeAction::kStopSourceSplit, 0);
    if (!is_family_free(g, s, fam)) return report(trace, NodeAction::kStopSourceNotFree, 0);

    if (!component.intersects(t) && is_family_free(g, component, fam)) {
      report(trace, NodeAction::kEmit, 0);
      emit(component);
      return;
    }

    if (auto local = find_step3_enrichment(g, s, t, fam)) {
      report(trace, NodeAction::kLocalEnrichment, local->size() + 1);
      for (Vertex u : *local) visit_without(g, u, s, t, k - 1, depth + 1);
      visit(g, s | *local, t, k, depth + 1, false);
      return;
    }

    const EnrichmentSupport enrichments = connected_enrichment_support(g, s, t, fam);
    if (auto v = find_increasing_vertex(g, s, t, enrichments.support, cut)) {
      auto hit = std::find_if(enrichments.sets.begin(), enrichments.sets.end(),
                              [&](const VertexSet& u) { return u.contains(*v); });
      const VertexSet chosen = *hit;
      report(trace, NodeAction::kSeparatorIncrease, chosen.size() + 2);
      for (Vertex u : chosen) visit_without(g, u, s, t, k - 1, depth + 1);
      visit(g, s | chosen, t, k, depth + 1, false);
      visit(g, s, t | chosen, k, depth + 1, false);
      return;
    }

    const SeparatorAnalysis pushed = analyze(g, s, t | enrichments.support, k);
    if (!pushed.finite() || pushed.lambda != cut.lambda) {
      throw InternalError("separator grew although no enrichment vertex increases it");
    }
    const Vertex p = choose_pivot(pushed.farthest);
    const VertexSet& far_side = pushed.reach_farthest;
    const bool p_in_t = t.contains(p);
    report(trace, NodeAction::kPushSeparator, p_in_t ? 1 : 2);
    {
      VertexSet t_without_p = t;
      t_without_p.erase(p);
      visit_without(g, p, far_side, t_without_p, k - 1, depth + 1);
    }
    if (!p_in_t) {
      VertexSet grown = far_side;
      grown.insert(p);
      visit(g, grown, t, k, depth + 1, false);
    }
  }

  void emit(const VertexSet& members) {
    Candidate c;
    c.members = members;
    c.boundary = neighborhood(params_.graph, members);
    c.boundary_size = c.boundary.size();
    if (c.boundary_size > static_cast<std::size_t>(params_.k)) {
      throw InternalError("emitted set has " + std::to_string(c.boundary_size) +
                          " boundary vertices, budget " + std::to_string(params_.k));
    }
    ++stats_.emitted;
    if (!sink_(c)) stopped_ = true;
  }

  const EnumParams& params_;
  const StoppableSink& sink_;
  const EnumHooks& hooks_;
  RecursionStats stats_;
  std::size_t live_bytes_ = 0;
  bool stopped_ = false;
};

}  // namespace

RecursionStats enumerate(const EnumParams& params, const CandidateSink& sink,
                         const EnumHooks& hooks) {
  return enumerate_until(
      params,
      [&](const Candidate& c) {
        sink(c);
        return true;
      },
      hooks);
}

RecursionStats enumerate_until(const EnumParams& params,
                               const std::function<bool(const Candidate&)>& sink,
                               const EnumHooks& hooks) {
  check_params(params);
  Enumerator e(params, sink, hooks);
  return e.run();
}

Vertex choose_pivot(const VertexSet& p_set) {
  if (p_set.empty()) throw InternalError("choose_pivot on an empty separator");
  return p_set.front();
}

std::vector<Candidate> filter_seclusion_maximal(const std::vector<Candidate>& cands) {
  std::vector<Candidate> unique = cands;
  std::sort(unique.begin(), unique.end(),
            [](const Candidate& a, const Candidate& b) { return a.members < b.members; });
  unique.erase(std::unique(unique.begin(), unique.end(),
                           [](const Candidate& a, const Candidate& b) {
                             return a.members == b.members;
                           }),
               unique.end());
  std::vector<Candidate> kept;
  for (const auto& c : unique) {
    bool dominated = std::any_of(unique.begin(), unique.end(), [&](const Candidate& other) {
      return other.members.size() > c.members.size() && c.members.is_subset_of(other.members) &&
             other.boundary_size <= c.boundary_size;
    });
    if (!dominated) kept.push_back(c);
  }
  return kept;
}

long measure(const EnumParams& params) {
  check_params(params);
  const SeparatorAnalysis cut = analyze(params.graph, params.s, params.t, params.k);
  if (!cut.finite()) throw InputError("measure is undefined when lambda exceeds k");
  const auto whole =
      static_cast<long>(count_present_partials(params.graph, params.graph.vertices(), params.family));
  const auto inside =
      static_cast<long>(count_present_partials(params.graph, params.s, params.family));
  return 2L * params.k - cut.lambda + (whole - inside);
}

}  // namespace secluded
