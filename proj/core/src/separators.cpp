#include "secluded/separators.hpp"

#include <deque>
#include <limits>
#include <string>

#include "secluded/errors.hpp"

namespace secluded {

namespace {

class FlowNetwork {
 public:
  struct Arc {
    int head;
    int capacity;
    int flow;
  };

  explicit FlowNetwork(int nodes) : out_(nodes) {}

  void add_arc(int from, int to, int capacity) {
    out_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, capacity, 0});
    out_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, 0});
  }

  int residual(int arc) const { return arcs_[arc].capacity - arcs_[arc].flow; }

  // One shortest augmenting path; false if none exists.
  bool augment(int source, int sink) {
    std::vector<int> via(out_.size(), -1);
    std::vector<char> seen(out_.size(), 0);
    std::deque<int> queue{source};
    seen[source] = 1;
    while (!queue.empty() && !seen[sink]) {
      int node = queue.front();
      queue.pop_front();
      for (int arc : out_[node]) {
        int head = arcs_[arc].head;
        if (!seen[head] && residual(arc) > 0) {
          seen[head] = 1;
          via[head] = arc;
          queue.push_back(head);
        }
      }
    }
    if (!seen[sink]) return false;
    int bottleneck = std::numeric_limits<int>::max();
    for (int node = sink; node != source; node = arcs_[via[node] ^ 1].head) {
      bottleneck = std::min(bottleneck, residual(via[node]));
    }
    for (int node = sink; node != source; node = arcs_[via[node] ^ 1].head) {
      arcs_[via[node]].flow += bottleneck;
      arcs_[via[node] ^ 1].flow -= bottleneck;
    }
    flow_ += bottleneck;
    return true;
  }

  // Nodes reachable from `root` along residual arcs (forward) or nodes that
  // reach `root` along residual arcs (backward).
  std::vector<char> residual_closure(int root, bool backward) const {
    std::vector<char> seen(out_.size(), 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      int node = stack.back();
      stack.pop_back();
      for (int arc : out_[node]) {
        int head = arcs_[arc].head;
        // Backward search walks arc (head -> node), i.e. the twin of `arc`.
        int usable = backward ? residual(arc ^ 1) : residual(arc);
        if (!seen[head] && usable > 0) {
          seen[head] = 1;
          stack.push_back(head);
        }
      }
    }
    return seen;
  }

  int flow() const noexcept { return flow_; }

 private:
  std::vector<std::vector<int>> out_;
  std::vector<Arc> arcs_;
  int flow_ = 0;
};

constexpr int kSource = 0;
constexpr int kSink = 1;
constexpr int kEdgeCapacity = 2;

}  // namespace

SeparatorAnalysis analyze(const Graph& g, const VertexSet& s, const VertexSet& t, int budget) {
  if (s.empty()) throw InputError("separator analysis needs a non-empty source set");
  if (budget < 0) throw InputError("separator budget must be non-negative");
  require_vertices(g, s, "analyze(s)");
  require_vertices(g, t, "analyze(t)");

  SeparatorAnalysis result;
  if (s.intersects(t)) {
    result.outcome = CutOutcome::kInfinite;
    return result;
  }

  // Every vertex outside s becomes v- -> v+ with capacity 1; s collapses
  // into the source and a fresh sink hangs off every vertex of t, so t
  // itself stays deletable (left-restricted separators).
  const Vertex bound = g.id_bound();
  std::vector<int> split(bound, -1);
  int nodes = 2;
  for (Vertex v : g.vertices()) {
    if (!s.contains(v)) {
      split[v] = nodes;
      nodes += 2;
    }
  }
  auto in_node = [&](Vertex v) { return split[v]; };
  auto out_node = [&](Vertex v) { return split[v] + 1; };

  FlowNetwork net(nodes);
  for (Vertex v : g.vertices()) {
    if (split[v] >= 0) net.add_arc(in_node(v), out_node(v), 1);
  }
  for (auto [u, v] : g.edges()) {
    const bool su = split[u] < 0;
    const bool sv = split[v] < 0;
    if (su && sv) continue;
    if (su) {
      net.add_arc(kSource, in_node(v), kEdgeCapacity);
    } else if (sv) {
      net.add_arc(kSource, in_node(u), kEdgeCapacity);
    } else {
      net.add_arc(out_node(u), in_node(v), kEdgeCapacity);
      net.add_arc(out_node(v), in_node(u), kEdgeCapacity);
    }
  }
  for (Vertex v : t) net.add_arc(out_node(v), kSink, kEdgeCapacity);

  while (net.flow() <= budget && net.augment(kSource, kSink)) {
  }
  if (net.flow() > budget) {
    result.outcome = CutOutcome::kExceedsBudget;
    result.lambda = net.flow();
    return result;
  }
  result.lambda = net.flow();

  const std::vector<char> from_source = net.residual_closure(kSource, false);
  const std::vector<char> to_sink = net.residual_closure(kSink, true);
  std::vector<Vertex> closest;
  std::vector<Vertex> farthest;
  for (Vertex v : g.vertices()) {
    if (split[v] < 0) continue;
    if (from_source[in_node(v)] && !from_source[out_node(v)]) closest.push_back(v);
    if (to_sink[out_node(v)] && !to_sink[in_node(v)]) farthest.push_back(v);
  }
  result.closest = VertexSet::from_sorted(std::move(closest));
  result.farthest = VertexSet::from_sorted(std::move(farthest));
  if (result.closest.size() != static_cast<std::size_t>(result.lambda) ||
      result.farthest.size() != static_cast<std::size_t>(result.lambda)) {
    throw InternalError("extremal separator size disagrees with flow value " +
                        std::to_string(result.lambda));
  }
  result.reach_closest = reachable(g, s, result.closest);
  result.reach_farthest = reachable(g, s, result.farthest);
  return result;
}

namespace {

void require_finite(const SeparatorAnalysis& analysis) {
  if (!analysis.finite()) throw InputError("separator analysis is not finite");
}

}  // namespace

bool increase_vertex_left(const Graph& g, const VertexSet&, const VertexSet&,
                          const SeparatorAnalysis& analysis, Vertex v) {
  require_finite(analysis);
  if (!g.has_vertex(v)) throw InputError("unknown vertex id " + std::to_string(v));
  return analysis.reach_closest.contains(v);
}

bool increase_vertex_right(const Graph& g, const VertexSet&, const VertexSet& t,
                           const SeparatorAnalysis& analysis, Vertex v) {
  require_finite(analysis);
  if (!g.has_vertex(v)) throw InputError("unknown vertex id " + std::to_string(v));
  if (analysis.farthest.contains(v)) return true;
  return reachable(g, t, analysis.farthest).contains(v);
}

std::optional<Vertex> find_increasing_vertex(const Graph&, const VertexSet&, const VertexSet&,
                                             const VertexSet& z,
                                             const SeparatorAnalysis& analysis) {
  require_finite(analysis);
  for (Vertex v : z) {
    if (analysis.reach_closest.contains(v)) return v;
  }
  return std::nullopt;
}

}  // namespace secluded
