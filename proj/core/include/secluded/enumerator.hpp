#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "secluded/graph.hpp"
#include "secluded/subiso.hpp"

namespace secluded {

/// Input of one enumeration: all connected, F-free sets C with
/// s <= C <= V \ t and |N(C)| <= k that are seclusion-maximal.
struct EnumParams {
  Graph graph;
  VertexSet s;
  VertexSet t;
  int k = 0;
  ForbiddenFamily family;
};

/// A reported set, expressed in the input graph.
struct Candidate {
  VertexSet members;
  VertexSet boundary;
  std::size_t boundary_size = 0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct RecursionStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t max_depth = 0;  // root has depth 0
  std::size_t emitted = 0;
  /// High-water mark of state held by the active recursion path: reduced
  /// graphs and the s/t sets of every open frame.
  std::size_t peak_state_bytes = 0;
};

/// What a recursion node did.
enum class NodeAction {
  kStopNegativeBudget,
  kStopSeparatorTooLarge,
  kStopSourceSplit,
  kStopSourceNotFree,
  kEmit,
  kLocalEnrichment,    // a tight enrichment hanging off s
  kSeparatorIncrease,  // a connected enrichment raises lambda when added to t
  kPushSeparator,      // grow s to the far side of the farthest separator
};

const char* to_string(NodeAction action);

/// Snapshot of a node, reported before its children run.
struct NodeTrace {
  std::size_t depth = 0;
  int k = 0;
  /// k + (k - lambda) + (g(V) - g(s)); set only when tracing asks for it and
  /// lambda <= k.
  std::optional<long> measure;
  NodeAction action = NodeAction::kEmit;
  std::size_t children = 0;
};

/// Instrumentation hooks; all optional.
struct EnumHooks {
  /// Fired once per node after its action is known, before recursing.
  std::function<void(const NodeTrace&)> on_node;
  /// Fired when a node's subtree is finished.
  std::function<void()> on_leave;
  /// Computing the measure costs two partial censuses per node.
  bool compute_measure = false;
};

using CandidateSink = std::function<void(const Candidate&)>;

/// Streams a superset of the seclusion-maximal sets to `sink`. Nothing is
/// retained between emissions. Throws InputError when s is empty, s and t
/// intersect, k is negative or ids are unknown.
RecursionStats enumerate(const EnumParams& params, const CandidateSink& sink,
                         const EnumHooks& hooks = {});

/// Like enumerate, but the sink returns false to abandon the rest of the
/// search. Used by callers that only need the first useful candidate.
RecursionStats enumerate_until(const EnumParams& params,
                               const std::function<bool(const Candidate&)>& sink,
                               const EnumHooks& hooks = {});

/// Tie-break for the pushed separator vertex: its minimum.
Vertex choose_pivot(const VertexSet& p_set);

/// Exact post-filter: drops C when another candidate strictly contains it
/// with no larger boundary; deduplicates; sorts by member set.
std::vector<Candidate> filter_seclusion_maximal(const std::vector<Candidate>& cands);

/// Progress measure k + (k - lambda(s,t)) + (g(V) - g(s)). Throws InputError
/// when lambda(s,t) > k, where it is undefined.
long measure(const EnumParams& params);

}  // namespace secluded
