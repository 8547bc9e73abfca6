#pragma once

#include <optional>

#include "secluded/graph.hpp"

namespace secluded {

enum class CutOutcome {
  kFinite,
  /// s and t intersect: no left-restricted separator exists.
  kInfinite,
  /// The flow exceeded the caller's budget; extremal fields are unset.
  kExceedsBudget,
};

/// Minimum left-restricted (s,t)-separators: vertex sets disjoint from s
/// (but possibly meeting t) whose removal leaves no s-t path.
struct SeparatorAnalysis {
  CutOutcome outcome = CutOutcome::kFinite;
  /// Minimum separator size; meaningful only when finite().
  int lambda = 0;
  /// Closest minimum separator P-: smallest reachable side.
  VertexSet closest;
  /// Farthest minimum separator P+: largest reachable side.
  VertexSet farthest;
  /// R(s, P-) and R(s, P+).
  VertexSet reach_closest;
  VertexSet reach_farthest;

  bool finite() const noexcept { return outcome == CutOutcome::kFinite; }
};

/// Runs at most budget+1 unit augmentations on the split-vertex network of
/// g plus a fresh sink adjacent to t, then reads both extremal separators
/// off the final residual network. Throws InputError when s is empty,
/// budget is negative or an id is unknown.
SeparatorAnalysis analyze(const Graph& g, const VertexSet& s, const VertexSet& t, int budget);

/// lambda(s, t + v) > lambda(s, t), decided as v in R(s, P-).
bool increase_vertex_left(const Graph& g, const VertexSet& s, const VertexSet& t,
                          const SeparatorAnalysis& analysis, Vertex v);

/// lambda(s + v, t) > lambda(s, t), decided as v in R(t, P+) or P+.
bool increase_vertex_right(const Graph& g, const VertexSet& s, const VertexSet& t,
                           const SeparatorAnalysis& analysis, Vertex v);

/// Smallest v in z whose addition to t raises lambda; nothing means
/// lambda(s, t) == lambda(s, t + z).
std::optional<Vertex> find_increasing_vertex(const Graph& g, const VertexSet& s,
                                             const VertexSet& t, const VertexSet& z,
                                             const SeparatorAnalysis& analysis);

}  // namespace secluded
