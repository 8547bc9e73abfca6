#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "secluded/graph.hpp"

namespace secluded {

/// Small pattern graph with vertices relabelled to 0..order-1.
struct PatternGraph {
  Graph graph;
  std::vector<VertexSet> components;
  std::string name;

  std::size_t order() const noexcept { return graph.order(); }
};

/// Relabels `g` onto 0..n-1 (ascending id order) and caches its components.
PatternGraph make_pattern(const Graph& g, std::string name = {});

/// A finite set of forbidden induced subgraphs plus its partial forbidden
/// graphs: every non-empty graph obtained from a pattern by deleting some of
/// its connected components, up to isomorphism.
struct ForbiddenFamily {
  std::vector<PatternGraph> patterns;
  std::vector<PatternGraph> partials;
  std::size_t max_order = 0;

  bool empty() const noexcept { return patterns.empty(); }
};

ForbiddenFamily build_family(const std::vector<Graph>& patterns);

/// Exhaustive permutation test; intended for pattern-sized graphs.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Host image of pattern vertex i at position i.
using Embedding = std::vector<Vertex>;

/// Search limits for for_each_embedding.
struct EmbeddingScope {
  /// Host vertices an embedding may use.
  const VertexSet* allowed = nullptr;
  /// Called after all vertices of pattern component `c` are mapped; returning
  /// false prunes every extension of the partial embedding.
  std::function<bool(std::size_t c, const Embedding& partial)> component_filter;
};

/// Visits every induced subgraph isomorphism from `pattern` into
/// g[*scope.allowed] in a fixed order: pattern vertices component by
/// component in breadth-first order, host candidates ascending by id.
/// The visitor returns false to stop the search. Returns false iff stopped.
bool for_each_embedding(const Graph& g, const PatternGraph& pattern,
                        const EmbeddingScope& scope,
                        const std::function<bool(const Embedding&)>& visit);

bool contains_induced(const Graph& g, const VertexSet& scope,
                      const PatternGraph& pattern);

/// No full pattern of `fam` occurs in g[scope]. Partials are not consulted.
bool is_family_free(const Graph& g, const VertexSet& scope,
                    const ForbiddenFamily& fam);

/// g(scope): how many catalogue partials occur in g[scope].
std::size_t count_present_partials(const Graph& g, const VertexSet& scope,
                                   const ForbiddenFamily& fam);

/// First tight enrichment U of s avoiding t whose every component of g[U]
/// touches s, or nothing.
std::optional<VertexSet> find_step3_enrichment(const Graph& g, const VertexSet& s,
                                               const VertexSet& t,
                                               const ForbiddenFamily& fam);

struct EnrichmentSupport {
  /// Distinct connected tight enrichments, ascending lexicographically.
  std::vector<VertexSet> sets;
  /// Union of `sets`.
  VertexSet support;
};

EnrichmentSupport connected_enrichment_support(const Graph& g, const VertexSet& s,
                                               const VertexSet& t,
                                               const ForbiddenFamily& fam);

}  // namespace secluded
