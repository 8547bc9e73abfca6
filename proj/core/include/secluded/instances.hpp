#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "secluded/graph.hpp"
#include "secluded/subiso.hpp"

namespace secluded {

using Weight = std::int64_t;

/// Maximum-weight connected k-secluded F-free subgraph.
struct WeightedInstance {
  Graph graph;
  /// Every vertex needs a weight >= 1.
  std::map<Vertex, Weight> weights;
  int k = 0;
  ForbiddenFamily family;
};

/// Deletion to the scattered class whose components each avoid one of the
/// listed families.
struct ScatteredInstance {
  Graph graph;
  int k = 0;
  std::vector<ForbiddenFamily> families;
};

struct WeightedSet {
  VertexSet members;
  Weight weight = 0;

  friend bool operator==(const WeightedSet&, const WeightedSet&) = default;
};

/// Throws InputError unless every vertex carries a positive weight.
void validate(const WeightedInstance& inst);
/// Throws InputError when there are no families, one of them is empty, or
/// k is negative.
void validate(const ScatteredInstance& inst);

/// Sum of member weights; InputError on overflow.
Weight total_weight(const WeightedInstance& inst, const VertexSet& members);

}  // namespace secluded
