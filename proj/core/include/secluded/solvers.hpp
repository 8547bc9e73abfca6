#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "secluded/instances.hpp"

namespace secluded {

/// Runs the enumeration from every singleton {v} with empty t and keeps the
/// heaviest candidate that really is F-free; ties go to the
/// lexicographically smallest member set. `threads` > 1 splits the start
/// vertices across worker threads without changing the answer.
std::optional<WeightedSet> max_weight_secluded(const WeightedInstance& inst,
                                               unsigned threads = 1);

struct ScatteredStats {
  std::size_t nodes = 0;
  std::size_t enumerate_calls = 0;
  /// Largest per-call growth base seen: max over calls with budget s >= 1
  /// of (candidates emitted)^(1/s), at least 1.
  double candidate_base = 1.0;
};

/// A set X with |X| <= k after whose removal every component avoids one of
/// the families, or nothing when no such set exists.
std::optional<VertexSet> scattered_deletion(const ScatteredInstance& inst,
                                            ScatteredStats* stats = nullptr);

/// Every component of g - x is F_i-free for some i.
bool verify_scattered(const Graph& g, const VertexSet& x,
                      const std::vector<ForbiddenFamily>& families);

}  // namespace secluded
