#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "secluded/graph.hpp"
#include "secluded/instances.hpp"
#include "secluded/subiso.hpp"

// Exhaustive reference implementations. They scan vertex subsets as
// bitmasks and share only graph and pattern types with the production
// code: no flow, no enumeration recursion, no embedding search.
namespace secluded::oracle {

/// Largest graph the oracles accept.
inline constexpr std::size_t kMaxOrder = 20;

/// Throws InputError when g has more than kMaxOrder vertices.
void require_small(const Graph& g);

/// Induced containment by trying every injective map, without pruning.
bool naive_contains_induced(const Graph& g, const VertexSet& scope, const Graph& pattern);

/// Every C with s <= C <= V \ t that is connected, F-free and k-secluded,
/// and not strictly contained in another such set whose boundary is no
/// larger. Ascending lexicographic order.
std::vector<VertexSet> brute_enum(const Graph& g, const VertexSet& s, const VertexSet& t, int k,
                                  const ForbiddenFamily& fam);

struct SeparatorCensus {
  /// Minimum left-restricted separator size; nothing when s meets t.
  std::optional<int> lambda;
  /// All minimum separators, ascending lexicographic.
  std::vector<VertexSet> minimum;
};

SeparatorCensus brute_min_separators(const Graph& g, const VertexSet& s, const VertexSet& t);

std::optional<WeightedSet> brute_max_weight(const WeightedInstance& inst);

/// Smallest X by size, then lexicographic, or nothing if none has |X| <= k.
std::optional<VertexSet> brute_scattered(const ScatteredInstance& inst);

/// Bitmask view of one graph for repeated queries. Bit i stands for the
/// i-th smallest vertex id.
class Exhaustive {
 public:
  using Mask = std::uint32_t;

  explicit Exhaustive(const Graph& g);

  std::size_t order() const noexcept { return ids_.size(); }
  Mask full() const noexcept { return full_; }
  Mask to_mask(const VertexSet& x) const;
  VertexSet to_set(Mask m) const;

  Mask neighborhood(Mask x) const;
  /// Vertices reachable from `from` & ~blocked in the graph minus `blocked`.
  Mask reach(Mask from, Mask blocked) const;
  bool connected(Mask x) const;
  /// Vertex sets of every induced copy of `pattern` in the whole graph.
  std::vector<Mask> occurrences(const Graph& pattern) const;

  /// Minimum left-restricted separator size; -1 when s meets t.
  int min_separator(Mask s, Mask t) const;
  std::vector<Mask> minimum_separators(Mask s, Mask t) const;

  /// Per-mask flags for one family: bit m of the result is whether g[m] is
  /// F-free.
  std::vector<bool> family_free_table(const ForbiddenFamily& fam) const;

  /// brute_enum over precomputed F-freeness.
  std::vector<Mask> enumerate(Mask s, Mask t, int k, const std::vector<bool>& free_table) const;

 private:
  std::vector<Vertex> ids_;
  std::vector<Mask> adj_;
  Mask full_ = 0;
};

}  // namespace secluded::oracle
