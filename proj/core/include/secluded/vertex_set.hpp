#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace secluded {

using Vertex = std::int32_t;

/// Sorted, duplicate-free set of vertex ids. Iteration is ascending.
///
/// Backed by a sorted vector: the sets handled by the algorithms are small
/// and mostly built once, so flat storage beats node-based containers.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);

  /// Accepts ids in any order, possibly repeated.
  static VertexSet from_unsorted(std::vector<Vertex> ids);
  /// Caller guarantees `ids` is strictly ascending.
  static VertexSet from_sorted(std::vector<Vertex> ids);

  bool empty() const noexcept { return items_.empty(); }
  std::size_t size() const noexcept { return items_.size(); }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  Vertex front() const { return items_.front(); }
  Vertex back() const { return items_.back(); }
  const std::vector<Vertex>& items() const noexcept { return items_; }

  bool contains(Vertex v) const {
    return std::binary_search(items_.begin(), items_.end(), v);
  }
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(),
                         items_.begin(), items_.end());
  }

  void insert(Vertex v);
  void erase(Vertex v);

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Lexicographic on the ascending member sequence.
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b) {
    return a.items_ <=> b.items_;
  }

 private:
  std::vector<Vertex> items_;
};

/// "1,4,7"; the empty set renders as "".
std::string to_string(const VertexSet& s);
std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace secluded
