#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "secluded/vertex_set.hpp"

namespace secluded {

/// Simple undirected graph whose vertex ids survive vertex deletion.
///
/// Ids are non-negative integers; they index the adjacency storage directly,
/// so a graph obtained by deleting vertices keeps the same id space with
/// holes. Graphs are values: every operation that removes vertices returns
/// a new graph and leaves its argument untouched.
class Graph {
 public:
  Graph() = default;
  /// Vertices 0..n-1, no edges.
  explicit Graph(Vertex n);

  static Graph from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);

  /// Builder helpers. Both throw InputError on malformed input (negative id,
  /// self-loop, missing endpoint); adding an existing edge is a no-op.
  void add_vertex(Vertex v);
  void add_edge(Vertex u, Vertex v);

  bool has_vertex(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < present_.size() && present_[v];
  }
  bool adjacent(Vertex u, Vertex v) const;
  /// Ascending neighbor ids. Requires has_vertex(v).
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  const VertexSet& vertices() const noexcept { return vertices_; }
  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  /// One past the largest id ever allocated; bound for id-indexed arrays.
  Vertex id_bound() const noexcept { return static_cast<Vertex>(present_.size()); }

  /// Edges as (u, v) with u < v, ascending.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Approximate heap footprint, used by the enumerator's space accounting.
  std::size_t memory_bytes() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges() == b.edges();
  }

 private:
  friend Graph delete_vertices(const Graph& g, const VertexSet& x);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<char> present_;
  VertexSet vertices_;
  std::size_t edge_count_ = 0;
};

/// Throws InputError naming the first id of `x` that is not a vertex of `g`.
void require_vertices(const Graph& g, const VertexSet& x, const char* what);

/// Open neighborhood N(x) = N[x] \ x.
VertexSet neighborhood(const Graph& g, const VertexSet& x);
/// Vertices reachable from s \ p in g - p.
VertexSet reachable(const Graph& g, const VertexSet& s, const VertexSet& p);
/// Connected components, each ascending, listed by minimum element.
std::vector<VertexSet> components(const Graph& g);
/// True iff g[x] is connected; empty set is not connected.
bool is_connected_set(const Graph& g, const VertexSet& x);
/// g - x. Surviving ids are unchanged.
Graph delete_vertices(const Graph& g, const VertexSet& x);
/// g[x], keeping ids.
Graph induced_subgraph(const Graph& g, const VertexSet& x);

}  // namespace secluded
