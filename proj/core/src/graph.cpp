#include "secluded/graph.hpp"

#include <string>

#include "secluded/errors.hpp"

namespace secluded {

Graph::Graph(Vertex n) {
  if (n < 0) throw InputError("graph order must be non-negative");
  adjacency_.resize(n);
  present_.assign(n, 1);
  std::vector<Vertex> ids(n);
  for (Vertex v = 0; v < n; ++v) ids[v] = v;
  vertices_ = VertexSet::from_sorted(std::move(ids));
}

Graph Graph::from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_vertex(Vertex v) {
  if (v < 0) throw InputError("negative vertex id " + std::to_string(v));
  if (static_cast<std::size_t>(v) >= present_.size()) {
    present_.resize(v + 1, 0);
    adjacency_.resize(v + 1);
  }
  if (!present_[v]) {
    present_[v] = 1;
    vertices_.insert(v);
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (!has_vertex(u) || !has_vertex(v)) {
    throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                     " references a missing vertex");
  }
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  if (adjacency_[u].size() > adjacency_[v].size()) std::swap(u, v);
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u : vertices_) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::memory_bytes() const noexcept {
  std::size_t bytes = sizeof(Graph) + present_.capacity() +
                      adjacency_.capacity() * sizeof(std::vector<Vertex>) +
                      vertices_.size() * sizeof(Vertex);
  for (const auto& row : adjacency_) bytes += row.capacity() * sizeof(Vertex);
  return bytes;
}

void require_vertices(const Graph& g, const VertexSet& x, const char* what) {
  for (Vertex v : x) {
    if (!g.has_vertex(v)) {
      throw InputError(std::string(what) + ": unknown vertex id " + std::to_string(v));
    }
  }
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  require_vertices(g, x, "neighborhood");
  std::vector<char> mark(g.id_bound(), 0);
  for (Vertex v : x) mark[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v : x) {
    for (Vertex w : g.neighbors(v)) {
      if (!mark[w]) {
        mark[w] = 2;
        out.push_back(w);
      }
    }
  }
  return VertexSet::from_unsorted(std::move(out));
}

VertexSet reachable(const Graph& g, const VertexSet& s, const VertexSet& p) {
  require_vertices(g, s, "reachable");
  require_vertices(g, p, "reachable");
  // 1 = blocked, 2 = visited
  std::vector<char> mark(g.id_bound(), 0);
  for (Vertex v : p) mark[v] = 1;
  std::vector<Vertex> stack;
  std::vector<Vertex> out;
  for (Vertex v : s) {
    if (mark[v] == 0) {
      mark[v] = 2;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (mark[w] == 0) {
        mark[w] = 2;
        stack.push_back(w);
      }
    }
  }
  return VertexSet::from_unsorted(std::move(out));
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<char> seen(g.id_bound(), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root : g.vertices()) {
    if (seen[root]) continue;
    std::vector<Vertex> members;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.push_back(VertexSet::from_unsorted(std::move(members)));
  }
  return out;
}

bool is_connected_set(const Graph& g, const VertexSet& x) {
  require_vertices(g, x, "is_connected_set");
  if (x.empty()) return false;
  std::vector<char> mark(g.id_bound(), 0);
  for (Vertex v : x) mark[v] = 1;
  std::vector<Vertex> stack{x.front()};
  mark[x.front()] = 2;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : g.neighbors(v)) {
      if (mark[w] == 1) {
        mark[w] = 2;
        stack.push_back(w);
      }
    }
  }
  return reached == x.size();
}

Graph delete_vertices(const Graph& g, const VertexSet& x) {
  require_vertices(g, x, "delete_vertices");
  Graph out = g;
  if (x.empty()) return out;
  std::size_t removed_edges = 0;
  for (Vertex v : x) {
    for (Vertex w : g.neighbors(v)) {
      if (!x.contains(w)) {
        auto& row = out.adjacency_[w];
        row.erase(std::lower_bound(row.begin(), row.end(), v));
        ++removed_edges;
      } else if (v < w) {
        ++removed_edges;
      }
    }
    out.adjacency_[v].clear();
    out.adjacency_[v].shrink_to_fit();
    out.present_[v] = 0;
  }
  out.vertices_ = g.vertices_ - x;
  out.edge_count_ -= removed_edges;
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
  require_vertices(g, x, "induced_subgraph");
  return delete_vertices(g, g.vertices() - x);
}

}  // namespace secluded
