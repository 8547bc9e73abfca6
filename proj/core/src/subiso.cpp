#include "secluded/subiso.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "secluded/errors.hpp"

namespace secluded {

PatternGraph make_pattern(const Graph& g, std::string name) {
  const auto& ids = g.vertices().items();
  std::vector<Vertex> position(g.id_bound(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) position[ids[i]] = static_cast<Vertex>(i);
  Graph relabelled(static_cast<Vertex>(ids.size()));
  for (auto [u, v] : g.edges()) relabelled.add_edge(position[u], position[v]);
  PatternGraph p{std::move(relabelled), {}, std::move(name)};
  p.components = components(p.graph);
  return p;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const auto& av = a.vertices().items();
  std::vector<Vertex> perm = b.vertices().items();
  auto degrees = [](const Graph& g) {
    std::vector<std::size_t> d;
    for (Vertex v : g.vertices()) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  const std::size_t n = av.size();
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (a.degree(av[i]) != b.degree(perm[i])) ok = false;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = a.adjacent(av[i], av[j]) == b.adjacent(perm[i], perm[j]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

ForbiddenFamily build_family(const std::vector<Graph>& patterns) {
  ForbiddenFamily fam;
  for (const Graph& raw : patterns) {
    if (raw.order() == 0) throw InputError("forbidden pattern with zero vertices");
    PatternGraph pattern = make_pattern(raw);
    fam.max_order = std::max(fam.max_order, pattern.order());
    const std::size_t c = pattern.components.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << c); ++mask) {
      VertexSet keep;
      for (std::size_t i = 0; i < c; ++i) {
        if (mask >> i & 1) keep = keep | pattern.components[i];
      }
      PatternGraph partial = make_pattern(induced_subgraph(pattern.graph, keep));
      bool duplicate = std::any_of(
          fam.partials.begin(), fam.partials.end(),
          [&](const PatternGraph& q) { return are_isomorphic(q.graph, partial.graph); });
      if (!duplicate) fam.partials.push_back(std::move(partial));
    }
    fam.patterns.push_back(std::move(pattern));
  }
  return fam;
}

namespace {

// Precomputed visiting order for one pattern.
struct SearchPlan {
  std::vector<Vertex> order;            // pattern vertices in visiting order
  std::vector<int> anchor;              // position of an earlier mapped neighbor, or -1
  std::vector<int> closes_component;    // component index finished at this position, or -1
  std::vector<char> pattern_adjacent;   // order x order matrix over pattern ids
  std::size_t n = 0;
};

SearchPlan plan_for(const PatternGraph& pattern) {
  SearchPlan plan;
  plan.n = pattern.order();
  plan.pattern_adjacent.assign(plan.n * plan.n, 0);
  for (auto [u, v] : pattern.graph.edges()) {
    plan.pattern_adjacent[u * plan.n + v] = 1;
    plan.pattern_adjacent[v * plan.n + u] = 1;
  }
  std::vector<int> position(plan.n, -1);
  for (std::size_t c = 0; c < pattern.components.size(); ++c) {
    const VertexSet& comp = pattern.components[c];
    std::vector<Vertex> queue{comp.front()};
    position[comp.front()] = static_cast<int>(plan.order.size());
    plan.order.push_back(comp.front());
    plan.anchor.push_back(-1);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : pattern.graph.neighbors(v)) {
        if (position[w] >= 0) continue;
        position[w] = static_cast<int>(plan.order.size());
        plan.order.push_back(w);
        plan.anchor.push_back(position[v]);
        queue.push_back(w);
      }
    }
    plan.closes_component.resize(plan.order.size(), -1);
    plan.closes_component.back() = static_cast<int>(c);
  }
  return plan;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& g, const PatternGraph& pattern, const EmbeddingScope& scope,
                  const std::function<bool(const Embedding&)>& visit)
      : g_(g), pattern_(pattern), scope_(scope), visit_(visit), plan_(plan_for(pattern)) {
    allowed_.assign(g.id_bound(), 0);
    if (scope.allowed == nullptr) {
      all_allowed_ = g.vertices().items();
    } else {
      for (Vertex v : *scope.allowed) {
        if (g.has_vertex(v)) all_allowed_.push_back(v);
      }
    }
    for (Vertex v : all_allowed_) allowed_[v] = 1;
    used_.assign(g.id_bound(), 0);
    image_.assign(plan_.n, -1);
  }

  // Returns false iff the visitor stopped the search.
  bool run() {
    if (plan_.n == 0) return visit_(image_);
    return extend(0);
  }

 private:
  bool feasible(std::size_t pos, Vertex host) const {
    if (!allowed_[host] || used_[host]) return false;
    const Vertex pv = plan_.order[pos];
    if (g_.degree(host) < pattern_.graph.degree(pv)) return false;
    for (std::size_t q = 0; q < pos; ++q) {
      const Vertex qv = plan_.order[q];
      const bool want = plan_.pattern_adjacent[pv * plan_.n + qv] != 0;
      if (g_.adjacent(host, image_[qv]) != want) return false;
    }
    return true;
  }

  bool place(std::size_t pos, Vertex host) {
    const Vertex pv = plan_.order[pos];
    image_[pv] = host;
    used_[host] = 1;
    bool keep_going = true;
    const int closed = plan_.closes_component[pos];
    if (closed < 0 || !scope_.component_filter ||
        scope_.component_filter(static_cast<std::size_t>(closed), image_)) {
      keep_going = pos + 1 == plan_.n ? visit_(image_) : extend(pos + 1);
    }
    used_[host] = 0;
    image_[pv] = -1;
    return keep_going;
  }

  bool extend(std::size_t pos) {
    const int anchor = plan_.anchor[pos];
    if (anchor >= 0) {
      const Vertex anchor_host = image_[plan_.order[anchor]];
      for (Vertex host : g_.neighbors(anchor_host)) {
        if (feasible(pos, host) && !place(pos, host)) return false;
      }
    } else {
      for (Vertex host : all_allowed_) {
        if (feasible(pos, host) && !place(pos, host)) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  const PatternGraph& pattern_;
  const EmbeddingScope& scope_;
  const std::function<bool(const Embedding&)>& visit_;
  SearchPlan plan_;
  std::vector<char> allowed_;
  std::vector<Vertex> all_allowed_;
  std::vector<char> used_;
  Embedding image_;
};

std::vector<char> membership(const Graph& g, const VertexSet& x) {
  std::vector<char> mark(g.id_bound(), 0);
  for (Vertex v : x) {
    if (g.has_vertex(v)) mark[v] = 1;
  }
  return mark;
}

// Partials with no induced copy inside g[s].
std::vector<const PatternGraph*> partials_absent_from(const Graph& g, const VertexSet& s,
                                                      const ForbiddenFamily& fam) {
  std::vector<const PatternGraph*> out;
  for (const auto& partial : fam.partials) {
    if (!contains_induced(g, s, partial)) out.push_back(&partial);
  }
  return out;
}

}  // namespace

bool for_each_embedding(const Graph& g, const PatternGraph& pattern,
                        const EmbeddingScope& scope,
                        const std::function<bool(const Embedding&)>& visit) {
  EmbeddingSearch search(g, pattern, scope, visit);
  return search.run();
}

bool contains_induced(const Graph& g, const VertexSet& scope, const PatternGraph& pattern) {
  if (pattern.order() > scope.size()) return false;
  EmbeddingScope limits{&scope, {}};
  bool found = false;
  for_each_embedding(g, pattern, limits, [&](const Embedding&) {
    found = true;
    return false;
  });
  return found;
}

bool is_family_free(const Graph& g, const VertexSet& scope, const ForbiddenFamily& fam) {
  return std::none_of(fam.patterns.begin(), fam.patterns.end(),
                      [&](const PatternGraph& p) { return contains_induced(g, scope, p); });
}

std::size_t count_present_partials(const Graph& g, const VertexSet& scope,
                                   const ForbiddenFamily& fam) {
  return static_cast<std::size_t>(
      std::count_if(fam.partials.begin(), fam.partials.end(),
                    [&](const PatternGraph& p) { return contains_induced(g, scope, p); }));
}

std::optional<VertexSet> find_step3_enrichment(const Graph& g, const VertexSet& s,
                                               const VertexSet& t,
                                               const ForbiddenFamily& fam) {
  const VertexSet allowed = g.vertices() - t;
  const std::vector<char> in_s = membership(g, s);
  const std::vector<char> near_s = membership(g, s | neighborhood(g, s));

  std::optional<VertexSet> found;
  for (const PatternGraph* partial : partials_absent_from(g, s, fam)) {
    // A component image that misses N[s] would form a component of g[U]
    // not adjacent to s; one that meets N[s] only yields pieces touching s.
    EmbeddingScope limits{&allowed, [&](std::size_t c, const Embedding& image) {
                            for (Vertex pv : partial->components[c]) {
                              if (near_s[image[pv]]) return true;
                            }
                            return false;
                          }};
    for_each_embedding(g, *partial, limits, [&](const Embedding& image) {
      std::vector<Vertex> outside;
      for (Vertex h : image) {
        if (!in_s[h]) outside.push_back(h);
      }
      found = VertexSet::from_unsorted(std::move(outside));
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

EnrichmentSupport connected_enrichment_support(const Graph& g, const VertexSet& s,
                                               const VertexSet& t,
                                               const ForbiddenFamily& fam) {
  const VertexSet allowed = g.vertices() - t;
  const std::vector<char> in_s = membership(g, s);
  std::set<VertexSet> found;

  for (const PatternGraph* partial : partials_absent_from(g, s, fam)) {
    // Distinct component images are non-adjacent, so a connected U can draw
    // on at most one component that leaves s.
    EmbeddingScope limits{&allowed, [&](std::size_t c, const Embedding& image) {
                            std::size_t leaving = 0;
                            for (std::size_t i = 0; i <= c; ++i) {
                              for (Vertex pv : partial->components[i]) {
                                if (!in_s[image[pv]]) {
                                  ++leaving;
                                  break;
                                }
                              }
                            }
                            return leaving <= 1;
                          }};
    for_each_embedding(g, *partial, limits, [&](const Embedding& image) {
      std::vector<Vertex> outside;
      for (Vertex h : image) {
        if (!in_s[h]) outside.push_back(h);
      }
      VertexSet u = VertexSet::from_unsorted(std::move(outside));
      if (!u.empty() && is_connected_set(g, u)) found.insert(std::move(u));
      return true;
    });
  }

  EnrichmentSupport out;
  out.sets.assign(found.begin(), found.end());
  for (const auto& u : out.sets) out.support = out.support | u;
  return out;
}

}  // namespace secluded
