#include "secluded/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "secluded/enumerator.hpp"
#include "secluded/errors.hpp"

namespace secluded {

void validate(const WeightedInstance& inst) {
  if (inst.k < 0) throw InputError("k must be non-negative");
  for (Vertex v : inst.graph.vertices()) {
    auto it = inst.weights.find(v);
    if (it == inst.weights.end()) throw InputError("vertex " + std::to_string(v) + " has no weight");
    if (it->second < 1) {
      throw InputError("vertex " + std::to_string(v) + " has non-positive weight " +
                       std::to_string(it->second));
    }
  }
}

void validate(const ScatteredInstance& inst) {
  if (inst.k < 0) throw InputError("k must be non-negative");
  if (inst.families.empty()) throw InputError("scattered deletion needs at least one family");
  for (const auto& fam : inst.families) {
    if (fam.empty()) throw InputError("a scattered class must forbid at least one graph");
  }
}

Weight total_weight(const WeightedInstance& inst, const VertexSet& members) {
  Weight sum = 0;
  for (Vertex v : members) {
    if (__builtin_add_overflow(sum, inst.weights.at(v), &sum)) {
      throw InputError("total weight overflows 64 bits");
    }
  }
  return sum;
}

namespace {

bool better(const WeightedSet& a, const std::optional<WeightedSet>& incumbent) {
  if (!incumbent) return true;
  if (a.weight != incumbent->weight) return a.weight > incumbent->weight;
  return a.members < incumbent->members;
}

std::optional<WeightedSet> best_from_roots(const WeightedInstance& inst,
                                           const std::vector<Vertex>& roots) {
  std::optional<WeightedSet> best;
  EnumParams params{inst.graph, {}, {}, inst.k, inst.family};
  for (Vertex v : roots) {
    params.s = VertexSet{v};
    enumerate(params, [&](const Candidate& c) {
      // The stream is a superset; keep only sets that pass every condition.
      if (c.boundary_size > static_cast<std::size_t>(inst.k)) return;
      if (!is_connected_set(inst.graph, c.members)) return;
      if (!is_family_free(inst.graph, c.members, inst.family)) return;
      WeightedSet cand{c.members, total_weight(inst, c.members)};
      if (better(cand, best)) best = std::move(cand);
    });
  }
  return best;
}

}  // namespace

std::optional<WeightedSet> max_weight_secluded(const WeightedInstance& inst, unsigned threads) {
  validate(inst);
  const auto& roots = inst.graph.vertices().items();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(roots.size())));
  if (threads <= 1) return best_from_roots(inst, roots);

  std::vector<std::vector<Vertex>> shares(threads);
  for (std::size_t i = 0; i < roots.size(); ++i) shares[i % threads].push_back(roots[i]);
  std::vector<std::optional<WeightedSet>> partial(threads);
  std::vector<std::exception_ptr> failure(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        try {
          partial[w] = best_from_roots(inst, shares[w]);
        } catch (...) {
          failure[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failure) {
    if (f) std::rethrow_exception(f);
  }
  std::optional<WeightedSet> best;
  for (auto& p : partial) {
    if (p && better(*p, best)) best = std::move(p);
  }
  return best;
}

bool verify_scattered(const Graph& g, const VertexSet& x,
                      const std::vector<ForbiddenFamily>& families) {
  require_vertices(g, x, "verify_scattered");
  const Graph rest = delete_vertices(g, x);
  for (const VertexSet& comp : components(rest)) {
    bool covered = std::any_of(families.begin(), families.end(), [&](const ForbiddenFamily& f) {
      return is_family_free(rest, comp, f);
    });
    if (!covered) return false;
  }
  return true;
}

namespace {

class ScatteredSolver {
 public:
  ScatteredSolver(const ScatteredInstance& inst, ScatteredStats& stats)
      : families_(inst.families), stats_(stats) {}

  std::optional<VertexSet> solve(const Graph& input, int k) {
    ++stats_.nodes;
    if (k < 0) return std::nullopt;

    // Components already inside some class never need a deletion.
    VertexSet settled;
    for (const VertexSet& comp : components(input)) {
      if (in_some_class(input, comp)) settled = settled | comp;
    }
    const Graph g = delete_vertices(input, settled);
    if (g.order() == 0) return VertexSet{};
    if (k == 0) return std::nullopt;

    const Vertex v = g.vertices().front();
    if (auto rest = solve(delete_vertices(g, VertexSet{v}), k - 1)) {
      rest->insert(v);
      return rest;
    }

    for (const ForbiddenFamily& fam : families_) {
      for (int s = 0; s <= k; ++s) {
        std::optional<VertexSet> found;
        std::size_t emitted = 0;
        EnumParams params{g, VertexSet{v}, {}, s, fam};
        ++stats_.enumerate_calls;
        enumerate_until(params, [&](const Candidate& c) {
          ++emitted;
          if (c.boundary_size != static_cast<std::size_t>(s)) return true;
          if (!is_family_free(g, c.members, fam)) return true;
          auto rest = solve(delete_vertices(g, c.members | c.boundary), k - s);
          if (!rest) return true;
          found = *rest | c.boundary;
          return false;
        });
        if (s >= 1 && emitted > 0) {
          stats_.candidate_base = std::max(
              stats_.candidate_base, std::pow(static_cast<double>(emitted), 1.0 / s));
        }
        if (found) return found;
      }
    }
    return std::nullopt;
  }

 private:
  bool in_some_class(const Graph& g, const VertexSet& comp) const {
    return std::any_of(families_.begin(), families_.end(),
                       [&](const ForbiddenFamily& f) { return is_family_free(g, comp, f); });
  }

  const std::vector<ForbiddenFamily>& families_;
  ScatteredStats& stats_;
};

}  // namespace

std::optional<VertexSet> scattered_deletion(const ScatteredInstance& inst, ScatteredStats* stats) {
  validate(inst);
  ScatteredStats local;
  ScatteredSolver solver(inst, stats ? *stats : local);
  return solver.solve(inst.graph, inst.k);
}

}  // namespace secluded
