#include "secluded/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "secluded/errors.hpp"

namespace secluded::oracle {

using Mask = Exhaustive::Mask;

void require_small(const Graph& g) {
  if (g.order() > kMaxOrder) {
    throw InputError("oracle limited to " + std::to_string(kMaxOrder) + " vertices, got " +
                     std::to_string(g.order()));
  }
}

Exhaustive::Exhaustive(const Graph& g) : ids_(g.vertices().items()) {
  require_small(g);
  adj_.assign(ids_.size(), 0);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (std::size_t j = 0; j < ids_.size(); ++j) {
      if (i != j && g.adjacent(ids_[i], ids_[j])) adj_[i] |= Mask{1} << j;
    }
  }
  full_ = (Mask{1} << ids_.size()) - 1;
}

Mask Exhaustive::to_mask(const VertexSet& x) const {
  Mask m = 0;
  for (Vertex v : x) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) throw InputError("unknown vertex id " + std::to_string(v));
    m |= Mask{1} << (it - ids_.begin());
  }
  return m;
}

VertexSet Exhaustive::to_set(Mask m) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (m >> i & 1) out.push_back(ids_[i]);
  }
  return VertexSet::from_sorted(std::move(out));
}

Mask Exhaustive::neighborhood(Mask x) const {
  Mask n = 0;
  for (Mask rest = x; rest; rest &= rest - 1) n |= adj_[std::countr_zero(rest)];
  return n & ~x;
}

Mask Exhaustive::reach(Mask from, Mask blocked) const {
  Mask seen = from & ~blocked;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask rest = frontier; rest; rest &= rest - 1) next |= adj_[std::countr_zero(rest)];
    next &= ~blocked & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool Exhaustive::connected(Mask x) const {
  if (x == 0) return false;
  return reach(x & -x, ~x) == x;
}

std::vector<Mask> Exhaustive::occurrences(const Graph& pattern) const {
  const std::vector<Vertex> pv = pattern.vertices().items();
  const std::size_t p = pv.size();
  std::vector<Mask> found;
  if (p > ids_.size()) return found;
  std::vector<int> image(p, -1);
  // Plain backtracking over injections; adjacency is only checked once the
  // map is complete.
  auto recurse = [&](auto&& self, std::size_t pos, Mask used) -> void {
    if (pos == p) {
      for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = a + 1; b < p; ++b) {
          bool host = adj_[image[a]] >> image[b] & 1;
          if (host != pattern.adjacent(pv[a], pv[b])) return;
        }
      }
      found.push_back(used);
      return;
    }
    for (std::size_t h = 0; h < ids_.size(); ++h) {
      if (used >> h & 1) continue;
      image[pos] = static_cast<int>(h);
      self(self, pos + 1, used | Mask{1} << h);
    }
  };
  recurse(recurse, 0, 0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

int Exhaustive::min_separator(Mask s, Mask t) const {
  if (s & t) return -1;
  const Mask candidates = full_ & ~s;
  for (int size = 0; size <= std::popcount(candidates); ++size) {
    for (Mask p = candidates;; p = (p - 1) & candidates) {
      if (std::popcount(p) == size && (reach(s, p) & t & ~p) == 0) return size;
      if (p == 0) break;
    }
  }
  return -1;
}

std::vector<Mask> Exhaustive::minimum_separators(Mask s, Mask t) const {
  std::vector<Mask> out;
  const int lambda = min_separator(s, t);
  if (lambda < 0) return out;
  const Mask candidates = full_ & ~s;
  for (Mask p = candidates;; p = (p - 1) & candidates) {
    if (std::popcount(p) == lambda && (reach(s, p) & t & ~p) == 0) out.push_back(p);
    if (p == 0) break;
  }
  return out;
}

std::vector<bool> Exhaustive::family_free_table(const ForbiddenFamily& fam) const {
  std::vector<Mask> occ;
  for (const auto& pattern : fam.patterns) {
    auto o = occurrences(pattern.graph);
    occ.insert(occ.end(), o.begin(), o.end());
  }
  std::vector<bool> free(std::size_t{1} << ids_.size(), true);
  for (Mask m = 0; m <= full_; ++m) {
    for (Mask o : occ) {
      if ((o & m) == o) {
        free[m] = false;
        break;
      }
    }
  }
  return free;
}

std::vector<Mask> Exhaustive::enumerate(Mask s, Mask t, int k,
                                        const std::vector<bool>& free_table) const {
  if (s & t) return {};
  constexpr int kNone = 1 << 20;
  const Mask rest = full_ & ~s & ~t;
  // best[m]: smallest boundary over qualifying sets containing m (sets that
  // are connected, F-free and sit between s and V \ t).
  std::vector<int> best(std::size_t{full_} + 1, kNone);
  std::vector<Mask> qualifying;
  for (Mask extra = rest;; extra = (extra - 1) & rest) {
    const Mask c = s | extra;
    if (free_table[c] && connected(c)) {
      qualifying.push_back(c);
      best[c] = std::popcount(neighborhood(c));
    }
    if (extra == 0) break;
  }
  for (Mask bits = rest; bits; bits &= bits - 1) {
    const Mask b = bits & -bits;
    for (Mask m = 0; m <= full_; ++m) {
      if (!(m & b)) best[m] = std::min(best[m], best[m | b]);
    }
  }
  std::vector<Mask> out;
  for (Mask c : qualifying) {
    const int own = std::popcount(neighborhood(c));
    if (own > k) continue;
    bool maximal = true;
    for (Mask bits = rest & ~c; bits && maximal; bits &= bits - 1) {
      if (best[c | (bits & -bits)] <= own) maximal = false;
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

namespace {

std::vector<VertexSet> sorted_sets(const Exhaustive& ex, const std::vector<Mask>& masks) {
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(ex.to_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool naive_contains_induced(const Graph& g, const VertexSet& scope, const Graph& pattern) {
  const Graph sub = induced_subgraph(g, scope);
  Exhaustive ex(sub);
  return !ex.occurrences(pattern).empty();
}

std::vector<VertexSet> brute_enum(const Graph& g, const VertexSet& s, const VertexSet& t, int k,
                                  const ForbiddenFamily& fam) {
  Exhaustive ex(g);
  const Mask sm = ex.to_mask(s);
  const Mask tm = ex.to_mask(t);
  if (sm == 0 || (sm & tm)) return {};
  return sorted_sets(ex, ex.enumerate(sm, tm, k, ex.family_free_table(fam)));
}

SeparatorCensus brute_min_separators(const Graph& g, const VertexSet& s, const VertexSet& t) {
  Exhaustive ex(g);
  const Mask sm = ex.to_mask(s);
  const Mask tm = ex.to_mask(t);
  SeparatorCensus census;
  const int lambda = ex.min_separator(sm, tm);
  if (lambda < 0) return census;
  census.lambda = lambda;
  census.minimum = sorted_sets(ex, ex.minimum_separators(sm, tm));
  return census;
}

std::optional<WeightedSet> brute_max_weight(const WeightedInstance& inst) {
  validate(inst);
  Exhaustive ex(inst.graph);
  const std::vector<bool> free = ex.family_free_table(inst.family);
  std::optional<WeightedSet> best;
  for (Mask m = 1; m <= ex.full(); ++m) {
    if (free[m] && ex.connected(m) && std::popcount(ex.neighborhood(m)) <= inst.k) {
      WeightedSet cand{ex.to_set(m), 0};
      cand.weight = total_weight(inst, cand.members);
      if (!best || cand.weight > best->weight ||
          (cand.weight == best->weight && cand.members < best->members)) {
        best = std::move(cand);
      }
    }
  }
  return best;
}

std::optional<VertexSet> brute_scattered(const ScatteredInstance& inst) {
  validate(inst);
  Exhaustive ex(inst.graph);
  std::vector<std::vector<bool>> free;
  for (const auto& fam : inst.families) free.push_back(ex.family_free_table(fam));

  auto valid = [&](Mask x) {
    Mask left = ex.full() & ~x;
    while (left) {
      const Mask comp = ex.reach(left & -left, x);
      bool covered = std::any_of(free.begin(), free.end(),
                                 [&](const std::vector<bool>& f) { return f[comp]; });
      if (!covered) return false;
      left &= ~comp;
    }
    return true;
  };

  const std::size_t n = ex.order();
  for (std::size_t size = 0; size <= std::min<std::size_t>(inst.k, n); ++size) {
    // Lexicographic combinations of positions, which are ascending ids.
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      Mask x = 0;
      for (std::size_t i : pick) x |= Mask{1} << i;
      if (valid(x)) return ex.to_set(x);
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace secluded::oracle
