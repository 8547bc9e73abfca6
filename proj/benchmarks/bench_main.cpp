#include <benchmark/benchmark.h>

#include <random>

#include "generators.hpp"
#include "secluded/enumerator.hpp"
#include "secluded/io.hpp"
#include "secluded/separators.hpp"
#include "secluded/solvers.hpp"
#include "secluded/subiso.hpp"

using namespace secluded;

namespace {

Graph sparse_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return testkit::tree_plus_chords(n, n / 5, rng);
}

void BM_AnalyzeSeparator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const Graph g = testkit::gnp(n, 6.0 / n, rng);
  const VertexSet s{0};
  const VertexSet t{n - 1, n - 2, n - 3};
  for (auto _ : state) benchmark::DoNotOptimize(analyze(g, s, t, 8));
  state.SetComplexityN(n);
}
BENCHMARK(BM_AnalyzeSeparator)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_ContainsInduced(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const Graph g = testkit::gnp(n, 4.0 / n, rng);
  const auto c4 = make_pattern(io::preset_pattern("c4"));
  for (auto _ : state) benchmark::DoNotOptimize(contains_induced(g, g.vertices(), c4));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ContainsInduced)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_EnumerateImportantSeparators(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Graph tree = testkit::binary_tree(7);
  VertexSet leaves;
  for (Vertex v = 127; v < 255; ++v) leaves.insert(v);
  const EnumParams params{tree, {0}, leaves, k, io::parse_family_spec("empty")};
  std::size_t emitted = 0;
  for (auto _ : state) emitted = enumerate(params, [](const Candidate&) {}).emitted;
  state.counters["emitted"] = static_cast<double>(emitted);
}
BENCHMARK(BM_EnumerateImportantSeparators)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_EnumerateTriangleFree(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Graph g = sparse_graph(200, 3);
  const EnumParams params{g, {0}, {}, k, io::parse_family_spec("k3")};
  std::size_t nodes = 0;
  for (auto _ : state) nodes = enumerate(params, [](const Candidate&) {}).nodes;
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_EnumerateTriangleFree)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_MaxWeight(benchmark::State& state) {
  const Graph g = sparse_graph(static_cast<int>(state.range(0)), 4);
  const WeightedInstance inst{g, io::unit_weights(g), 3, io::parse_family_spec("k3")};
  for (auto _ : state) benchmark::DoNotOptimize(max_weight_secluded(inst));
}
BENCHMARK(BM_MaxWeight)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
