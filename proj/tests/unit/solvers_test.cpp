#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "secluded/errors.hpp"
#include "secluded/io.hpp"
#include "secluded/oracle.hpp"
#include "secluded/solvers.hpp"

using namespace secluded;
using testkit::family;

namespace {

Graph preset(const std::string& name) { return family(name).patterns.front().graph; }

Graph c5_with_universal() {
  Graph g = testkit::cycle(5);
  g.add_vertex(5);
  for (Vertex v = 0; v < 5; ++v) g.add_edge(v, 5);
  return g;
}

WeightedInstance unit_instance(Graph g, int k, const std::string& spec) {
  WeightedInstance inst{std::move(g), {}, k, family(spec)};
  inst.weights = io::unit_weights(inst.graph);
  return inst;
}

}  // namespace

TEST(MaxWeight, ClawUnitWeights) {
  const auto best = max_weight_secluded(unit_instance(preset("claw"), 1, "claw"));
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(best->weight, 3);
  EXPECT_EQ(best->members, (VertexSet{0, 1, 2}));
}

TEST(MaxWeight, CycleWithHeavyUniversalVertex) {
  auto inst = unit_instance(c5_with_universal(), 6, "k3");
  inst.weights[5] = 5;
  const auto best = max_weight_secluded(inst);
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(best->weight, 7);
  EXPECT_EQ(best->weight, oracle::brute_max_weight(inst)->weight);
  EXPECT_TRUE(best->members.contains(5));
}

TEST(MaxWeight, SingleVertex) {
  auto inst = unit_instance(Graph(1), 0, "k3");
  inst.weights[0] = 9;
  const auto best = max_weight_secluded(inst);
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(best->members, (VertexSet{0}));
  EXPECT_EQ(best->weight, 9);
}

TEST(MaxWeight, NoneWhenEverythingIsExposed) {
  EXPECT_FALSE(max_weight_secluded(unit_instance(testkit::complete(3), 0, "k3")).has_value());
}

TEST(MaxWeight, RejectsMissingOrNonPositiveWeights) {
  auto inst = unit_instance(testkit::path(3), 1, "k3");
  inst.weights[1] = 0;
  EXPECT_THROW(max_weight_secluded(inst), InputError);
  inst.weights.erase(1);
  EXPECT_THROW(max_weight_secluded(inst), InputError);
}

TEST(MaxWeight, OverflowIsAnInputError) {
  auto inst = unit_instance(testkit::path(2), 0, "empty");
  inst.weights[0] = inst.weights[1] = std::numeric_limits<Weight>::max() / 2 + 1;
  EXPECT_THROW(max_weight_secluded(inst), InputError);
}

TEST(MaxWeight, ThreadsDoNotChangeTheAnswer) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<Weight> weight(1, 10);
  for (int round = 0; round < 40; ++round) {
    auto inst = unit_instance(testkit::gnp(6 + round % 5, 0.4, rng), round % 3, round % 2 ? "k3" : "p3");
    for (auto& [v, w] : inst.weights) w = weight(rng);
    EXPECT_EQ(max_weight_secluded(inst, 1), max_weight_secluded(inst, 3));
  }
}

TEST(MaxWeightProperties, OptimalAgainstOracle) {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<Weight> weight(1, 10);
  const std::vector<std::string> specs = {"empty", "k3", "p3", "claw", "2k2"};
  for (int round = 0; round < 200; ++round) {
    auto inst = unit_instance(testkit::gnp(2 + round % 8, 0.4, rng), round % 4, specs[round % specs.size()]);
    for (auto& [v, w] : inst.weights) w = weight(rng);
    const auto got = max_weight_secluded(inst);
    const auto want = oracle::brute_max_weight(inst);
    ASSERT_EQ(got.has_value(), want.has_value());
    if (!got) continue;
    EXPECT_EQ(got->weight, want->weight) << "round " << round;
    EXPECT_EQ(got->weight, total_weight(inst, got->members));
    EXPECT_TRUE(is_connected_set(inst.graph, got->members));
    EXPECT_TRUE(is_family_free(inst.graph, got->members, inst.family));
    EXPECT_LE(neighborhood(inst.graph, got->members).size(), static_cast<std::size_t>(inst.k));
  }
}

TEST(Scattered, EachComponentInAnotherClass) {
  const Graph g = testkit::disjoint_union(testkit::complete(3), preset("claw"));
  const auto x = scattered_deletion({g, 0, {family("k3"), family("claw")}});
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(x->empty());
}

TEST(Scattered, TriangleNeedsOneDeletion) {
  const Graph k3 = testkit::complete(3);
  const auto x = scattered_deletion({k3, 1, {family("k3")}});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(x->size(), 1u);
  EXPECT_TRUE(verify_scattered(k3, *x, {family("k3")}));
  EXPECT_FALSE(scattered_deletion({k3, 0, {family("k3")}}).has_value());
}

TEST(Scattered, RejectsBadInstances) {
  const Graph k3 = testkit::complete(3);
  EXPECT_THROW(scattered_deletion({k3, 1, {}}), InputError);
  EXPECT_THROW(scattered_deletion({k3, 1, {family("empty")}}), InputError);
  EXPECT_THROW(scattered_deletion({k3, -1, {family("k3")}}), InputError);
}

TEST(VerifyScattered, Examples) {
  const Graph k3 = testkit::complete(3);
  EXPECT_TRUE(verify_scattered(k3, {0}, {family("k3")}));
  EXPECT_FALSE(verify_scattered(k3, {}, {family("k3")}));
  EXPECT_TRUE(verify_scattered(Graph{}, {}, {family("k3")}));
}

TEST(ScatteredProperties, SucceedsExactlyWhenOracleDoes) {
  std::mt19937_64 rng(53);
  const std::vector<std::vector<std::string>> pairs = {{"k3", "claw"}, {"p4", "2k2"}};
  for (int round = 0; round < 120; ++round) {
    const Graph g = testkit::gnp(3 + round % 6, 0.4, rng);
    std::vector<ForbiddenFamily> fams;
    for (const auto& spec : pairs[round % 2]) fams.push_back(family(spec));
    for (int k = 0; k <= 3; ++k) {
      ScatteredStats stats;
      const auto got = scattered_deletion({g, k, fams}, &stats);
      const auto want = oracle::brute_scattered({g, k, fams});
      ASSERT_EQ(got.has_value(), want.has_value()) << "round " << round << " k " << k;
      if (got) {
        EXPECT_LE(got->size(), static_cast<std::size_t>(k));
        EXPECT_TRUE(verify_scattered(g, *got, fams));
      }
    }
  }
}

TEST(ScatteredProperties, BranchingNodesStayUnderTheRecurrence) {
  std::mt19937_64 rng(54);
  const std::vector<ForbiddenFamily> fams = {family("k3"), family("claw")};
  for (int round = 0; round < 60; ++round) {
    const Graph g = testkit::gnp(6 + round % 4, 0.45, rng);
    const int k = 1 + round % 4;
    ScatteredStats stats;
    scattered_deletion({g, k, fams}, &stats);
    const double c = stats.candidate_base;
    EXPECT_LE(static_cast<double>(stats.nodes), k * std::pow((fams.size() + 1) * 2 * c, k) + 1)
        << "round " << round;
  }
}
