#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "generators.hpp"
#include "secluded/errors.hpp"
#include "secluded/io.hpp"

using namespace secluded;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return io::parse_graph(in, "mem");
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(ParseGraph, CommentsAndBlankLines) {
  const Graph g = parse("# header next\n\n3 2\n0 1\n# mid\n1 2\n\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}}));
}

TEST(ParseGraph, ErrorsNameTheLine) {
  EXPECT_EQ(error_of("3 2\n0 1\n0 1\n"), "mem:3: duplicate edge 0 1");
  EXPECT_EQ(error_of("3 1\n1 1\n"), "mem:2: expected 0 <= u < v < n");
  EXPECT_EQ(error_of("3 1\n2 1\n"), "mem:2: expected 0 <= u < v < n");
  EXPECT_EQ(error_of("3 1\n0 3\n"), "mem:2: expected 0 <= u < v < n");
  EXPECT_EQ(error_of("3 1\n0 x\n"), "mem:2: expected integers, got '0 x'");
  EXPECT_EQ(error_of("3 1\n0 1 2\n"), "mem:2: expected two integers");
  EXPECT_EQ(error_of("3 2\n0 1\n"), "mem:2: header announces 2 edges, found 1");
  EXPECT_EQ(error_of("# nothing\n"), "mem:1: missing header 'n m'");
  EXPECT_EQ(error_of("2 1\n0 1\n0 1\n"), "mem:3: more edge lines than the header's m");
}

TEST(ParseGraph, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 200; ++round) {
    const Graph g = testkit::gnp(round % 15, 0.3, rng);
    EXPECT_EQ(parse(io::format_graph(g)), g);
  }
}

TEST(Presets, AllNamesResolve) {
  for (const auto& name : io::preset_names()) EXPECT_GT(io::preset_pattern(name).order(), 0u);
  EXPECT_THROW(io::preset_pattern("k9"), InputError);
  EXPECT_EQ(io::preset_pattern("claw").degree(0), 3u);
  EXPECT_EQ(io::preset_pattern("diamond").edge_count(), 5u);
  EXPECT_EQ(io::preset_pattern("2k2").edge_count(), 2u);
}

TEST(FamilySpec, ParsesPresetsAndFiles) {
  EXPECT_TRUE(io::parse_family_spec("empty").empty());
  EXPECT_EQ(io::parse_family_spec("k3, claw").patterns.size(), 2u);
  const auto from_file = io::parse_family_spec("@" SECLUDED_TEST_DATA "/k3.txt");
  ASSERT_EQ(from_file.patterns.size(), 1u);
  EXPECT_EQ(from_file.patterns[0].graph.edge_count(), 3u);
  EXPECT_THROW(io::parse_family_spec(""), InputError);
  EXPECT_THROW(io::parse_family_spec("k3,,p3"), InputError);
  EXPECT_THROW(io::parse_family_spec("k3,empty"), InputError);
  EXPECT_THROW(io::parse_family_spec("@/nonexistent/file"), InputError);
}

TEST(Weights, DefaultsAndValidation) {
  const Graph g = testkit::path(3);
  std::istringstream ok("# weights\n1 7\n");
  const auto w = io::parse_weights(ok, g, "w");
  EXPECT_EQ(w, (std::map<Vertex, Weight>{{0, 1}, {1, 7}, {2, 1}}));
  std::istringstream zero("1 0\n");
  EXPECT_THROW(io::parse_weights(zero, g, "w"), InputError);
  std::istringstream unknown("5 1\n");
  EXPECT_THROW(io::parse_weights(unknown, g, "w"), InputError);
  std::istringstream twice("1 2\n1 3\n");
  EXPECT_THROW(io::parse_weights(twice, g, "w"), InputError);
}

TEST(VertexList, Parses) {
  EXPECT_EQ(io::parse_vertex_list("3,1, 2"), (VertexSet{1, 2, 3}));
  EXPECT_EQ(io::parse_vertex_list(""), VertexSet{});
  EXPECT_THROW(io::parse_vertex_list("1,,2"), InputError);
  EXPECT_THROW(io::parse_vertex_list("-1"), InputError);
  EXPECT_THROW(io::parse_vertex_list("a"), InputError);
}

TEST(CandidateFormat, PlainAndJsonCarryTheSameData) {
  const Candidate c{{0, 2, 5}, {1, 3}, 2};
  EXPECT_EQ(io::format_candidate(c), "C=0,2,5 N=1,3 |N|=2");
  EXPECT_EQ(io::parse_candidate(io::format_candidate(c)), c);
  EXPECT_EQ(io::parse_candidate_json(io::format_candidate_json(c)), c);
  const Candidate bare{{4}, {}, 0};
  EXPECT_EQ(io::format_candidate(bare), "C=4 N= |N|=0");
  EXPECT_EQ(io::parse_candidate(io::format_candidate(bare)), bare);
  EXPECT_THROW(io::parse_candidate_json("{\"members\":[1]}"), InputError);
}
