#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "secluded/enumerator.hpp"
#include "secluded/graph.hpp"
#include "secluded/instances.hpp"
#include "secluded/subiso.hpp"

namespace secluded::io {

/// Edge-list format:
///
///   # comment
///   n m
///   u v        (m lines, 0 <= u < v < n)
///
/// Blank lines and lines starting with '#' are ignored anywhere. Errors
/// throw InputError with "<source>:<line>: <reason>".
Graph parse_graph(std::istream& in, const std::string& source = "<input>");
Graph read_graph_file(const std::string& path);
/// Inverse of parse_graph; requires ids 0..n-1.
std::string format_graph(const Graph& g);

/// Named patterns: k2 p3 p4 k3 c4 c5 claw paw diamond k4 2k2.
Graph preset_pattern(std::string_view name);
std::vector<std::string> preset_names();

/// Comma-separated preset names and @file references, or the single token
/// "empty" for the empty family.
ForbiddenFamily parse_family_spec(std::string_view spec);

/// Lines "v w" with w >= 1; vertices without a line weigh 1.
std::map<Vertex, Weight> parse_weights(std::istream& in, const Graph& g,
                                       const std::string& source = "<input>");
std::map<Vertex, Weight> read_weights_file(const std::string& path, const Graph& g);
std::map<Vertex, Weight> unit_weights(const Graph& g);

/// "3,1,2" -> {1,2,3}; "" -> {}.
VertexSet parse_vertex_list(std::string_view text);

/// "C=<ids> N=<ids> |N|=<size>"
std::string format_candidate(const Candidate& c);
/// {"members":[...],"boundary":[...],"boundary_size":n} on one line.
std::string format_candidate_json(const Candidate& c);
Candidate parse_candidate(std::string_view line);
Candidate parse_candidate_json(std::string_view line);

}  // namespace secluded::io
