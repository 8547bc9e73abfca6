#include "secluded/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "secluded/errors.hpp"

namespace secluded::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

[[noreturn]] void fail_at(const std::string& source, std::size_t line, const std::string& why) {
  throw InputError(source + ":" + std::to_string(line) + ": " + why);
}

// Whitespace-separated integers on one line.
std::vector<long long> integers(std::string_view line, const std::string& source,
                                std::size_t line_no) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos == line.size()) break;
    long long value = 0;
    auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{} ||
        (end != line.data() + line.size() && *end != ' ' && *end != '\t' && *end != '\r')) {
      fail_at(source, line_no, "expected integers, got '" + std::string(trim(line)) + "'");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(end - line.data());
  }
  return out;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

}  // namespace

Graph parse_graph(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  long long m = 0;
  long long edges_read = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto values = integers(line, source, line_no);
    if (values.size() != 2) fail_at(source, line_no, "expected two integers");
    if (n < 0) {
      n = values[0];
      m = values[1];
      if (n < 0 || m < 0) fail_at(source, line_no, "header needs non-negative n and m");
      if (n > 50'000'000) fail_at(source, line_no, "vertex count too large");
      g = Graph(static_cast<Vertex>(n));
      continue;
    }
    const long long u = values[0];
    const long long v = values[1];
    if (edges_read == m) fail_at(source, line_no, "more edge lines than the header's m");
    if (u < 0 || v >= n || u >= v) fail_at(source, line_no, "expected 0 <= u < v < n");
    if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      fail_at(source, line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++edges_read;
  }
  if (n < 0) fail_at(source, line_no, "missing header 'n m'");
  if (edges_read != m) {
    fail_at(source, line_no,
            "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges_read));
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_graph(in, path);
}

std::string format_graph(const Graph& g) {
  if (!g.vertices().empty() && g.vertices().back() + 1 != static_cast<Vertex>(g.order())) {
    throw InputError("format_graph needs dense ids 0..n-1");
  }
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph preset_pattern(std::string_view name) {
  using E = std::pair<Vertex, Vertex>;
  auto make = [](Vertex n, std::initializer_list<E> edges) {
    std::vector<E> list(edges);
    return Graph::from_edges(n, list);
  };
  if (name == "k2") return make(2, {{0, 1}});
  if (name == "p3") return make(3, {{0, 1}, {1, 2}});
  if (name == "p4") return make(4, {{0, 1}, {1, 2}, {2, 3}});
  if (name == "k3") return make(3, {{0, 1}, {0, 2}, {1, 2}});
  if (name == "c4") return make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  if (name == "c5") return make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  if (name == "claw") return make(4, {{0, 1}, {0, 2}, {0, 3}});
  if (name == "paw") return make(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  if (name == "diamond") return make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "k4") return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "2k2") return make(4, {{0, 1}, {2, 3}});
  throw InputError("unknown pattern preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  return {"k2", "p3", "p4", "k3", "c4", "c5", "claw", "paw", "diamond", "k4", "2k2"};
}

ForbiddenFamily parse_family_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw InputError("empty family spec; use 'empty' for no forbidden graphs");
  if (spec == "empty") return build_family({});
  std::vector<Graph> patterns;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const auto comma = spec.find(',', pos);
    const auto token = trim(spec.substr(pos, comma == std::string_view::npos ? spec.npos : comma - pos));
    if (token.empty()) throw InputError("empty token in family spec '" + std::string(spec) + "'");
    if (token == "empty") throw InputError("'empty' cannot be combined with other patterns");
    if (token.front() == '@') {
      patterns.push_back(read_graph_file(std::string(token.substr(1))));
    } else {
      patterns.push_back(preset_pattern(token));
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return build_family(patterns);
}

std::map<Vertex, Weight> unit_weights(const Graph& g) {
  std::map<Vertex, Weight> w;
  for (Vertex v : g.vertices()) w[v] = 1;
  return w;
}

std::map<Vertex, Weight> parse_weights(std::istream& in, const Graph& g,
                                       const std::string& source) {
  auto weights = unit_weights(g);
  std::vector<char> seen(g.id_bound(), 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto values = integers(line, source, line_no);
    if (values.size() != 2) fail_at(source, line_no, "expected 'v w'");
    const long long v = values[0];
    const long long w = values[1];
    if (v < 0 || v >= g.id_bound() || !g.has_vertex(static_cast<Vertex>(v))) {
      fail_at(source, line_no, "unknown vertex " + std::to_string(v));
    }
    if (seen[v]) fail_at(source, line_no, "second weight for vertex " + std::to_string(v));
    if (w < 1) fail_at(source, line_no, "weight must be a positive integer");
    seen[v] = 1;
    weights[static_cast<Vertex>(v)] = w;
  }
  return weights;
}

std::map<Vertex, Weight> read_weights_file(const std::string& path, const Graph& g) {
  auto in = open_or_throw(path);
  return parse_weights(in, g, path);
}

VertexSet parse_vertex_list(std::string_view text) {
  text = trim(text);
  std::vector<Vertex> ids;
  if (text.empty()) return {};
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto token = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    Vertex v = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || v < 0) {
      throw InputError("bad vertex id '" + std::string(token) + "' in list '" + std::string(text) + "'");
    }
    ids.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return VertexSet::from_unsorted(std::move(ids));
}

std::string format_candidate(const Candidate& c) {
  return "C=" + to_string(c.members) + " N=" + to_string(c.boundary) +
         " |N|=" + std::to_string(c.boundary_size);
}

std::string format_candidate_json(const Candidate& c) {
  nlohmann::json j;
  j["members"] = c.members.items();
  j["boundary"] = c.boundary.items();
  j["boundary_size"] = c.boundary_size;
  return j.dump();
}

Candidate parse_candidate(std::string_view line) {
  line = trim(line);
  auto field = [&](std::string_view key) -> std::string_view {
    auto at = line.find(key);
    if (at == std::string_view::npos) throw InputError("missing " + std::string(key));
    auto start = at + key.size();
    auto stop = line.find(' ', start);
    return line.substr(start, stop == std::string_view::npos ? line.npos : stop - start);
  };
  Candidate c;
  c.members = parse_vertex_list(field("C="));
  c.boundary = parse_vertex_list(field("N="));
  const auto size_text = field("|N|=");
  std::size_t size = 0;
  auto [end, ec] = std::from_chars(size_text.data(), size_text.data() + size_text.size(), size);
  if (ec != std::errc{} || end != size_text.data() + size_text.size()) {
    throw InputError("bad boundary size in '" + std::string(line) + "'");
  }
  c.boundary_size = size;
  return c;
}

Candidate parse_candidate_json(std::string_view line) {
  try {
    auto j = nlohmann::json::parse(line);
    Candidate c;
    c.members = VertexSet::from_unsorted(j.at("members").get<std::vector<Vertex>>());
    c.boundary = VertexSet::from_unsorted(j.at("boundary").get<std::vector<Vertex>>());
    c.boundary_size = j.at("boundary_size").get<std::size_t>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad candidate json: ") + e.what());
  }
}

}  // namespace secluded::io
