// secluded: command-line front end for the enumeration library.
//
// Exit status is 0 on success (including NONE answers) and 2 on any input
// error. Results go to stdout, diagnostics to stderr.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "secluded/enumerator.hpp"
#include "secluded/errors.hpp"
#include "secluded/io.hpp"
#include "secluded/oracle.hpp"
#include "secluded/solvers.hpp"

namespace {

using namespace secluded;

constexpr int kInputError = 2;

struct EnumOptions {
  std::string graph;
  std::string s;
  std::string t;
  int k = 0;
  std::string family;
  bool maximal_only = false;
  bool json = false;
  bool stats = false;
};

struct WeightOptions {
  std::string graph;
  std::string weights;
  int k = 0;
  std::string family;
  bool json = false;
  unsigned threads = 1;
};

struct ScatterOptions {
  std::string graph;
  int k = 0;
  std::vector<std::string> families;
  bool json = false;
};

struct SepOptions {
  std::string graph;
  std::string s;
  std::string t;
};

void add_enum_flags(CLI::App* cmd, EnumOptions& o, bool production) {
  cmd->add_option("--graph", o.graph, "edge-list file")->required();
  cmd->add_option("--s", o.s, "comma-separated source ids")->required();
  cmd->add_option("--t", o.t, "comma-separated excluded ids");
  cmd->add_option("--k", o.k, "neighborhood budget")->required();
  cmd->add_option("--family", o.family, "forbidden family spec")->required();
  cmd->add_flag("--json", o.json, "one JSON object per line");
  if (production) {
    cmd->add_flag("--maximal-only", o.maximal_only, "apply the exact maximality filter");
    cmd->add_flag("--stats", o.stats, "print recursion statistics to stderr");
  }
}

void add_weight_flags(CLI::App* cmd, WeightOptions& o, bool production) {
  cmd->add_option("--graph", o.graph, "edge-list file")->required();
  cmd->add_option("--weights", o.weights, "lines 'v w'; missing vertices weigh 1");
  cmd->add_option("--k", o.k, "neighborhood budget")->required();
  cmd->add_option("--family", o.family, "forbidden family spec")->required();
  cmd->add_flag("--json", o.json, "JSON output");
  if (production) {
    cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
  }
}

void add_scatter_flags(CLI::App* cmd, ScatterOptions& o) {
  cmd->add_option("--graph", o.graph, "edge-list file")->required();
  cmd->add_option("--k", o.k, "deletion budget")->required();
  cmd->add_option("--family", o.families, "one family spec per class; repeat")->required();
  cmd->add_flag("--json", o.json, "JSON output");
}

EnumParams load_enum(const EnumOptions& o) {
  EnumParams p;
  p.graph = io::read_graph_file(o.graph);
  p.s = io::parse_vertex_list(o.s);
  p.t = io::parse_vertex_list(o.t);
  p.k = o.k;
  p.family = io::parse_family_spec(o.family);
  if (p.s.empty()) throw InputError("--s must name at least one vertex");
  if (p.s.intersects(p.t)) throw InputError("--s and --t must be disjoint");
  if (p.k < 0) throw InputError("--k must be non-negative");
  require_vertices(p.graph, p.s, "--s");
  require_vertices(p.graph, p.t, "--t");
  return p;
}

WeightedInstance load_weighted(const WeightOptions& o) {
  WeightedInstance inst;
  inst.graph = io::read_graph_file(o.graph);
  inst.weights = o.weights.empty() ? io::unit_weights(inst.graph)
                                   : io::read_weights_file(o.weights, inst.graph);
  inst.k = o.k;
  inst.family = io::parse_family_spec(o.family);
  if (inst.k < 0) throw InputError("--k must be non-negative");
  validate(inst);
  return inst;
}

ScatteredInstance load_scattered(const ScatterOptions& o) {
  ScatteredInstance inst;
  inst.graph = io::read_graph_file(o.graph);
  inst.k = o.k;
  for (const auto& spec : o.families) inst.families.push_back(io::parse_family_spec(spec));
  validate(inst);
  return inst;
}

Candidate as_candidate(const Graph& g, const VertexSet& members) {
  Candidate c;
  c.members = members;
  c.boundary = neighborhood(g, members);
  c.boundary_size = c.boundary.size();
  return c;
}

void print_candidate(const Candidate& c, bool json) {
  std::cout << (json ? io::format_candidate_json(c) : io::format_candidate(c)) << '\n';
}

void print_weighted(const std::optional<WeightedSet>& best, bool json) {
  if (json) {
    nlohmann::json j;
    j["found"] = best.has_value();
    if (best) {
      j["weight"] = best->weight;
      j["members"] = best->members.items();
    }
    std::cout << j.dump() << '\n';
    return;
  }
  if (!best) {
    std::cout << "NONE\n";
    return;
  }
  std::cout << "WEIGHT=" << best->weight << '\n' << "C=" << to_string(best->members) << '\n';
}

void print_scattered(const std::optional<VertexSet>& x, bool json) {
  if (json) {
    nlohmann::json j;
    j["found"] = x.has_value();
    if (x) j["x"] = x->items();
    std::cout << j.dump() << '\n';
    return;
  }
  if (x) {
    std::cout << "X=" << to_string(*x) << '\n';
  } else {
    std::cout << "NONE\n";
  }
}

int run_enumerate(const EnumOptions& o) {
  const EnumParams p = load_enum(o);
  RecursionStats stats;
  if (o.maximal_only) {
    std::vector<Candidate> all;
    stats = enumerate(p, [&](const Candidate& c) { all.push_back(c); });
    for (const auto& c : filter_seclusion_maximal(all)) print_candidate(c, o.json);
  } else {
    stats = enumerate(p, [&](const Candidate& c) { print_candidate(c, o.json); });
  }
  std::cout.flush();
  if (o.stats) {
    std::cerr << "nodes=" << stats.nodes << " leaves=" << stats.leaves
              << " max_depth=" << stats.max_depth << " emitted=" << stats.emitted << '\n';
  }
  return 0;
}

void guard_size(const Graph& g) {
  if (g.order() > oracle::kMaxOrder) {
    throw InputError("oracle refuses graphs with more than " +
                     std::to_string(oracle::kMaxOrder) + " vertices (got " +
                     std::to_string(g.order()) + ")");
  }
}

int run_oracle_enum(const EnumOptions& o) {
  const EnumParams p = load_enum(o);
  guard_size(p.graph);
  for (const auto& members : oracle::brute_enum(p.graph, p.s, p.t, p.k, p.family)) {
    print_candidate(as_candidate(p.graph, members), o.json);
  }
  return 0;
}

int run_oracle_seps(const SepOptions& o) {
  const Graph g = io::read_graph_file(o.graph);
  guard_size(g);
  const VertexSet s = io::parse_vertex_list(o.s);
  const VertexSet t = io::parse_vertex_list(o.t);
  require_vertices(g, s, "--s");
  require_vertices(g, t, "--t");
  if (s.empty()) throw InputError("--s must name at least one vertex");
  const auto census = oracle::brute_min_separators(g, s, t);
  if (!census.lambda) {
    std::cout << "LAMBDA=INFINITE\n";
    return 0;
  }
  std::cout << "LAMBDA=" << *census.lambda << '\n';
  for (const auto& p : census.minimum) std::cout << "P=" << to_string(p) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate seclusion-maximal connected F-free k-secluded subgraphs"};
  app.require_subcommand(1);

  EnumOptions enum_opts;
  auto* enum_cmd = app.add_subcommand("enumerate", "stream candidate sets");
  add_enum_flags(enum_cmd, enum_opts, true);

  WeightOptions weight_opts;
  auto* weight_cmd = app.add_subcommand("max-weight", "heaviest connected k-secluded F-free set");
  add_weight_flags(weight_cmd, weight_opts, true);

  ScatterOptions scatter_opts;
  auto* scatter_cmd = app.add_subcommand("scattered", "deletion to a scattered class");
  add_scatter_flags(scatter_cmd, scatter_opts);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference answers (n <= 20)");
  oracle_cmd->require_subcommand(1);
  EnumOptions oracle_enum_opts;
  auto* oracle_enum = oracle_cmd->add_subcommand("enum", "exact seclusion-maximal sets");
  add_enum_flags(oracle_enum, oracle_enum_opts, false);
  SepOptions sep_opts;
  auto* oracle_seps = oracle_cmd->add_subcommand("seps", "all minimum left-restricted separators");
  oracle_seps->add_option("--graph", sep_opts.graph, "edge-list file")->required();
  oracle_seps->add_option("--s", sep_opts.s, "source ids")->required();
  oracle_seps->add_option("--t", sep_opts.t, "target ids");
  WeightOptions oracle_weight_opts;
  auto* oracle_weight = oracle_cmd->add_subcommand("max-weight", "exhaustive maximum weight");
  add_weight_flags(oracle_weight, oracle_weight_opts, false);
  ScatterOptions oracle_scatter_opts;
  auto* oracle_scatter = oracle_cmd->add_subcommand("scattered", "smallest deletion set");
  add_scatter_flags(oracle_scatter, oracle_scatter_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*enum_cmd) return run_enumerate(enum_opts);
    if (*weight_cmd) {
      print_weighted(max_weight_secluded(load_weighted(weight_opts), weight_opts.threads),
                     weight_opts.json);
      return 0;
    }
    if (*scatter_cmd) {
      print_scattered(scattered_deletion(load_scattered(scatter_opts)), scatter_opts.json);
      return 0;
    }
    if (*oracle_enum) return run_oracle_enum(oracle_enum_opts);
    if (*oracle_seps) return run_oracle_seps(sep_opts);
    if (*oracle_weight) {
      const auto inst = load_weighted(oracle_weight_opts);
      guard_size(inst.graph);
      print_weighted(oracle::brute_max_weight(inst), oracle_weight_opts.json);
      return 0;
    }
    if (*oracle_scatter) {
      const auto inst = load_scattered(oracle_scatter_opts);
      guard_size(inst.graph);
      print_scattered(oracle::brute_scattered(inst), oracle_scatter_opts.json);
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
