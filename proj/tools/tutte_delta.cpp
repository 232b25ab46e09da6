// tutte-delta: command-line front end for the dact library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "dact/activity.hpp"
#include "dact/classic.hpp"
#include "dact/comb_map.hpp"
#include "dact/conjecture.hpp"
#include "dact/crosscheck.hpp"
#include "dact/decision.hpp"
#include "dact/error.hpp"
#include "dact/graph_io.hpp"
#include "dact/map_io.hpp"
#include "dact/partition.hpp"
#include "dact/tutte.hpp"

using namespace dact;

namespace {

struct Options {
  std::string graph_file;
  std::string map_file;
  std::string tree_file;
  std::string order_map_file;
  std::string order;
  std::string oracle = "linear";
  std::string method = "all";
  std::string activity = "delta";
  std::string subgraph;
  std::string dot_file;
  std::size_t seeds = 0;
  std::uint64_t budget = std::uint64_t{1} << 24;
  bool subgraph_given = false;
};

struct Input {
  Graph graph;
  std::optional<CombMap> map;
};

Input load_input(const Options& o) {
  if (!o.map_file.empty()) {
    CombMap m = read_map_file(o.map_file);
    Graph g = m.underlying_graph();
    if (!o.graph_file.empty()) {
      Graph file = read_graph_file(o.graph_file);
      if (file.edge_count() != g.edge_count()) throw Error("--graph and --map disagree on the edge count");
    }
    return {std::move(g), std::move(m)};
  }
  if (o.graph_file.empty()) throw Error("--graph or --map is required");
  return {read_graph_file(o.graph_file), std::nullopt};
}

std::vector<EdgeId> linear_order(const Graph& g, const std::string& spec) {
  if (spec.empty()) return g.edges().elements();
  EdgeSet listed = g.parse_edge_list(spec);
  std::vector<EdgeId> order;
  std::string name;
  for (char c : spec + ",") {
    if (c == ',') {
      order.push_back(*g.find_edge(name));
      name.clear();
    } else if (c != ' ') {
      name += c;
    }
  }
  if (order.size() != g.edge_count() || listed != g.edges()) throw Error("--order must list every edge once");
  return order;
}

const CombMap& require_map(const Input& in, const std::string& what) {
  if (!in.map) throw Error(what + " needs --map");
  return *in.map;
}

OraclePtr make_oracle(const Options& o, const Input& in, const std::string& spec) {
  const Graph& g = in.graph;
  if (spec == "file") {
    if (!o.tree_file.empty()) return parse_decision_tree(read_text_file(o.tree_file), g);
    if (!o.order_map_file.empty()) return from_order_map(g, parse_order_map(read_text_file(o.order_map_file), g));
    throw Error("--oracle file needs --tree or --order-map");
  }
  if (spec == "linear") return from_linear_order(g, linear_order(g, o.order));
  if (spec == "embedding") return from_order_map(g, embedding_order_map(require_map(in, "embedding oracle")));
  if (spec == "blossoming") return from_order_map(g, blossoming_order_map(require_map(in, "blossoming oracle")));
  if (spec == "dfs") return from_order_map(g, dfs_order_table(g));
  if (spec.rfind("random:", 0) == 0) {
    const std::string seed = spec.substr(7);
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(seed, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (seed.empty() || used != seed.size()) throw Error("bad seed in '" + spec + "'");
    return random_oracle(g, v);
  }
  throw Error("unknown oracle '" + spec + "'");
}

std::vector<EdgeSet> selected_subgraphs(const Options& o, const Graph& g, bool trees_only) {
  if (o.subgraph_given) {
    EdgeSet s = g.parse_edge_list(o.subgraph);
    if (trees_only && !is_spanning_tree(g, s)) throw Error(g.format_edge_set(s) + " is not a spanning tree");
    return {s};
  }
  if (trees_only) return spanning_trees(g);
  std::vector<EdgeSet> all;
  for_each_subset(g.edges(), [&](EdgeSet s) { all.push_back(s); });
  return all;
}

int cmd_tutte(const Options& o) {
  Input in = load_input(o);
  const Graph& g = in.graph;
  std::vector<std::pair<std::string, std::function<BivariatePoly()>>> routes = {
      {"definitional", [&] { return tutte_definitional(g); }},
      {"delcon", [&] { return tutte_delcon(g); }},
      {"delta", [&] { return tutte_delta(g, *make_oracle(o, in, o.oracle)); }},
      {"forest", [&] { return tutte_forest(g, *make_oracle(o, in, o.oracle)); }},
      {"connected", [&] { return tutte_connected(g, *make_oracle(o, in, o.oracle)); }},
      {"half", [&] { return tutte_half(g, *make_oracle(o, in, o.oracle)); }},
      {"forest-activity", [&] { return tutte_forest_activity(g, *make_oracle(o, in, o.oracle)); }},
      {"dfs", [&] { return tutte_dfs(g); }},
  };
  if (o.method == "all") {
    std::ostringstream out;
    for (const auto& [name, f] : routes) {
      if (name == "dfs" && !g.is_simple()) continue;
      out << name << ": " << f().to_string() << "\n";
    }
    std::cout << out.str();
    return 0;
  }
  for (const auto& [name, f] : routes) {
    if (name == o.method) {
      std::cout << f().to_string() << "\n";
      return 0;
    }
  }
  throw Error("unknown method '" + o.method + "'");
}

int cmd_activity(const Options& o) {
  Input in = load_input(o);
  const Graph& g = in.graph;
  std::function<Activity(EdgeSet)> act;
  OraclePtr oracle;
  if (o.activity == "delta") {
    oracle = make_oracle(o, in, o.oracle);
    act = [&](EdgeSet t) { return delta_activity(g, *oracle, t); };
  } else if (o.activity == "ordering") {
    auto order = linear_order(g, o.order);
    act = [&g, order](EdgeSet t) { return ordering_active(g, order, t); };
  } else if (o.activity == "embedding") {
    const CombMap& m = require_map(in, "embedding activity");
    act = [&m](EdgeSet t) { return embedding_active(m, t); };
  } else if (o.activity == "blossoming") {
    const CombMap& m = require_map(in, "blossoming activity");
    act = [&m](EdgeSet t) { return blossoming_active(m, t); };
  } else if (o.activity == "dfs") {
    act = [&g](EdgeSet t) { return Activity{{}, dfs_active(g, t)}; };
  } else {
    throw Error("unknown activity '" + o.activity + "'");
  }
  for (EdgeSet t : selected_subgraphs(o, g, true)) {
    Activity a = act(t);
    std::cout << g.format_edge_set(t) << " internal=" << g.format_edge_set(a.internal)
              << " external=" << g.format_edge_set(a.external) << "\n";
  }
  return 0;
}

std::string names(const Graph& g, const std::vector<EdgeId>& order) {
  std::string s;
  for (EdgeId e : order) s += (s.empty() ? "" : " < ") + g.edge_name(e);
  return s;
}

int cmd_ordering(const Options& o) {
  Input in = load_input(o);
  const Graph& g = in.graph;
  OraclePtr oracle = make_oracle(o, in, o.oracle);
  for (EdgeSet s : selected_subgraphs(o, g, !o.subgraph_given))
    std::cout << g.format_edge_set(s) << " " << names(g, delta_ordering(g, *oracle, s)) << "\n";
  return 0;
}

int cmd_history(const Options& o) {
  Input in = load_input(o);
  const Graph& g = in.graph;
  if (!o.subgraph_given) throw Error("history needs --subgraph");
  OraclePtr oracle = make_oracle(o, in, o.oracle);
  std::cout << run_history(g, *oracle, g.parse_edge_list(o.subgraph)).dump(g);
  return 0;
}

int cmd_partition(const Options& o) {
  Input in = load_input(o);
  const Graph& g = in.graph;
  OraclePtr oracle = make_oracle(o, in, o.oracle);
  TreePartition p = partition(g, *oracle);
  for (const auto& c : p.classes()) {
    auto i = static_cast<unsigned>(c.activity.internal.size());
    auto l = static_cast<unsigned>(c.activity.external.size());
    std::cout << g.format_edge_set(c.tree) << " " << g.format_edge_set(c.interval.lower) << " "
              << g.format_edge_set(c.interval.upper) << " " << c.interval.count() << " "
              << BivariatePoly::monomial(i, l).to_string() << "\n";
  }
  if (!o.dot_file.empty()) {
    std::ofstream out(o.dot_file);
    if (!out) throw Error("cannot write " + o.dot_file);
    out << partition_dot(g, p);
  }
  return 0;
}

int cmd_crosscheck(const Options& o) {
  Input in = load_input(o);
  std::vector<NamedOracle> oracles{{o.oracle, make_oracle(o, in, o.oracle)}};
  for (std::size_t s = 0; s < o.seeds; ++s) {
    std::string spec = "random:" + std::to_string(s);
    oracles.push_back({spec, make_oracle(o, in, spec)});
  }
  CrosscheckReport r = crosscheck(in.graph, oracles);
  std::cout << r.to_string();
  return r.passed() ? 0 : 1;
}

int cmd_conjecture_scan(const Options& o) {
  Input in = load_input(o);
  ScanReport r = conjecture_scan(in.graph, o.budget);
  std::cout << r.to_string(in.graph);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tutte polynomial and decision-tree activities"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph_file, "graph file");
    sub->add_option("--map", o.map_file, "combinatorial map file (its underlying graph is used)");
  };
  auto with_oracle = [&](CLI::App* sub) {
    sub->add_option("--oracle", o.oracle, "file | linear | embedding | blossoming | dfs | random:<seed>");
    sub->add_option("--tree", o.tree_file, "decision tree file for --oracle file");
    sub->add_option("--order-map", o.order_map_file, "order map file for --oracle file");
    sub->add_option("--order", o.order, "edge order for the linear oracle, e.g. a,b,c");
  };
  auto with_subgraph = [&](CLI::App* sub) {
    sub->add_option("--subgraph", o.subgraph, "edge list, e.g. a,d")->each([&](const std::string&) {
      o.subgraph_given = true;
    });
  };

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial");
  common(tutte);
  with_oracle(tutte);
  tutte->add_option("--method", o.method,
                    "all | definitional | delcon | delta | forest | connected | half | forest-activity | dfs");

  auto* activity = app.add_subcommand("activity", "active edges of spanning trees");
  common(activity);
  with_oracle(activity);
  with_subgraph(activity);
  activity->add_option("--activity", o.activity, "delta | ordering | embedding | blossoming | dfs");

  auto* ordering = app.add_subcommand("ordering", "visit order of a subgraph (all spanning trees by default)");
  common(ordering);
  with_oracle(ordering);
  with_subgraph(ordering);

  auto* history = app.add_subcommand("history", "history of a subgraph");
  common(history);
  with_oracle(history);
  with_subgraph(history);

  auto* part = app.add_subcommand("partition", "interval partition of the subgraphs");
  common(part);
  with_oracle(part);
  part->add_option("--dot", o.dot_file, "write the coloured Hasse diagram");

  auto* check = app.add_subcommand("crosscheck", "compare every route and property");
  common(check);
  with_oracle(check);
  check->add_option("--seeds", o.seeds, "also run random:0 .. random:N-1");

  auto* scan = app.add_subcommand("conjecture-scan", "enumerate strongly Tutte-descriptive activities");
  common(scan);
  scan->add_option("--budget", o.budget, "maximum number of candidate activities");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*tutte) return cmd_tutte(o);
    if (*activity) return cmd_activity(o);
    if (*ordering) return cmd_ordering(o);
    if (*history) return cmd_history(o);
    if (*part) return cmd_partition(o);
    if (*check) return cmd_crosscheck(o);
    if (*scan) return cmd_conjecture_scan(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
