#include "dact/crosscheck.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dact/activity.hpp"
#include "dact/error.hpp"
#include "dact/partition.hpp"
#include "dact/tutte.hpp"

namespace dact {

namespace {

constexpr std::size_t kMaxExhaustiveEdges = 16;
constexpr std::size_t kMaxPairEdges = 10;

std::vector<EdgeSet> all_subgraphs(const Graph& g) {
  std::vector<EdgeSet> out;
  for_each_subset(g.edges(), [&](EdgeSet s) { out.push_back(s); });
  return out;
}

std::string describe(const Graph& g, EdgeSet s) { return "S=" + g.format_edge_set(s); }

}  // namespace

CheckOutcome check_tutte_routes(const Graph& g, const DecisionOracle& oracle, const BivariatePoly& expected) {
  std::vector<std::pair<const char*, std::function<BivariatePoly()>>> routes = {
      {"delta", [&] { return tutte_delta(g, oracle); }},
      {"forest", [&] { return tutte_forest(g, oracle); }},
      {"connected", [&] { return tutte_connected(g, oracle); }},
      {"half", [&] { return tutte_half(g, oracle); }},
      {"forest-activity", [&] { return tutte_forest_activity(g, oracle); }},
  };
  for (const auto& [name, route] : routes) {
    BivariatePoly p = route();
    if (p != expected) return std::string(name) + " gives " + p.to_string() + ", expected " + expected.to_string();
  }
  return std::nullopt;
}

CheckOutcome check_variant_invariance(const Graph& g, const DecisionOracle& oracle) {
  for (EdgeSet s : all_subgraphs(g)) {
    History base = run_history(g, oracle, s);
    for (HistoryVariant v : {HistoryVariant{true, false}, HistoryVariant{false, true}, HistoryVariant{true, true}}) {
      if (run_history(g, oracle, s, v) == base) continue;
      return describe(g, s) + " with delete_loops=" + std::to_string(v.delete_loops) +
             " contract_isthmuses=" + std::to_string(v.contract_isthmuses);
    }
  }
  return std::nullopt;
}

CheckOutcome check_history_recurrence(const Graph& g, const DecisionOracle& oracle) {
  for (EdgeSet s : all_subgraphs(g)) {
    History h = run_history(g, oracle, s);
    auto dirs = h.directions();
    const auto& steps = h.steps();
    for (std::size_t k = 0; k < steps.size(); ++k) {
      if (oracle.next_edge(std::span(dirs).first(k)) != steps[k].edge)
        return describe(g, s) + " step " + std::to_string(k + 1);
      if (direction_of(steps[k].type) != (s.contains(steps[k].edge) ? Direction::Right : Direction::Left) &&
          steps[k].type != EdgeType::L && steps[k].type != EdgeType::I)
        return describe(g, s) + " standard edge " + g.edge_name(steps[k].edge) + " misdirected";
    }
  }
  return std::nullopt;
}

CheckOutcome check_maximality(const Graph& g, const DecisionOracle& oracle) {
  for (EdgeSet t : spanning_trees(g)) {
    auto order = delta_ordering(g, oracle, t);
    std::vector<std::size_t> rank(g.edge_capacity());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    Activity act = delta_activity(g, oracle, t);
    for (EdgeId e : g.edges()) {
      EdgeSet c = t.contains(e) ? fundamental_cocycle(g, t, e) : fundamental_cycle(g, t, e);
      bool maximal = std::all_of(c.begin(), c.end(), [&](EdgeId f) { return rank[f] <= rank[e]; });
      if (maximal != act.all().contains(e))
        return "T=" + g.format_edge_set(t) + " edge " + g.edge_name(e) + (maximal ? " maximal but inactive" : " active but not maximal");
    }
  }
  return std::nullopt;
}

CheckOutcome check_partition(const Graph& g, const DecisionOracle& oracle) {
  std::optional<TreePartition> p;
  try {
    p.emplace(partition(g, oracle));
  } catch (const Error& e) {
    return std::string(e.what());
  }
  for (const auto& c : p->classes()) {
    std::size_t trees = 0;
    for_each_subset(c.interval.upper - c.interval.lower, [&](EdgeSet r) {
      if (is_spanning_tree(g, c.interval.lower | r)) ++trees;
    });
    if (trees != 1) return "class of T=" + g.format_edge_set(c.tree) + " holds " + std::to_string(trees) + " spanning trees";
  }
  auto subs = all_subgraphs(g);
  std::vector<History> hist;
  for (EdgeSet s : subs) hist.push_back(run_history(g, oracle, s));
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (p->class_of(subs[i]) != p->class_of(p->classes()[p->class_of(subs[i])].tree) ||
        !is_spanning_tree(g, hist[i].internal_types()) ||
        hist[i] != run_history(g, oracle, p->classes()[p->class_of(subs[i])].tree))
      return describe(g, subs[i]) + " history differs from its class tree";
  }
  if (g.edge_count() > kMaxPairEdges) return std::nullopt;
  namespace ch = characterization;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < subs.size(); ++j) {
      const History &h1 = hist[i], &h2 = hist[j];
      bool same_class = p->class_of(subs[i]) == p->class_of(subs[j]);
      bool r[5] = {ch::same_history(h1, h2), ch::same_type_partition(h1, h2), ch::same_standard_types(h1, h2),
                   ch::difference_within_active(subs[i], h1, subs[j]), ch::active_toggle_exists(subs[i], h1, subs[j])};
      for (bool b : r)
        if (b != same_class)
          return describe(g, subs[i]) + " vs " + describe(g, subs[j]) + ": characterizations disagree";
    }
  }
  return std::nullopt;
}

CheckOutcome check_representative_tree(const Graph& g, const DecisionOracle& oracle) {
  for (EdgeSet s : all_subgraphs(g)) {
    EdgeSet t = representative_tree(g, oracle, s);
    if (!is_spanning_tree(g, t)) return describe(g, s) + " representative " + g.format_edge_set(t) + " is not a spanning tree";
    if (!equivalent(g, oracle, s, t)) return describe(g, s) + " not equivalent to " + g.format_edge_set(t);
  }
  return std::nullopt;
}

CheckOutcome check_add_remove(const Graph& g, const DecisionOracle& oracle) {
  for (EdgeSet s : all_subgraphs(g)) {
    History h = run_history(g, oracle, s);
    for (EdgeId e : h.active()) {
      EdgeSet with = s.with(e), without = s.without(e);
      bool ok = h.type_of(e) == EdgeType::L
                    ? cc(g, with) == cc(g, without) && cycl(g, with) == cycl(g, without) + 1
                    : cc(g, without) == cc(g, with) + 1 && cycl(g, without) == cycl(g, with);
      if (!ok) return describe(g, s) + " toggling " + g.edge_name(e);
    }
  }
  return std::nullopt;
}

bool CrosscheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string CrosscheckReport::to_string() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) out << ": " << c.counterexample;
    out << "\n";
  }
  return out.str();
}

CrosscheckReport crosscheck(const Graph& g, const std::vector<NamedOracle>& oracles) {
  g.require_connected();
  CrosscheckReport report;
  auto record = [&](std::string name, const std::function<CheckOutcome()>& f) {
    CheckResult r{std::move(name), true, ""};
    try {
      if (auto bad = f()) r = {r.name, false, *bad};
    } catch (const Error& e) {
      r = {r.name, false, std::string("error: ") + e.what()};
    }
    report.checks.push_back(std::move(r));
  };

  BivariatePoly expected = tutte_delcon(g);
  const bool exhaustive = g.edge_count() <= kMaxExhaustiveEdges;
  if (exhaustive) {
    record("tutte definitional", [&]() -> CheckOutcome {
      BivariatePoly p = tutte_definitional(g);
      if (p == expected) return std::nullopt;
      return "gives " + p.to_string() + ", deletion/contraction gives " + expected.to_string();
    });
    if (g.is_simple()) record("tutte dfs", [&]() -> CheckOutcome {
      BivariatePoly p = tutte_dfs(g);
      if (p == expected) return std::nullopt;
      return "gives " + p.to_string() + ", expected " + expected.to_string();
    });
  }
  for (const auto& [name, oracle] : oracles) {
    const DecisionOracle& o = *oracle;
    record(name + ": tutte routes", [&] { return check_tutte_routes(g, o, expected); });
    if (!exhaustive) continue;
    record(name + ": history recurrence", [&] { return check_history_recurrence(g, o); });
    record(name + ": variant invariance", [&] { return check_variant_invariance(g, o); });
    record(name + ": maximality", [&] { return check_maximality(g, o); });
    record(name + ": interval partition", [&] { return check_partition(g, o); });
    record(name + ": representative tree", [&] { return check_representative_tree(g, o); });
    record(name + ": add/remove active edge", [&] { return check_add_remove(g, o); });
  }
  return report;
}

}  // namespace dact
