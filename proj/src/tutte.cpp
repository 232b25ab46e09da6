#include "dact/tutte.hpp"

#include <map>

#include "dact/classic.hpp"

namespace dact {

namespace {

// Exponent counts are accumulated first and expanded once.
using Counts = std::map<std::pair<unsigned, unsigned>, mpz_class>;

BivariatePoly from_counts(const Counts& counts) {
  BivariatePoly p;
  for (const auto& [e, n] : counts) p.add_term(e.first, e.second, mpq_class(n));
  return p;
}

}  // namespace

BivariatePoly tutte_definitional(const Graph& g) {
  g.require_connected();
  if (g.edge_count() > 30) throw Error("definitional sum limited to 30 edges");
  Counts counts;
  for_each_subset(g.edges(), [&](EdgeSet s) {
    counts[{static_cast<unsigned>(cc(g, s) - 1), static_cast<unsigned>(cycl(g, s))}] += 1;
  });
  return from_counts(counts).substitute_shift(-1, -1);
}

namespace {

BivariatePoly delcon(const Graph& g) {
  if (g.edges().empty()) return BivariatePoly::constant(1);
  EdgeId e = g.edges().min();
  switch (g.classify(e)) {
    case EdgeKind::Loop: return BivariatePoly::y() * delcon(g.delete_edge(e));
    case EdgeKind::Isthmus: return BivariatePoly::x() * delcon(g.contract_edge(e));
    case EdgeKind::Standard: break;
  }
  return delcon(g.delete_edge(e)) + delcon(g.contract_edge(e));
}

}  // namespace

BivariatePoly tutte_delcon(const Graph& g) {
  g.require_connected();
  return delcon(g);
}

BivariatePoly tutte_activity(const Graph& g, const ActivityFn& activity) {
  Counts counts;
  for (EdgeSet t : spanning_trees(g)) {
    Activity a = activity(t);
    if (!a.internal.subset_of(t) || a.external.intersects(t))
      throw Error("activity of tree " + g.format_edge_set(t) + " is not split into internal and external edges");
    counts[{static_cast<unsigned>(a.internal.size()), static_cast<unsigned>(a.external.size())}] += 1;
  }
  return from_counts(counts);
}

BivariatePoly tutte_delta(const Graph& g, const DecisionOracle& oracle) {
  return tutte_activity(g, [&](EdgeSet t) { return delta_activity(g, oracle, t); });
}

BivariatePoly tutte_forest(const Graph& g, const DecisionOracle& oracle) {
  g.require_connected();
  Counts counts;
  for (EdgeSet f : spanning_forests(g)) {
    History h = run_history(g, oracle, f);
    counts[{static_cast<unsigned>(cc(g, f) - 1), static_cast<unsigned>(h.of_type(EdgeType::L).size())}] += 1;
  }
  // (x-1)^a y^b
  return from_counts(counts).substitute_shift(-1, 0);
}

BivariatePoly tutte_connected(const Graph& g, const DecisionOracle& oracle) {
  g.require_connected();
  Counts counts;
  for_each_subset(g.edges(), [&](EdgeSet k) {
    if (cc(g, k) != 1) return;
    History h = run_history(g, oracle, k);
    counts[{static_cast<unsigned>(h.of_type(EdgeType::I).size()), static_cast<unsigned>(cycl(g, k))}] += 1;
  });
  return from_counts(counts).substitute_shift(0, -1);
}

BivariatePoly tutte_half(const Graph& g, const DecisionOracle& oracle) {
  g.require_connected();
  BivariatePoly p;
  for_each_subset(g.edges(), [&](EdgeSet s) {
    History h = run_history(g, oracle, s);
    auto i = static_cast<unsigned>(h.of_type(EdgeType::I).size());
    auto l = static_cast<unsigned>(h.of_type(EdgeType::L).size());
    mpq_class c(1);
    c /= mpz_class(1) << (i + l);
    p.add_term(i, l, c);
  });
  return p;
}

BivariatePoly tutte_forest_sum(const Graph& g, const ForestActivityFn& active) {
  g.require_connected();
  Counts counts;
  for (EdgeSet f : spanning_forests(g)) {
    EdgeSet a = active(f);
    counts[{static_cast<unsigned>(cc(g, f) - 1), static_cast<unsigned>(a.size())}] += 1;
  }
  return from_counts(counts).substitute_shift(-1, 0);
}

BivariatePoly tutte_dfs(const Graph& g) {
  require_simple(g);
  return tutte_forest_sum(g, [&](EdgeSet f) { return dfs_active(g, f); });
}

BivariatePoly tutte_forest_activity(const Graph& g, const DecisionOracle& oracle) {
  return tutte_forest_sum(g, [&](EdgeSet f) { return forest_active(g, oracle, f); });
}

}  // namespace dact
