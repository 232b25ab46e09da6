#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dact/decision.hpp"
#include "dact/graph.hpp"
#include "dact/poly.hpp"

namespace dact {

// Each check returns the first counterexample found, or nullopt.
using CheckOutcome = std::optional<std::string>;

// Every Tutte route driven by `oracle` equals `expected`.
CheckOutcome check_tutte_routes(const Graph& g, const DecisionOracle& oracle, const BivariatePoly& expected);
// Deleting loops / contracting isthmuses in the history leaves every type unchanged.
CheckOutcome check_variant_invariance(const Graph& g, const DecisionOracle& oracle);
// e_{k+1} is the oracle's answer on the directions of the first k steps.
CheckOutcome check_history_recurrence(const Graph& g, const DecisionOracle& oracle);
// Active edges of a tree are the maximal ones of their fundamental cycle/cocycle.
CheckOutcome check_maximality(const Graph& g, const DecisionOracle& oracle);
// Intervals cover 2^E disjointly, one spanning tree per class, equivalence tests agree.
CheckOutcome check_partition(const Graph& g, const DecisionOracle& oracle);
// Si and I edges of any subgraph form a spanning tree with the same history.
CheckOutcome check_representative_tree(const Graph& g, const DecisionOracle& oracle);
// Toggling an active edge changes (cc, cycl) by (0, +1) for L and (+1, 0) for I removal.
CheckOutcome check_add_remove(const Graph& g, const DecisionOracle& oracle);

struct NamedOracle {
  std::string name;
  OraclePtr oracle;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string counterexample;
};

struct CrosscheckReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  // "PASS <name>" or "FAIL <name>: <counterexample>" per line
  std::string to_string() const;
};

// Runs every check for every oracle. Exhaustive checks are skipped above 16 edges.
CrosscheckReport crosscheck(const Graph& g, const std::vector<NamedOracle>& oracles);

}  // namespace dact
