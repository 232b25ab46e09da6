#pragma once

#include <functional>

#include "dact/activity.hpp"
#include "dact/decision.hpp"
#include "dact/graph.hpp"
#include "dact/poly.hpp"

namespace dact {

using ActivityFn = std::function<Activity(EdgeSet)>;
using ForestActivityFn = std::function<EdgeSet(EdgeSet)>;

// Sum over all subgraphs of (x-1)^(cc(S)-1) (y-1)^cycl(S).
BivariatePoly tutte_definitional(const Graph& g);
// Deletion/contraction on the smallest edge id.
BivariatePoly tutte_delcon(const Graph& g);
// Sum over spanning trees of x^|internal| y^|external|.
BivariatePoly tutte_activity(const Graph& g, const ActivityFn& activity);
BivariatePoly tutte_delta(const Graph& g, const DecisionOracle& oracle);
// Sum over forests F of (x-1)^(cc(F)-1) y^l(F).
BivariatePoly tutte_forest(const Graph& g, const DecisionOracle& oracle);
// Sum over connected K of x^i(K) (y-1)^cycl(K).
BivariatePoly tutte_connected(const Graph& g, const DecisionOracle& oracle);
// Sum over all S of (x/2)^i(S) (y/2)^l(S).
BivariatePoly tutte_half(const Graph& g, const DecisionOracle& oracle);
// Sum over forests F of (x-1)^(cc(F)-1) y^|active(F)|.
BivariatePoly tutte_forest_sum(const Graph& g, const ForestActivityFn& active);
BivariatePoly tutte_dfs(const Graph& g);
BivariatePoly tutte_forest_activity(const Graph& g, const DecisionOracle& oracle);

}  // namespace dact
