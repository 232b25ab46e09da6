#pragma once

#include <span>
#include <vector>

#include "dact/activity.hpp"
#include "dact/comb_map.hpp"
#include "dact/decision.hpp"
#include "dact/graph.hpp"

namespace dact {

// Edges minimal (resp. maximal) for `order` in their fundamental cycle/cocycle.
Activity min_rule_active(const Graph& g, std::span<const EdgeId> order, EdgeSet tree);
Activity max_rule_active(const Graph& g, std::span<const EdgeId> order, EdgeSet tree);

// Tutte's activity for the linear order (first = smallest).
Activity ordering_active(const Graph& g, std::span<const EdgeId> order, EdgeSet tree);

// Bernardi's activity: min rule under the tour order of the map.
Activity embedding_active(const CombMap& m, EdgeSet tree);
OrderMapTable embedding_order_map(const CombMap& m);
// Each tree mapped onto its reversed tour order.
OrderMapTable reversed_embedding_order_map(const CombMap& m);

// One run of the pruning walk that computes tau(F).
struct PruningRun {
  EdgeSet tree;
  std::vector<EdgeId> first_visit;
  // Edges that were isthmuses of the current map at their first visit.
  EdgeSet isthmus_at_first_visit;
  // Indexed by vertex of the input map: -1 on departure, +1 on arrival per deletion.
  std::vector<int> charges;
};

PruningRun run_pruning(const CombMap& m, EdgeSet forest);
EdgeSet tau(const CombMap& m, EdgeSet forest);
// Internal e with tau(T \ e) = T.
EdgeSet blossoming_internal_active(const CombMap& m, EdgeSet tree);
EdgeSet blossoming_isthmus_at_first_visit(const CombMap& m, EdgeSet tree);
// Total charge on the component of T \ e avoiding the root vertex.
int subtree_charge(const CombMap& m, EdgeSet tree, EdgeId e);
bool blossoming_charge_check(const CombMap& m, EdgeSet tree, EdgeId e);
OrderMapTable blossoming_order_map(const CombMap& m);
// Edges visited last in their fundamental cycle/cocycle during the pruning walk of T.
Activity blossoming_active(const CombMap& m, EdgeSet tree);

// Greatest-neighbour DFS on the subgraph s; vertices are compared by id.
inline constexpr VertexId kNoVertex = ~VertexId{0};
struct DfsRun {
  EdgeSet forest;
  std::vector<VertexId> visit_order;
  // DFS parent of each vertex; kNoVertex for component roots.
  std::vector<VertexId> parent;
};
DfsRun dfs_run(const Graph& g, EdgeSet s);
EdgeSet dfs_forest(const Graph& g, EdgeSet s);
// External e with F(f + e) = f.
EdgeSet dfs_active(const Graph& g, EdgeSet forest);
// Loop-or-inversion characterisation of the same set.
EdgeSet dfs_active_by_inversion(const Graph& g, EdgeSet forest);
// First-visit order of all edges in the DFS that marks but does not cross external edges.
std::vector<EdgeId> dfs_order_map(const Graph& g, EdgeSet s);
OrderMapTable dfs_order_table(const Graph& g);

void require_simple(const Graph& g);

}  // namespace dact
