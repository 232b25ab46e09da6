#pragma once

#include <string>
#include <vector>

#include "dact/activity.hpp"
#include "dact/decision.hpp"
#include "dact/graph.hpp"

namespace dact {

// S ~ S' iff they share the same history.
bool equivalent(const Graph& g, const DecisionOracle& oracle, EdgeSet s1, EdgeSet s2);

// The equivalent conditions for S ~ S', evaluated on the histories of S and S'.
namespace characterization {
bool same_history(const History& h1, const History& h2);
bool same_type_partition(const History& h1, const History& h2);
bool same_standard_types(const History& h1, const History& h2);
bool difference_within_active(EdgeSet s1, const History& h1, EdgeSet s2);
bool active_toggle_exists(EdgeSet s1, const History& h1, EdgeSet s2);
}  // namespace characterization

struct TreeClass {
  EdgeSet tree;
  SubgraphInterval interval;
  Activity activity;
};

inline constexpr std::size_t kMaxPartitionEdges = 20;

// 2^E split into [T \ I(T), T + E(T)], classes sorted by tree.
class TreePartition {
 public:
  TreePartition(const Graph& g, std::vector<TreeClass> classes);

  const std::vector<TreeClass>& classes() const { return classes_; }
  std::size_t class_of(EdgeSet s) const;

 private:
  std::size_t index(EdgeSet s) const;
  std::vector<EdgeId> edges_;
  std::vector<TreeClass> classes_;
  std::vector<std::uint32_t> table_;
};

TreePartition partition(const Graph& g, const DecisionOracle& oracle);
// Si and I edges of the history of s.
EdgeSet representative_tree(const Graph& g, const DecisionOracle& oracle, EdgeSet s);

struct ForestClass {
  EdgeSet forest;
  SubgraphInterval interval;
};

struct ForestPartitions {
  // [F, F + L(F)] with L the type-L edges of F
  std::vector<ForestClass> by_loop_type;
  // [F, F + eps(F)] with eps the forest-active edges
  std::vector<ForestClass> by_forest_activity;
};

ForestPartitions forest_partition(const Graph& g, const DecisionOracle& oracle);

// Intervals are pairwise disjoint and cover all subgraphs of g.
bool is_disjoint_cover(const Graph& g, const std::vector<SubgraphInterval>& intervals);

// Hasse diagram of the subgraph lattice, nodes coloured by class.
std::string partition_dot(const Graph& g, const TreePartition& p);

}  // namespace dact
