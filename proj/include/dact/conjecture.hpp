#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dact/decision.hpp"
#include "dact/graph.hpp"

namespace dact {

// Spanning tree -> its active edges (internal and external together).
using ActivityTable = std::map<EdgeSet, EdgeSet>;

// Intervals [T \ psi(T), T + psi(T)] partition the subgraph lattice.
bool induces_partition(const Graph& g, const ActivityTable& psi);
bool is_tutte_descriptive(const Graph& g, const ActivityTable& psi);
bool is_strongly_tutte_descriptive(const Graph& g, const ActivityTable& psi);
// Edges active in no spanning tree.
EdgeSet never_active_edges(const Graph& g, const ActivityTable& psi);

struct Realisation {
  std::shared_ptr<const ExplicitTree> tree;  // null on failure
  std::string failure;
};

// Builds a decision tree whose Delta-activity is psi by recursing on an edge that is
// never active (root), with psi restricted to G\e on the left and to G/e on the right.
// Fails when some minor has standard edges but no never-active edge.
Realisation realise_activity(const Graph& g, const ActivityTable& psi);

struct ScanReport {
  std::size_t tree_count = 0;
  std::uint64_t candidate_space = 0;
  std::uint64_t nodes_explored = 0;
  std::vector<ActivityTable> strongly_descriptive;
  std::size_t tutte_descriptive = 0;
  std::size_t realised = 0;
  bool has_standard_edge = false;
  // activities violating at least one condition below
  std::size_t failing = 0;
  // human-readable descriptions, one per failed condition
  std::vector<std::string> counterexamples;

  std::string to_string(const Graph& g) const;
};

// Enumerates every activity psi: trees -> subsets of E. Throws when 2^(m * #trees) > budget.
ScanReport conjecture_scan(const Graph& g, std::uint64_t budget);

// Connected multigraphs (loops allowed) with 1..max_edges edges, one per isomorphism class.
std::vector<Graph> connected_multigraphs(std::size_t max_edges);

}  // namespace dact
