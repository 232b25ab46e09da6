#pragma once

#include <array>
#include <string>
#include <vector>

#include "dact/decision.hpp"
#include "dact/graph.hpp"

namespace dact {

enum class EdgeType : std::uint8_t { Se, L, Si, I };

const char* to_string(EdgeType t);
// Se, L go left; Si, I go right.
Direction direction_of(EdgeType t);

struct HistoryStep {
  EdgeId edge;
  EdgeType type;
  bool operator==(const HistoryStep&) const = default;
};

class History {
 public:
  void push(EdgeId e, EdgeType t);

  const std::vector<HistoryStep>& steps() const { return steps_; }
  std::vector<EdgeId> ordering() const;
  std::vector<Direction> directions() const;
  EdgeSet of_type(EdgeType t) const { return by_type_[static_cast<std::size_t>(t)]; }
  EdgeType type_of(EdgeId e) const;
  // L and I edges.
  EdgeSet active() const { return of_type(EdgeType::L) | of_type(EdgeType::I); }
  EdgeSet internal_types() const { return of_type(EdgeType::Si) | of_type(EdgeType::I); }

  // "<edge_name> <type>" per line, in visit order.
  std::string dump(const Graph& g) const;

  bool operator==(const History& o) const { return steps_ == o.steps_; }

 private:
  std::vector<HistoryStep> steps_;
  std::array<EdgeSet, 4> by_type_{};
};

struct HistoryVariant {
  bool delete_loops = false;
  bool contract_isthmuses = false;
};

History run_history(const Graph& g, const DecisionOracle& oracle, EdgeSet s, HistoryVariant variant = {});

struct Activity {
  EdgeSet internal;
  EdgeSet external;
  EdgeSet all() const { return internal | external; }
  bool operator==(const Activity&) const = default;
};

Activity delta_activity(const Graph& g, const DecisionOracle& oracle, EdgeSet tree);
std::vector<EdgeId> delta_ordering(const Graph& g, const DecisionOracle& oracle, EdgeSet s);
EdgeSet internal_active_no_contract(const Graph& g, const DecisionOracle& oracle, EdgeSet tree);
EdgeSet forest_active(const Graph& g, const DecisionOracle& oracle, EdgeSet s);

}  // namespace dact
