#include "dact/activity.hpp"

namespace dact {

const char* to_string(EdgeType t) {
  switch (t) {
    case EdgeType::Se: return "Se";
    case EdgeType::L: return "L";
    case EdgeType::Si: return "Si";
    case EdgeType::I: return "I";
  }
  return "?";
}

Direction direction_of(EdgeType t) {
  return t == EdgeType::Se || t == EdgeType::L ? Direction::Left : Direction::Right;
}

void History::push(EdgeId e, EdgeType t) {
  steps_.push_back({e, t});
  by_type_[static_cast<std::size_t>(t)].insert(e);
}

std::vector<EdgeId> History::ordering() const {
  std::vector<EdgeId> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) out.push_back(s.edge);
  return out;
}

std::vector<Direction> History::directions() const {
  std::vector<Direction> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) out.push_back(direction_of(s.type));
  return out;
}

EdgeType History::type_of(EdgeId e) const {
  for (std::size_t t = 0; t < 4; ++t)
    if (by_type_[t].contains(e)) return static_cast<EdgeType>(t);
  throw Error("edge " + std::to_string(e) + " is not in the history");
}

std::string History::dump(const Graph& g) const {
  std::string out;
  for (const auto& s : steps_) out += g.edge_name(s.edge) + " " + to_string(s.type) + "\n";
  return out;
}

namespace {

void require_activity_input(const Graph& g, const DecisionOracle& oracle, EdgeSet s) {
  g.require_connected();
  g.require_subgraph(s);
  if (oracle.universe() != g.edges()) throw Error("oracle does not range over the graph's edges");
}

void require_tree(const Graph& g, EdgeSet t) {
  if (!is_spanning_tree(g, t)) throw Error("edge set " + g.format_edge_set(t) + " is not a spanning tree");
}

EdgeId next_unvisited(const DecisionOracle& oracle, const std::vector<Direction>& dirs, EdgeSet visited) {
  EdgeId e = oracle.next_edge(dirs);
  if (visited.contains(e) || !oracle.universe().contains(e))
    throw Error("decision oracle returned edge " + std::to_string(e) + " twice on one path");
  return e;
}

}  // namespace

History run_history(const Graph& g, const DecisionOracle& oracle, EdgeSet s, HistoryVariant variant) {
  require_activity_input(g, oracle, s);
  const std::size_t m = g.edge_count();
  History hist;
  Graph h = g;
  std::vector<Direction> dirs;
  EdgeSet visited;
  for (std::size_t k = 0; k < m; ++k) {
    EdgeId e = next_unvisited(oracle, dirs, visited);
    visited.insert(e);
    EdgeKind kind = h.classify(e);
    EdgeType type;
    if (kind == EdgeKind::Standard && !s.contains(e)) {
      h = h.delete_edge(e);
      type = EdgeType::Se;
    } else if (kind == EdgeKind::Loop) {
      if (variant.delete_loops) h = h.delete_edge(e);
      type = EdgeType::L;
    } else if (kind == EdgeKind::Standard) {
      h = h.contract_edge(e);
      type = EdgeType::Si;
    } else {
      if (variant.contract_isthmuses) h = h.contract_edge(e);
      type = EdgeType::I;
    }
    hist.push(e, type);
    dirs.push_back(direction_of(type));
  }
  return hist;
}

Activity delta_activity(const Graph& g, const DecisionOracle& oracle, EdgeSet tree) {
  require_tree(g, tree);
  History hist = run_history(g, oracle, tree);
  return {hist.of_type(EdgeType::I), hist.of_type(EdgeType::L)};
}

std::vector<EdgeId> delta_ordering(const Graph& g, const DecisionOracle& oracle, EdgeSet s) {
  return run_history(g, oracle, s).ordering();
}

EdgeSet internal_active_no_contract(const Graph& g, const DecisionOracle& oracle, EdgeSet tree) {
  require_activity_input(g, oracle, tree);
  require_tree(g, tree);
  EdgeSet act;
  Graph h = g;
  std::vector<Direction> dirs;
  EdgeSet visited;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    EdgeId e = next_unvisited(oracle, dirs, visited);
    visited.insert(e);
    bool isthmus = h.is_isthmus(e);
    if (!tree.contains(e) && !isthmus) {
      h = h.delete_edge(e);
      dirs.push_back(Direction::Left);
    } else {
      dirs.push_back(Direction::Right);
    }
    if (isthmus) act.insert(e);
  }
  return act;
}

EdgeSet forest_active(const Graph& g, const DecisionOracle& oracle, EdgeSet s) {
  require_activity_input(g, oracle, s);
  EdgeSet eps;
  Graph h = g;
  std::vector<Direction> dirs;
  EdgeSet visited;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    EdgeId e = next_unvisited(oracle, dirs, visited);
    visited.insert(e);
    if (h.is_loop(e)) {
      eps.insert(e);
      dirs.push_back(Direction::Left);
    } else if (s.contains(e)) {
      h = h.contract_edge(e);
      dirs.push_back(Direction::Right);
    } else {
      dirs.push_back(Direction::Left);
    }
  }
  return eps;
}

}  // namespace dact
