#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dact/graph.hpp"

namespace dact {

enum class Direction : std::uint8_t { Left, Right };

char to_char(Direction d);

// Lazy decision function: maps a direction prefix (d1..dk) to the edge visited at depth k.
// Implementations must be pure in next_edge and safe for concurrent calls.
class DecisionOracle {
 public:
  virtual ~DecisionOracle() = default;
  virtual EdgeId next_edge(std::span<const Direction> prefix) const = 0;
  // Edge ids the oracle ranges over.
  virtual EdgeSet universe() const = 0;
};

using OraclePtr = std::shared_ptr<const DecisionOracle>;

// Perfect binary tree of depth m stored as nodes; leaves have no children.
class ExplicitTree final : public DecisionOracle {
 public:
  struct Node {
    EdgeId label;
    std::int32_t left = -1;
    std::int32_t right = -1;
  };

  // Full path validation when m <= 16; otherwise checked per queried path.
  ExplicitTree(std::vector<Node> nodes, EdgeSet universe);

  EdgeId next_edge(std::span<const Direction> prefix) const override;
  EdgeSet universe() const override { return universe_; }
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  void validate_all() const;
  std::vector<Node> nodes_;
  EdgeSet universe_;
  bool checked_;
};

inline constexpr std::size_t kMaxExplicitDepth = 16;

// "(c (b (a (d)(d)) ...) ...)": label, then left and right subtrees.
std::shared_ptr<const ExplicitTree> parse_decision_tree(std::string_view text, const Graph& g);
std::string format_decision_tree(const ExplicitTree& t, const Graph& g);
// Explicit copy of any oracle (m <= 16).
std::shared_ptr<const ExplicitTree> materialize(const DecisionOracle& o);

// Returns order[m-1-k] at depth k: the (Delta,T)-ordering is the reverse of `order`.
OraclePtr from_linear_order(const Graph& g, std::vector<EdgeId> order);

// Spanning tree -> permutation of the edges.
using OrderMapTable = std::map<EdgeSet, std::vector<EdgeId>>;

// One line per tree: "{a,b} c b a d", the tree then its edges from first to last.
OrderMapTable parse_order_map(std::string_view text, const Graph& g);
std::string format_order_map(const OrderMapTable& table, const Graph& g);

struct CompatibilityWitness {
  EdgeSet tree;
  EdgeSet other;
  std::size_t k;
};

std::optional<CompatibilityWitness> check_tree_compatible(const Graph& g, const OrderMapTable& table);

// Lazy oracle realising a tree-compatible order map. Dead branches return the smallest unused id.
OraclePtr from_order_map(const Graph& g, OrderMapTable table);

// Uniformly random unused edge per node, derived from (seed, prefix).
OraclePtr random_oracle(const Graph& g, std::uint64_t seed);

// Walks every direction sequence and checks that each path is a permutation (m <= 20).
bool is_decision_function(const DecisionOracle& o);

}  // namespace dact
