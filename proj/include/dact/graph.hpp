#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dact/edge_set.hpp"
#include "dact/error.hpp"

namespace dact {

enum class EdgeKind { Standard, Isthmus, Loop };

const char* to_string(EdgeKind k);

struct Edge {
  VertexId a;
  VertexId b;
  bool is_loop() const { return a == b; }
};

// Multigraph with loops. Edge ids are stable under delete/contract; a minor keeps
// the id space of its parent and marks removed edges absent.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> names = {});

  std::size_t vertex_count() const { return vertex_count_; }
  // Size of the id space (edge ids are 0..capacity-1).
  std::size_t edge_capacity() const { return edges_.size(); }
  EdgeSet edges() const { return present_; }
  std::size_t edge_count() const { return present_.size(); }
  bool has_edge(EdgeId e) const { return present_.contains(e); }
  const Edge& edge(EdgeId e) const;

  std::string edge_name(EdgeId e) const;
  bool has_explicit_names() const { return !names_.empty(); }
  std::optional<EdgeId> find_edge(std::string_view name) const;
  EdgeSet parse_edge_list(std::string_view csv) const;
  std::string format_edge_set(EdgeSet s) const;

  Graph delete_edge(EdgeId e) const;
  // Merges the larger endpoint into the smaller and compacts vertex ids.
  Graph contract_edge(EdgeId e) const;

  EdgeKind classify(EdgeId e) const;
  bool is_loop(EdgeId e) const { return edge(e).is_loop(); }
  bool is_isthmus(EdgeId e) const { return classify(e) == EdgeKind::Isthmus; }

  bool is_connected() const;
  // No two edges share the same endpoint pair (loops included).
  bool is_simple() const;

  void require_edge(EdgeId e) const;
  void require_connected() const;
  void require_subgraph(EdgeSet s) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
  EdgeSet present_;
};

std::string default_edge_name(EdgeId e, std::size_t capacity);

std::size_t cc(const Graph& g, EdgeSet s);
std::size_t cycl(const Graph& g, EdgeSet s);
bool is_forest(const Graph& g, EdgeSet s);
bool is_spanning_tree(const Graph& g, EdgeSet s);

// Sorted by mask.
std::vector<EdgeSet> spanning_trees(const Graph& g);
std::vector<EdgeSet> spanning_forests(const Graph& g);

EdgeSet fundamental_cycle(const Graph& g, EdgeSet tree, EdgeId e);
EdgeSet fundamental_cocycle(const Graph& g, EdgeSet tree, EdgeId e);

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t x, std::size_t y);
  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t components_;
};

}  // namespace detail
}  // namespace dact
