#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dact/edge_set.hpp"
#include "dact/graph.hpp"

namespace dact {

using HalfEdge = std::uint32_t;
inline constexpr HalfEdge kNoHalfEdge = ~HalfEdge{0};

struct HalfEdgeOrder {
  std::vector<HalfEdge> half_edges;
  std::vector<EdgeId> edges;
};

// Rooted combinatorial map (H, sigma, alpha). Half-edge and edge ids are stable
// under deletion/contraction; removed half-edges are marked dead.
class CombMap {
 public:
  // edge_halves[e] = the two half-edges of edge e, the first one naming it.
  // When empty, edges are numbered by smallest half-edge id.
  CombMap(std::vector<HalfEdge> sigma, std::vector<HalfEdge> alpha, HalfEdge root,
          std::vector<std::string> half_edge_names = {},
          std::vector<std::pair<HalfEdge, HalfEdge>> edge_halves = {});

  std::size_t half_edge_capacity() const { return sigma_.size(); }
  std::size_t edge_capacity() const { return edge_halves_.size(); }
  bool alive(HalfEdge h) const { return h < alive_.size() && alive_[h]; }
  std::vector<HalfEdge> half_edges() const;
  EdgeSet edges() const { return present_; }
  std::size_t edge_count() const { return present_.size(); }

  HalfEdge sigma(HalfEdge h) const;
  HalfEdge sigma_inverse(HalfEdge h) const;
  HalfEdge alpha(HalfEdge h) const;
  HalfEdge root() const { return root_; }
  EdgeId edge_of(HalfEdge h) const;
  std::pair<HalfEdge, HalfEdge> half_edges_of(EdgeId e) const;

  std::string half_edge_name(HalfEdge h) const;
  std::string edge_name(EdgeId e) const { return half_edge_name(edge_halves_.at(e).first); }
  bool has_explicit_names() const { return !names_.empty(); }
  HalfEdge find_half_edge(const std::string& name) const;

  // Vertices are sigma-cycles numbered by their smallest half-edge id.
  std::size_t vertex_count() const;
  VertexId vertex_of(HalfEdge h) const;
  std::vector<std::vector<HalfEdge>> sigma_cycles() const;
  std::size_t face_count() const;
  std::size_t genus() const;

  Graph underlying_graph() const;
  bool is_isthmus(EdgeId e) const;
  bool is_loop(EdgeId e) const;

  CombMap delete_edge(EdgeId e) const;
  CombMap contract_edge(EdgeId e) const;
  // (H, sigma^-1, alpha) rooted at sigma^-1(root)
  CombMap mirror() const;

  // t(h) = sigma(h) for external h, sigma(alpha(h)) for internal h; dead half-edges map to themselves.
  std::vector<HalfEdge> motion_function(EdgeSet tree) const;
  HalfEdgeOrder tour_order(EdgeSet tree) const;

 private:
  CombMap() = default;
  void require_edge(EdgeId e) const;
  void require_tree(EdgeSet t) const;
  void build_vertices();

  std::vector<HalfEdge> sigma_;
  std::vector<HalfEdge> alpha_;
  std::vector<bool> alive_;
  std::vector<std::string> names_;
  std::vector<std::pair<HalfEdge, HalfEdge>> edge_halves_;
  std::vector<EdgeId> edge_of_;
  std::vector<VertexId> vertex_of_;
  std::size_t vertex_count_ = 0;
  EdgeSet present_;
  HalfEdge root_ = kNoHalfEdge;
};

}  // namespace dact
