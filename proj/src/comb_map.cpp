#include "dact/comb_map.hpp"

#include <algorithm>
#include <set>

namespace dact {

CombMap::CombMap(std::vector<HalfEdge> sigma, std::vector<HalfEdge> alpha, HalfEdge root,
                 std::vector<std::string> half_edge_names,
                 std::vector<std::pair<HalfEdge, HalfEdge>> edge_halves)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)), names_(std::move(half_edge_names)),
      edge_halves_(std::move(edge_halves)), root_(root) {
  const std::size_t n = sigma_.size();
  if (n == 0) throw Error("map needs at least one edge");
  if (alpha_.size() != n) throw Error("sigma and alpha sizes differ");
  if (n % 2 != 0) throw Error("odd number of half-edges");
  if (n / 2 > kMaxEdges) throw Error("at most 64 edges are supported");
  std::vector<bool> hit(n, false);
  for (HalfEdge h : sigma_) {
    if (h >= n || hit[h]) throw Error("sigma is not a permutation");
    hit[h] = true;
  }
  for (HalfEdge h = 0; h < n; ++h) {
    if (alpha_[h] >= n || alpha_[h] == h || alpha_[alpha_[h]] != h)
      throw Error("alpha is not a fixed-point-free involution");
  }
  if (root_ >= n) throw Error("root out of range");
  if (!names_.empty()) {
    if (names_.size() != n) throw Error("half-edge name count mismatch");
    if (std::set<std::string>(names_.begin(), names_.end()).size() != n) throw Error("duplicate half-edge name");
  }
  if (edge_halves_.empty()) {
    for (HalfEdge h = 0; h < n; ++h)
      if (h < alpha_[h]) edge_halves_.emplace_back(h, alpha_[h]);
  }
  if (edge_halves_.size() != n / 2) throw Error("edge list does not match alpha");
  edge_of_.assign(n, 0);
  std::vector<bool> covered(n, false);
  for (EdgeId e = 0; e < edge_halves_.size(); ++e) {
    auto [a, b] = edge_halves_[e];
    if (a >= n || b >= n || alpha_[a] != b || covered[a]) throw Error("edge list does not match alpha");
    covered[a] = covered[b] = true;
    edge_of_[a] = edge_of_[b] = e;
  }
  alive_.assign(n, true);
  present_ = EdgeSet::first(n / 2);
  build_vertices();
  // transitivity: vertices joined by edges form one component
  detail::UnionFind uf(vertex_count_);
  for (auto [a, b] : edge_halves_) uf.unite(vertex_of_[a], vertex_of_[b]);
  if (uf.components() != 1) throw Error("map is not connected");
}

void CombMap::build_vertices() {
  vertex_of_.assign(sigma_.size(), 0);
  std::vector<bool> seen(sigma_.size(), false);
  VertexId next = 0;
  for (HalfEdge h = 0; h < sigma_.size(); ++h) {
    if (!alive_[h] || seen[h]) continue;
    for (HalfEdge k = h; !seen[k]; k = sigma_[k]) {
      seen[k] = true;
      vertex_of_[k] = next;
    }
    ++next;
  }
  // an empty map still has its single vertex
  vertex_count_ = std::max<std::size_t>(next, 1);
}

std::vector<HalfEdge> CombMap::half_edges() const {
  std::vector<HalfEdge> out;
  for (HalfEdge h = 0; h < alive_.size(); ++h)
    if (alive_[h]) out.push_back(h);
  return out;
}

HalfEdge CombMap::sigma(HalfEdge h) const {
  if (!alive(h)) throw Error("unknown half-edge " + std::to_string(h));
  return sigma_[h];
}

HalfEdge CombMap::sigma_inverse(HalfEdge h) const {
  if (!alive(h)) throw Error("unknown half-edge " + std::to_string(h));
  HalfEdge k = h;
  while (sigma_[k] != h) k = sigma_[k];
  return k;
}

HalfEdge CombMap::alpha(HalfEdge h) const {
  if (!alive(h)) throw Error("unknown half-edge " + std::to_string(h));
  return alpha_[h];
}

EdgeId CombMap::edge_of(HalfEdge h) const {
  if (!alive(h)) throw Error("unknown half-edge " + std::to_string(h));
  return edge_of_[h];
}

std::pair<HalfEdge, HalfEdge> CombMap::half_edges_of(EdgeId e) const {
  require_edge(e);
  return edge_halves_[e];
}

void CombMap::require_edge(EdgeId e) const {
  if (!present_.contains(e)) throw Error("unknown edge id " + std::to_string(e));
}

std::string CombMap::half_edge_name(HalfEdge h) const {
  if (h >= sigma_.size()) throw Error("unknown half-edge " + std::to_string(h));
  if (!names_.empty()) return names_[h];
  EdgeId e = edge_of_[h];
  std::string base = default_edge_name(e, edge_halves_.size());
  return edge_halves_[e].first == h ? base : base + "'";
}

HalfEdge CombMap::find_half_edge(const std::string& name) const {
  for (HalfEdge h = 0; h < sigma_.size(); ++h)
    if (half_edge_name(h) == name) return h;
  throw Error("unknown half-edge '" + name + "'");
}

std::size_t CombMap::vertex_count() const { return vertex_count_; }

VertexId CombMap::vertex_of(HalfEdge h) const {
  if (!alive(h)) throw Error("unknown half-edge " + std::to_string(h));
  return vertex_of_[h];
}

std::vector<std::vector<HalfEdge>> CombMap::sigma_cycles() const {
  std::vector<std::vector<HalfEdge>> out;
  std::vector<bool> seen(sigma_.size(), false);
  for (HalfEdge h = 0; h < sigma_.size(); ++h) {
    if (!alive_[h] || seen[h]) continue;
    out.emplace_back();
    for (HalfEdge k = h; !seen[k]; k = sigma_[k]) {
      seen[k] = true;
      out.back().push_back(k);
    }
  }
  return out;
}

std::size_t CombMap::face_count() const {
  std::vector<bool> seen(sigma_.size(), false);
  std::size_t faces = 0;
  for (HalfEdge h = 0; h < sigma_.size(); ++h) {
    if (!alive_[h] || seen[h]) continue;
    ++faces;
    for (HalfEdge k = h; !seen[k]; k = sigma_[alpha_[k]]) seen[k] = true;
  }
  return std::max<std::size_t>(faces, 1);
}

std::size_t CombMap::genus() const {
  // V - E + F = 2 - 2g
  long euler = static_cast<long>(vertex_count()) - static_cast<long>(edge_count()) +
               static_cast<long>(face_count());
  return static_cast<std::size_t>((2 - euler) / 2);
}

Graph CombMap::underlying_graph() const {
  std::vector<Edge> edges(edge_halves_.size(), Edge{0, 0});
  std::vector<std::string> names;
  for (EdgeId e = 0; e < edge_halves_.size(); ++e) {
    names.push_back(edge_name(e));
    if (present_.contains(e)) edges[e] = {vertex_of_[edge_halves_[e].first], vertex_of_[edge_halves_[e].second]};
  }
  Graph g(vertex_count_, std::move(edges), std::move(names));
  for (EdgeId e = 0; e < edge_halves_.size(); ++e)
    if (!present_.contains(e)) g = g.delete_edge(e);
  return g;
}

bool CombMap::is_loop(EdgeId e) const {
  require_edge(e);
  return vertex_of_[edge_halves_[e].first] == vertex_of_[edge_halves_[e].second];
}

bool CombMap::is_isthmus(EdgeId e) const {
  require_edge(e);
  if (is_loop(e)) return false;
  detail::UnionFind uf(vertex_count_);
  for (EdgeId f : present_.without(e)) uf.unite(vertex_of_[edge_halves_[f].first], vertex_of_[edge_halves_[f].second]);
  return uf.find(vertex_of_[edge_halves_[e].first]) != uf.find(vertex_of_[edge_halves_[e].second]);
}

CombMap CombMap::delete_edge(EdgeId e) const {
  require_edge(e);
  if (is_isthmus(e)) throw Error("cannot delete isthmus " + edge_name(e));
  auto [h1, h2] = edge_halves_[e];
  const auto& s = sigma_;
  auto sd = [&](HalfEdge h) -> HalfEdge {
    if ((s[h] == h1 && s[h1] == h2) || (s[h] == h2 && s[h2] == h1)) return s[s[s[h]]];
    if ((s[h] == h1 && s[h1] != h2) || (s[h] == h2 && s[h2] != h1)) return s[s[h]];
    return s[h];
  };
  CombMap out = *this;
  for (HalfEdge h : half_edges())
    if (h != h1 && h != h2) out.sigma_[h] = sd(h);
  out.sigma_[h1] = h1;
  out.sigma_[h2] = h2;
  out.alive_[h1] = out.alive_[h2] = false;
  out.present_.erase(e);
  if (root_ == h1 || root_ == h2) {
    HalfEdge r = sd(root_);
    out.root_ = out.alive(r) ? r : kNoHalfEdge;
  }
  out.build_vertices();
  return out;
}

CombMap CombMap::contract_edge(EdgeId e) const {
  require_edge(e);
  if (is_loop(e)) throw Error("cannot contract loop " + edge_name(e));
  auto [h1, h2] = edge_halves_[e];
  const auto& s = sigma_;
  const auto& a = alpha_;
  auto sc = [&](HalfEdge h) -> HalfEdge {
    if ((s[h] == h1 && s[h2] == h2) || (s[h] == h2 && s[h1] == h1)) return s[s[h]];
    if ((s[h] == h1 && s[h2] != h2) || (s[h] == h2 && s[h1] != h1)) return s[a[s[h]]];
    return s[h];
  };
  CombMap out = *this;
  for (HalfEdge h : half_edges())
    if (h != h1 && h != h2) out.sigma_[h] = sc(h);
  out.sigma_[h1] = h1;
  out.sigma_[h2] = h2;
  out.alive_[h1] = out.alive_[h2] = false;
  out.present_.erase(e);
  if (root_ == h1 || root_ == h2) {
    HalfEdge r = sc(root_);
    out.root_ = out.alive(r) ? r : kNoHalfEdge;
  }
  out.build_vertices();
  return out;
}

CombMap CombMap::mirror() const {
  CombMap out = *this;
  for (HalfEdge h : half_edges()) out.sigma_[sigma_[h]] = h;
  if (root_ != kNoHalfEdge) out.root_ = sigma_inverse(root_);
  out.build_vertices();
  return out;
}

void CombMap::require_tree(EdgeSet t) const {
  if (!is_spanning_tree(underlying_graph(), t)) throw Error("edge set is not a spanning tree of the map");
}

std::vector<HalfEdge> CombMap::motion_function(EdgeSet tree) const {
  require_tree(tree);
  std::vector<HalfEdge> t(sigma_.size());
  for (HalfEdge h = 0; h < sigma_.size(); ++h) {
    if (!alive_[h]) t[h] = h;
    else t[h] = tree.contains(edge_of_[h]) ? sigma_[alpha_[h]] : sigma_[h];
  }
  return t;
}

HalfEdgeOrder CombMap::tour_order(EdgeSet tree) const {
  auto t = motion_function(tree);
  HalfEdgeOrder out;
  if (root_ == kNoHalfEdge) return out;
  std::vector<bool> seen_edge(edge_halves_.size(), false);
  HalfEdge h = root_;
  do {
    out.half_edges.push_back(h);
    EdgeId e = edge_of_[h];
    if (!seen_edge[e]) {
      seen_edge[e] = true;
      out.edges.push_back(e);
    }
    h = t[h];
  } while (h != root_);
  if (out.half_edges.size() != 2 * edge_count()) throw Error("motion function is not cyclic");
  return out;
}

}  // namespace dact
