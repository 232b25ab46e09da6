#include "dact/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace dact {

namespace detail {

UnionFind::UnionFind(std::size_t n) : parent_(n), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (x > y) std::swap(x, y);
  parent_[y] = x;
  --components_;
  return true;
}

}  // namespace detail

const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Standard: return "standard";
    case EdgeKind::Isthmus: return "isthmus";
    case EdgeKind::Loop: return "loop";
  }
  return "?";
}

std::string default_edge_name(EdgeId e, std::size_t capacity) {
  if (capacity <= 26) return std::string(1, static_cast<char>('a' + e));
  return "e" + std::to_string(e);
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> names)
    : vertex_count_(vertex_count), edges_(std::move(edges)), names_(std::move(names)) {
  if (vertex_count_ == 0) throw Error("graph needs at least one vertex");
  if (edges_.size() > kMaxEdges) throw Error("at most 64 edges are supported");
  if (!names_.empty() && names_.size() != edges_.size()) throw Error("edge name count mismatch");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].a >= vertex_count_ || edges_[i].b >= vertex_count_)
      throw Error("edge " + std::to_string(i) + " has an endpoint out of range");
  }
  if (!names_.empty()) {
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw Error("duplicate edge name");
  }
  present_ = EdgeSet::first(edges_.size());
}

const Edge& Graph::edge(EdgeId e) const {
  require_edge(e);
  return edges_[e];
}

void Graph::require_edge(EdgeId e) const {
  if (!has_edge(e)) throw Error("unknown edge id " + std::to_string(e));
}

void Graph::require_connected() const {
  if (!is_connected()) throw Error("graph is not connected");
}

void Graph::require_subgraph(EdgeSet s) const {
  if (!s.subset_of(present_)) throw Error("edge set is not a subgraph");
}

std::string Graph::edge_name(EdgeId e) const {
  if (e < names_.size()) return names_[e];
  return default_edge_name(e, edges_.size());
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  for (EdgeId e = 0; e < edges_.size(); ++e)
    if (edge_name(e) == name) return e;
  return std::nullopt;
}

EdgeSet Graph::parse_edge_list(std::string_view csv) const {
  EdgeSet s;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view tok = csv.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      auto e = find_edge(tok);
      if (!e || !has_edge(*e)) throw Error("unknown edge '" + std::string(tok) + "'");
      s.insert(*e);
    }
    pos = comma + 1;
  }
  return s;
}

std::string Graph::format_edge_set(EdgeSet s) const {
  std::string out = "{";
  bool first = true;
  for (EdgeId e : s) {
    if (!first) out += ",";
    out += edge_name(e);
    first = false;
  }
  return out + "}";
}

Graph Graph::delete_edge(EdgeId e) const {
  require_edge(e);
  Graph h = *this;
  h.present_.erase(e);
  return h;
}

Graph Graph::contract_edge(EdgeId e) const {
  const Edge& ce = edge(e);
  if (ce.is_loop()) throw Error("cannot contract loop " + edge_name(e));
  VertexId keep = std::min(ce.a, ce.b);
  VertexId gone = std::max(ce.a, ce.b);
  auto relabel = [&](VertexId v) -> VertexId {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  Graph h = *this;
  h.present_.erase(e);
  for (EdgeId f = 0; f < h.edges_.size(); ++f) {
    h.edges_[f].a = relabel(h.edges_[f].a);
    h.edges_[f].b = relabel(h.edges_[f].b);
  }
  // the removed edge keeps in-range endpoints
  h.edges_[e] = {keep, keep};
  h.vertex_count_ = vertex_count_ - 1;
  return h;
}

EdgeKind Graph::classify(EdgeId e) const {
  const Edge& ed = edge(e);
  if (ed.is_loop()) return EdgeKind::Loop;
  detail::UnionFind uf(vertex_count_);
  for (EdgeId f : present_.without(e)) uf.unite(edges_[f].a, edges_[f].b);
  return uf.find(ed.a) == uf.find(ed.b) ? EdgeKind::Standard : EdgeKind::Isthmus;
}

bool Graph::is_connected() const { return cc(*this, present_) == 1; }

bool Graph::is_simple() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e : present_) {
    auto [a, b] = edges_[e];
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) return false;
  }
  return true;
}

std::size_t cc(const Graph& g, EdgeSet s) {
  g.require_subgraph(s);
  detail::UnionFind uf(g.vertex_count());
  for (EdgeId e : s) uf.unite(g.edge(e).a, g.edge(e).b);
  return uf.components();
}

std::size_t cycl(const Graph& g, EdgeSet s) { return cc(g, s) + s.size() - g.vertex_count(); }

bool is_forest(const Graph& g, EdgeSet s) { return cycl(g, s) == 0; }

bool is_spanning_tree(const Graph& g, EdgeSet s) {
  return s.subset_of(g.edges()) && s.size() + 1 == g.vertex_count() && cc(g, s) == 1;
}

namespace {

struct AcyclicSearch {
  const Graph& g;
  std::vector<EdgeId> order;
  bool trees_only;
  std::vector<EdgeSet> out;

  void run(std::size_t i, detail::UnionFind uf, EdgeSet chosen) {
    if (trees_only && uf.components() == 1) {
      out.push_back(chosen);
      return;
    }
    if (i == order.size()) {
      if (!trees_only) out.push_back(chosen);
      return;
    }
    if (trees_only && order.size() - i < uf.components() - 1) return;
    EdgeId e = order[i];
    const Edge& ed = g.edge(e);
    if (uf.find(ed.a) != uf.find(ed.b)) {
      detail::UnionFind next = uf;
      next.unite(ed.a, ed.b);
      run(i + 1, std::move(next), chosen.with(e));
    }
    run(i + 1, std::move(uf), chosen);
  }
};

std::vector<EdgeSet> acyclic_subsets(const Graph& g, bool trees_only) {
  AcyclicSearch search{g, g.edges().elements(), trees_only, {}};
  search.run(0, detail::UnionFind(g.vertex_count()), {});
  std::sort(search.out.begin(), search.out.end());
  return search.out;
}

void require_tree(const Graph& g, EdgeSet t) {
  if (!is_spanning_tree(g, t)) throw Error("edge set " + g.format_edge_set(t) + " is not a spanning tree");
}

}  // namespace

std::vector<EdgeSet> spanning_trees(const Graph& g) {
  g.require_connected();
  return acyclic_subsets(g, true);
}

std::vector<EdgeSet> spanning_forests(const Graph& g) { return acyclic_subsets(g, false); }

EdgeSet fundamental_cycle(const Graph& g, EdgeSet tree, EdgeId e) {
  require_tree(g, tree);
  g.require_edge(e);
  if (tree.contains(e)) throw Error("fundamental cycle needs an external edge");
  const Edge& ed = g.edge(e);
  // tree path from ed.a to ed.b by search over tree edges
  std::vector<int> via(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{ed.a};
  seen[ed.a] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId f : tree) {
      const Edge& fe = g.edge(f);
      VertexId w;
      if (fe.a == v) w = fe.b;
      else if (fe.b == v) w = fe.a;
      else continue;
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = static_cast<int>(f);
      stack.push_back(w);
    }
  }
  EdgeSet cycle{e};
  for (VertexId v = ed.b; v != ed.a;) {
    EdgeId f = static_cast<EdgeId>(via[v]);
    cycle.insert(f);
    v = g.edge(f).a == v ? g.edge(f).b : g.edge(f).a;
  }
  return cycle;
}

EdgeSet fundamental_cocycle(const Graph& g, EdgeSet tree, EdgeId e) {
  require_tree(g, tree);
  g.require_edge(e);
  if (!tree.contains(e)) throw Error("fundamental cocycle needs an internal edge");
  detail::UnionFind uf(g.vertex_count());
  for (EdgeId f : tree.without(e)) uf.unite(g.edge(f).a, g.edge(f).b);
  EdgeSet cut;
  for (EdgeId f : g.edges())
    if (uf.find(g.edge(f).a) != uf.find(g.edge(f).b)) cut.insert(f);
  return cut;
}

}  // namespace dact
