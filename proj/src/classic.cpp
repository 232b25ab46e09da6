#include "dact/classic.hpp"

#include <algorithm>

namespace dact {

namespace {

void require_tree(const Graph& g, EdgeSet t) {
  if (!is_spanning_tree(g, t)) throw Error("edge set " + g.format_edge_set(t) + " is not a spanning tree");
}

std::vector<std::size_t> positions(const Graph& g, std::span<const EdgeId> order) {
  std::vector<std::size_t> pos(g.edge_capacity(), 0);
  EdgeSet seen;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!g.has_edge(order[i]) || seen.contains(order[i])) throw Error("order is not a permutation of the edges");
    seen.insert(order[i]);
    pos[order[i]] = i;
  }
  if (seen != g.edges()) throw Error("order is not a permutation of the edges");
  return pos;
}

template <typename Better>
Activity extremal_rule(const Graph& g, std::span<const EdgeId> order, EdgeSet tree, Better better) {
  require_tree(g, tree);
  auto pos = positions(g, order);
  Activity act;
  for (EdgeId e : g.edges()) {
    EdgeSet fund = tree.contains(e) ? fundamental_cocycle(g, tree, e) : fundamental_cycle(g, tree, e);
    bool extremal = std::none_of(fund.begin(), fund.end(), [&](EdgeId f) { return better(pos[f], pos[e]); });
    if (!extremal) continue;
    if (tree.contains(e)) act.internal.insert(e);
    else act.external.insert(e);
  }
  return act;
}

}  // namespace

Activity min_rule_active(const Graph& g, std::span<const EdgeId> order, EdgeSet tree) {
  return extremal_rule(g, order, tree, [](std::size_t a, std::size_t b) { return a < b; });
}

Activity max_rule_active(const Graph& g, std::span<const EdgeId> order, EdgeSet tree) {
  return extremal_rule(g, order, tree, [](std::size_t a, std::size_t b) { return a > b; });
}

Activity ordering_active(const Graph& g, std::span<const EdgeId> order, EdgeSet tree) {
  return min_rule_active(g, order, tree);
}

Activity embedding_active(const CombMap& m, EdgeSet tree) {
  return min_rule_active(m.underlying_graph(), m.tour_order(tree).edges, tree);
}

OrderMapTable embedding_order_map(const CombMap& m) {
  CombMap mirrored = m.mirror();
  OrderMapTable table;
  for (EdgeSet t : spanning_trees(m.underlying_graph())) table[t] = mirrored.tour_order(t).edges;
  return table;
}

OrderMapTable reversed_embedding_order_map(const CombMap& m) {
  OrderMapTable table;
  for (EdgeSet t : spanning_trees(m.underlying_graph())) {
    auto order = m.tour_order(t).edges;
    std::reverse(order.begin(), order.end());
    table[t] = std::move(order);
  }
  return table;
}

// ---------------------------------------------------------------- pruning walk

PruningRun run_pruning(const CombMap& m, EdgeSet forest) {
  Graph g = m.underlying_graph();
  g.require_subgraph(forest);
  if (!is_forest(g, forest)) throw Error("input of the pruning walk contains a cycle");
  PruningRun run;
  run.charges.assign(m.vertex_count(), 0);
  CombMap cur = m;
  EdgeSet visited;
  HalfEdge h = m.root();
  const std::size_t guard = 4 * m.half_edge_capacity() * m.half_edge_capacity() + 16;
  for (std::size_t step = 0; visited != m.edges(); ++step) {
    if (step > guard) throw Error("pruning walk did not terminate");
    EdgeId e = cur.edge_of(h);
    bool isthmus = cur.is_isthmus(e);
    if (!visited.contains(e)) {
      visited.insert(e);
      run.first_visit.push_back(e);
      if (isthmus) run.isthmus_at_first_visit.insert(e);
    }
    HalfEdge next = cur.sigma(cur.alpha(h));
    if (!isthmus && !forest.contains(e)) {
      run.charges[m.vertex_of(h)] -= 1;
      run.charges[m.vertex_of(m.alpha(h))] += 1;
      CombMap pruned = cur.delete_edge(e);
      // next may be a half-edge of e itself; continue with the next survivor around its vertex
      for (HalfEdge k = next; !pruned.alive(next);) {
        next = cur.sigma(next);
        if (next == k) break;
      }
      cur = std::move(pruned);
      if (!cur.alive(next)) break;
    }
    h = next;
  }
  if (visited != m.edges()) throw Error("pruning walk stopped early");
  run.tree = cur.edges();
  return run;
}

EdgeSet tau(const CombMap& m, EdgeSet forest) { return run_pruning(m, forest).tree; }

EdgeSet blossoming_internal_active(const CombMap& m, EdgeSet tree) {
  require_tree(m.underlying_graph(), tree);
  EdgeSet act;
  for (EdgeId e : tree)
    if (tau(m, tree.without(e)) == tree) act.insert(e);
  return act;
}

EdgeSet blossoming_isthmus_at_first_visit(const CombMap& m, EdgeSet tree) {
  require_tree(m.underlying_graph(), tree);
  return run_pruning(m, tree).isthmus_at_first_visit & tree;
}

int subtree_charge(const CombMap& m, EdgeSet tree, EdgeId e) {
  Graph g = m.underlying_graph();
  require_tree(g, tree);
  if (!tree.contains(e)) throw Error("charge check needs an internal edge");
  auto run = run_pruning(m, tree);
  detail::UnionFind uf(g.vertex_count());
  for (EdgeId f : tree.without(e)) uf.unite(g.edge(f).a, g.edge(f).b);
  std::size_t root_side = uf.find(m.vertex_of(m.root()));
  int total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (uf.find(v) != root_side) total += run.charges[v];
  return total;
}

bool blossoming_charge_check(const CombMap& m, EdgeSet tree, EdgeId e) {
  int c = subtree_charge(m, tree, e);
  return c == 0 || c == 1;
}

OrderMapTable blossoming_order_map(const CombMap& m) {
  OrderMapTable table;
  for (EdgeSet t : spanning_trees(m.underlying_graph())) table[t] = run_pruning(m, t).first_visit;
  return table;
}

Activity blossoming_active(const CombMap& m, EdgeSet tree) {
  return max_rule_active(m.underlying_graph(), run_pruning(m, tree).first_visit, tree);
}

// ---------------------------------------------------------------- DFS

void require_simple(const Graph& g) {
  if (!g.is_simple()) throw Error("DFS activities need a graph without multiple edges");
}

namespace {

// edge_between[u][v] for a simple graph, restricted to `s`
std::vector<std::vector<int>> adjacency(const Graph& g, EdgeSet s) {
  std::vector<std::vector<int>> adj(g.vertex_count(), std::vector<int>(g.vertex_count(), -1));
  for (EdgeId e : s) {
    auto [a, b] = g.edge(e);
    adj[a][b] = adj[b][a] = static_cast<int>(e);
  }
  return adj;
}

}  // namespace

DfsRun dfs_run(const Graph& g, EdgeSet s) {
  require_simple(g);
  g.require_subgraph(s);
  const std::size_t n = g.vertex_count();
  auto adj = adjacency(g, s);
  DfsRun run;
  run.parent.assign(n, kNoVertex);
  std::vector<bool> seen(n, false);
  auto greatest_unvisited = [&](VertexId v) -> VertexId {
    for (VertexId u = static_cast<VertexId>(n); u-- > 0;)
      if (u != v && adj[v][u] >= 0 && !seen[u]) return u;
    return kNoVertex;
  };
  auto visit = [&](VertexId v) {
    seen[v] = true;
    run.visit_order.push_back(v);
  };
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    visit(start);
    while (true) {
      VertexId v = kNoVertex;
      for (auto it = run.visit_order.rbegin(); it != run.visit_order.rend(); ++it)
        if (greatest_unvisited(*it) != kNoVertex) {
          v = *it;
          break;
        }
      if (v == kNoVertex) break;
      for (VertexId u; (u = greatest_unvisited(v)) != kNoVertex; v = u) {
        visit(u);
        run.parent[u] = v;
        run.forest.insert(static_cast<EdgeId>(adj[v][u]));
      }
    }
  }
  return run;
}

EdgeSet dfs_forest(const Graph& g, EdgeSet s) { return dfs_run(g, s).forest; }

namespace {

void require_dfs_closed(const Graph& g, EdgeSet forest) {
  if (!is_forest(g, forest) || dfs_forest(g, forest) != forest)
    throw Error("edge set is not a DFS forest of itself");
}

}  // namespace

EdgeSet dfs_active(const Graph& g, EdgeSet forest) {
  require_dfs_closed(g, forest);
  EdgeSet act;
  for (EdgeId e : g.edges() - forest)
    if (dfs_forest(g, forest.with(e)) == forest) act.insert(e);
  return act;
}

EdgeSet dfs_active_by_inversion(const Graph& g, EdgeSet forest) {
  require_dfs_closed(g, forest);
  DfsRun run = dfs_run(g, forest);
  std::vector<std::size_t> when(g.vertex_count());
  for (std::size_t i = 0; i < run.visit_order.size(); ++i) when[run.visit_order[i]] = i;
  EdgeSet act;
  for (EdgeId e : g.edges() - forest) {
    auto [u, v] = g.edge(e);
    if (u == v) {
      act.insert(e);
      continue;
    }
    if (when[u] > when[v]) std::swap(u, v);
    // climb from v towards the root looking for u; w is the child of u on the way
    VertexId w = v;
    while (run.parent[w] != kNoVertex && run.parent[w] != u) w = run.parent[w];
    if (run.parent[w] == u && w > v) act.insert(e);
  }
  return act;
}

std::vector<EdgeId> dfs_order_map(const Graph& g, EdgeSet s) {
  require_simple(g);
  g.require_subgraph(s);
  const std::size_t n = g.vertex_count();
  auto adj = adjacency(g, g.edges());
  std::vector<bool> seen(n, false);
  std::vector<VertexId> visit_order;
  EdgeSet used;
  std::vector<EdgeId> order;
  // greatest neighbour (possibly v itself) joined to v by an unvisited edge
  auto next_neighbor = [&](VertexId v) -> VertexId {
    for (VertexId u = static_cast<VertexId>(n); u-- > 0;)
      if (adj[v][u] >= 0 && !used.contains(static_cast<EdgeId>(adj[v][u]))) return u;
    return kNoVertex;
  };
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    visit_order.push_back(start);
    while (true) {
      VertexId v = kNoVertex;
      for (auto it = visit_order.rbegin(); it != visit_order.rend(); ++it)
        if (next_neighbor(*it) != kNoVertex) {
          v = *it;
          break;
        }
      if (v == kNoVertex) break;
      for (VertexId u; (u = next_neighbor(v)) != kNoVertex;) {
        auto e = static_cast<EdgeId>(adj[v][u]);
        order.push_back(e);
        used.insert(e);
        if (s.contains(e) && !seen[u]) {
          seen[u] = true;
          visit_order.push_back(u);
          v = u;
        }
      }
    }
  }
  return order;
}

OrderMapTable dfs_order_table(const Graph& g) {
  OrderMapTable table;
  for (EdgeSet t : spanning_trees(g)) table[t] = dfs_order_map(g, t);
  return table;
}

}  // namespace dact
