#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <gmpxx.h>

#include "dact/error.hpp"

using dact::EdgeId;
using dact::EdgeSet;
using dact::Graph;

namespace oracle {

std::string fixture(const std::string& name) { return std::string(DACT_FIXTURE_DIR) + "/" + name; }

std::uint64_t kirchhoff_count(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return 1;
  std::vector<std::vector<mpq_class>> lap(n, std::vector<mpq_class>(n, 0));
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.edge(e);
    if (a == b) continue;
    lap[a][a] += 1;
    lap[b][b] += 1;
    lap[a][b] -= 1;
    lap[b][a] -= 1;
  }
  // determinant of the minor without the last row/column
  const std::size_t k = n - 1;
  mpq_class det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && lap[p][c] == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      std::swap(lap[p], lap[c]);
      det = -det;
    }
    det *= lap[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      mpq_class f = lap[r][c] / lap[c][c];
      for (std::size_t j = c; j < k; ++j) lap[r][j] -= f * lap[c][j];
    }
  }
  return det.get_num().get_ui();
}

std::size_t components(const Graph& g, EdgeSet s) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
    if (!s.contains(e)) continue;
    adj[g.edge(e).a].push_back(g.edge(e).b);
    adj[g.edge(e).b].push_back(g.edge(e).a);
  }
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    ++count;
    std::vector<std::size_t> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[u]) {
        if (seen[w]) continue;
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return count;
}

namespace {

long long binom(unsigned n, unsigned k) {
  long long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

dact::BivariatePoly brute_tutte(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t c0 = components(g, g.edges());
  std::map<std::pair<unsigned, unsigned>, long long> coef;
  auto edges = g.edges().elements();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    EdgeSet s;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((mask >> i) & 1) s.insert(edges[i]);
    const std::size_t c = components(g, s);
    const unsigned a = static_cast<unsigned>(c - c0);
    const unsigned b = static_cast<unsigned>(s.size() + c - n);
    // (x-1)^a (y-1)^b
    for (unsigned i = 0; i <= a; ++i)
      for (unsigned j = 0; j <= b; ++j) {
        long long sign = ((a - i) + (b - j)) % 2 ? -1 : 1;
        coef[{i, j}] += sign * binom(a, i) * binom(b, j);
      }
  }
  dact::BivariatePoly p;
  for (auto [mono, c] : coef)
    if (c != 0) p.add_term(mono.first, mono.second, mpq_class(static_cast<long>(c)));
  return p;
}

std::vector<EdgeSet> brute_spanning_trees(const Graph& g) {
  std::vector<EdgeSet> out;
  const std::size_t need = g.vertex_count() - 1;
  auto edges = g.edges().elements();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != need) continue;
    EdgeSet s;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((mask >> i) & 1) s.insert(edges[i]);
    if (components(g, s) == 1) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_up_to_relabel(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edges() != b.edges()) return false;
  std::vector<dact::VertexId> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (EdgeId e : a.edges()) {
      auto [x, y] = a.edge(e);
      auto [u, v] = b.edge(e);
      auto px = perm[x], py = perm[y];
      if (!((px == u && py == v) || (px == v && py == u))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph random_connected(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  const std::size_t n = nv(rng);
  std::vector<dact::Edge> edges;
  // random spanning tree first, then extra edges (loops and parallels allowed)
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    edges.push_back({static_cast<dact::VertexId>(pick(rng)), static_cast<dact::VertexId>(v)});
  }
  const std::size_t lo = std::max<std::size_t>(edges.size(), 1);
  std::uniform_int_distribution<std::size_t> ne(lo, std::max(lo, max_edges));
  const std::size_t m = ne(rng);
  std::uniform_int_distribution<std::size_t> pv(0, n - 1);
  while (edges.size() < m) edges.push_back({static_cast<dact::VertexId>(pv(rng)), static_cast<dact::VertexId>(pv(rng))});
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(n, std::move(edges));
}

std::vector<dact::CombMap> random_maps(std::size_t count, std::uint64_t seed, std::size_t max_edges) {
  using dact::HalfEdge;
  std::mt19937_64 rng(seed);
  std::vector<dact::CombMap> out;
  while (out.size() < count) {
    std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_edges)(rng);
    std::vector<HalfEdge> sigma(2 * m), alpha(2 * m);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    for (HalfEdge h = 0; h < 2 * m; ++h) alpha[h] = h ^ 1;
    try {
      out.emplace_back(sigma, alpha, 0);
    } catch (const dact::Error&) {
      // disconnected draw
    }
  }
  return out;
}

Graph cycle_graph(std::size_t n) {
  std::vector<dact::Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    edges.push_back({static_cast<dact::VertexId>(v), static_cast<dact::VertexId>((v + 1) % n)});
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<dact::Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back({static_cast<dact::VertexId>(v), static_cast<dact::VertexId>(v + 1)});
  return Graph(n, std::move(edges));
}

Graph single_isthmus() { return Graph(2, {{0, 1}}); }
Graph single_loop() { return Graph(1, {{0, 0}}); }

std::vector<Graph> corpus(std::size_t count, std::uint64_t seed) {
  std::vector<Graph> out{single_isthmus(), single_loop(), cycle_graph(3), cycle_graph(4), path_graph(4),
                         Graph(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}}), Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})};
  std::mt19937_64 rng(seed);
  while (out.size() < count) out.push_back(random_connected(rng, 6, 8));
  return out;
}

}  // namespace oracle
