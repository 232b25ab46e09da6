#include "dact/conjecture.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "dact/activity.hpp"
#include "dact/partition.hpp"
#include "dact/tutte.hpp"

namespace dact {

bool induces_partition(const Graph& g, const ActivityTable& psi) {
  std::vector<SubgraphInterval> intervals;
  for (const auto& [t, act] : psi) intervals.push_back({t - act, t | act});
  return is_disjoint_cover(g, intervals);
}

bool is_tutte_descriptive(const Graph& g, const ActivityTable& psi) {
  return tutte_activity(g, [&](EdgeSet t) {
           EdgeSet act = psi.at(t);
           return Activity{act & t, act - t};
         }) == tutte_delcon(g);
}

bool is_strongly_tutte_descriptive(const Graph& g, const ActivityTable& psi) {
  return induces_partition(g, psi) && is_tutte_descriptive(g, psi);
}

EdgeSet never_active_edges(const Graph& g, const ActivityTable& psi) {
  EdgeSet never = g.edges();
  for (const auto& [t, act] : psi) never -= act;
  return never;
}

namespace {

using Nodes = std::vector<ExplicitTree::Node>;

// Appends `sub` to `out`, shifting its child indices; returns the index of its root.
std::int32_t append(Nodes& out, const Nodes& sub) {
  auto base = static_cast<std::int32_t>(out.size());
  for (auto n : sub) {
    if (n.left >= 0) n.left += base;
    if (n.right >= 0) n.right += base;
    out.push_back(n);
  }
  return base;
}

Nodes comb(const std::vector<EdgeId>& edges, std::size_t from) {
  Nodes sub;
  sub.push_back({edges[from], -1, -1});
  if (from + 1 < edges.size()) {
    Nodes child = comb(edges, from + 1);
    sub[0].left = append(sub, child);
    sub[0].right = append(sub, child);
  }
  return sub;
}

struct Builder {
  std::string failure;

  std::optional<Nodes> build(const Graph& h, const ActivityTable& psi) {
    EdgeSet standard;
    for (EdgeId e : h.edges())
      if (h.classify(e) == EdgeKind::Standard) standard.insert(e);
    if (standard.empty()) return comb(h.edges().elements(), 0);
    EdgeSet candidates = never_active_edges(h, psi) & standard;
    if (candidates.empty()) {
      failure = "minor with edges " + h.format_edge_set(h.edges()) + " has no never-active standard edge";
      return std::nullopt;
    }
    for (EdgeId e : candidates) {
      ActivityTable psi_d, psi_c;
      for (const auto& [t, act] : psi) {
        if (t.contains(e)) psi_c[t.without(e)] = act;
        else psi_d[t] = act;
      }
      auto left = build(h.delete_edge(e), psi_d);
      if (!left) continue;
      auto right = build(h.contract_edge(e), psi_c);
      if (!right) continue;
      Nodes out{{e, -1, -1}};
      out[0].left = append(out, *left);
      out[0].right = append(out, *right);
      return out;
    }
    return std::nullopt;
  }
};

}  // namespace

Realisation realise_activity(const Graph& g, const ActivityTable& psi) {
  g.require_connected();
  if (g.edge_count() == 0) return {nullptr, "graph has no edges"};
  Builder b;
  auto nodes = b.build(g, psi);
  if (!nodes) return {nullptr, b.failure};
  auto tree = std::make_shared<const ExplicitTree>(std::move(*nodes), g.edges());
  for (const auto& [t, act] : psi) {
    if (delta_activity(g, *tree, t).all() != act)
      return {nullptr, "constructed decision tree disagrees on tree " + g.format_edge_set(t)};
  }
  return {tree, ""};
}

// ---------------------------------------------------------------- exhaustive scan

namespace {

struct Scanner {
  const std::vector<EdgeSet>& trees;
  std::vector<EdgeId> edges;
  // masks[i][a] = subgraph slots covered by tree i with activity index a
  std::vector<std::vector<std::uint64_t>> masks;
  std::uint64_t full;
  ScanReport& report;
  std::vector<std::uint32_t> choice;

  EdgeSet expand(std::uint32_t a) const {
    EdgeSet s;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((a >> i) & 1u) s.insert(edges[i]);
    return s;
  }

  void run(std::size_t i, std::uint64_t covered) {
    ++report.nodes_explored;
    if (i == trees.size()) {
      if (covered != full) return;
      ActivityTable psi;
      for (std::size_t k = 0; k < trees.size(); ++k) psi[trees[k]] = expand(choice[k]);
      report.strongly_descriptive.push_back(std::move(psi));
      return;
    }
    for (std::uint32_t a = 0; a < masks[i].size(); ++a) {
      if (masks[i][a] & covered) continue;
      choice[i] = a;
      run(i + 1, covered | masks[i][a]);
    }
  }
};

std::string format_activity(const Graph& g, const ActivityTable& psi) {
  std::string out;
  for (const auto& [t, act] : psi) {
    if (!out.empty()) out += " ";
    out += g.format_edge_set(t) + "->" + g.format_edge_set(act);
  }
  return out;
}

}  // namespace

ScanReport conjecture_scan(const Graph& g, std::uint64_t budget) {
  g.require_connected();
  const std::size_t m = g.edge_count();
  if (m > 6) throw Error("conjecture scan limited to 6 edges");
  auto trees = spanning_trees(g);
  ScanReport report;
  report.tree_count = trees.size();
  std::size_t bits = m * trees.size();
  if (bits >= 64 || (std::uint64_t{1} << bits) > budget)
    throw Error("candidate space 2^" + std::to_string(bits) + " exceeds budget " + std::to_string(budget));
  report.candidate_space = std::uint64_t{1} << bits;
  for (EdgeId e : g.edges())
    if (g.classify(e) == EdgeKind::Standard) report.has_standard_edge = true;

  Scanner sc{trees, g.edges().elements(), {}, 0, report, std::vector<std::uint32_t>(trees.size(), 0)};
  const std::size_t slots = std::size_t{1} << m;
  sc.full = slots == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << slots) - 1;
  auto slot_of = [&](EdgeSet s) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < sc.edges.size(); ++i)
      if (s.contains(sc.edges[i])) idx |= std::size_t{1} << i;
    return idx;
  };
  for (EdgeSet t : trees) {
    std::vector<std::uint64_t> per(slots, 0);
    for (std::uint32_t a = 0; a < slots; ++a) {
      EdgeSet act = sc.expand(a);
      for_each_subset(act, [&](EdgeSet r) { per[a] |= std::uint64_t{1} << slot_of(t ^ r); });
    }
    sc.masks.push_back(std::move(per));
  }
  sc.run(0, 0);

  for (const ActivityTable& psi : report.strongly_descriptive) {
    std::size_t before = report.counterexamples.size();
    if (is_tutte_descriptive(g, psi)) ++report.tutte_descriptive;
    else report.counterexamples.push_back("partition without Tutte sum: " + format_activity(g, psi));
    if (report.has_standard_edge && never_active_edges(g, psi).empty())
      report.counterexamples.push_back("no never-active edge: " + format_activity(g, psi));
    Realisation r = realise_activity(g, psi);
    if (r.tree) ++report.realised;
    else report.counterexamples.push_back("no decision tree (" + r.failure + "): " + format_activity(g, psi));
    if (report.counterexamples.size() > before) ++report.failing;
  }
  return report;
}

std::string ScanReport::to_string(const Graph& g) const {
  std::ostringstream out;
  out << "spanning trees: " << tree_count << "\n";
  out << "candidate activities: " << candidate_space << "\n";
  out << "search nodes: " << nodes_explored << "\n";
  out << "strongly Tutte-descriptive: " << strongly_descriptive.size() << "\n";
  out << "Tutte-descriptive among them: " << tutte_descriptive << "\n";
  out << "realised by a decision tree: " << realised << "\n";
  out << "counterexample activities: " << failing << "\n";
  out << "failed conditions: " << counterexamples.size() << "\n";
  for (const auto& c : counterexamples) out << "  " << c << "\n";
  (void)g;
  return out.str();
}

// ---------------------------------------------------------------- small graph families

std::vector<Graph> connected_multigraphs(std::size_t max_edges) {
  using EdgeList = std::vector<std::pair<VertexId, VertexId>>;
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_edges + 1; ++n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a; b < n; ++b) pairs.emplace_back(a, b);
    std::vector<VertexId> perm(n);
    std::set<EdgeList> seen;
    for (std::size_t m = std::max<std::size_t>(1, n - 1); m <= max_edges; ++m) {
      // multisets of m pairs as non-decreasing index sequences
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        EdgeList edges;
        for (std::size_t i : pick) edges.push_back(pairs[i]);
        std::iota(perm.begin(), perm.end(), VertexId{0});
        EdgeList best;
        do {
          EdgeList mapped;
          for (auto [a, b] : edges) mapped.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
          std::sort(mapped.begin(), mapped.end());
          if (best.empty() || mapped < best) best = mapped;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(best).second) {
          std::vector<Edge> es;
          for (auto [a, b] : best) es.push_back({a, b});
          Graph cand(n, std::move(es));
          if (cand.is_connected()) out.push_back(std::move(cand));
        }
        std::size_t k = m;
        while (k > 0 && pick[k - 1] == pairs.size() - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t j = k; j < m; ++j) pick[j] = pick[k - 1];
      }
    }
  }
  return out;
}

}  // namespace dact
