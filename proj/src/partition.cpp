#include "dact/partition.hpp"

#include <algorithm>
#include <sstream>

namespace dact {

bool equivalent(const Graph& g, const DecisionOracle& oracle, EdgeSet s1, EdgeSet s2) {
  return run_history(g, oracle, s1) == run_history(g, oracle, s2);
}

namespace characterization {

bool same_history(const History& h1, const History& h2) { return h1 == h2; }

bool same_type_partition(const History& h1, const History& h2) {
  for (EdgeType t : {EdgeType::Se, EdgeType::L, EdgeType::Si, EdgeType::I})
    if (h1.of_type(t) != h2.of_type(t)) return false;
  return true;
}

bool same_standard_types(const History& h1, const History& h2) {
  return h1.of_type(EdgeType::Se) == h2.of_type(EdgeType::Se) && h1.of_type(EdgeType::Si) == h2.of_type(EdgeType::Si);
}

bool difference_within_active(EdgeSet s1, const History& h1, EdgeSet s2) { return (s1 ^ s2).subset_of(h1.active()); }

// The only candidate toggle is the part of the difference made of active edges.
bool active_toggle_exists(EdgeSet s1, const History& h1, EdgeSet s2) {
  EdgeSet r = (s1 ^ s2) & h1.active();
  return (s1 ^ r) == s2;
}

}  // namespace characterization

TreePartition::TreePartition(const Graph& g, std::vector<TreeClass> classes)
    : edges_(g.edges().elements()), classes_(std::move(classes)) {
  if (edges_.size() > kMaxPartitionEdges) throw Error("partition table limited to 20 edges");
  constexpr std::uint32_t kFree = ~std::uint32_t{0};
  table_.assign(std::size_t{1} << edges_.size(), kFree);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const auto& iv = classes_[c].interval;
    for_each_subset(iv.upper - iv.lower, [&](EdgeSet r) {
      auto& slot = table_[index(iv.lower | r)];
      if (slot != kFree) throw Error("intervals overlap at " + g.format_edge_set(iv.lower | r));
      slot = static_cast<std::uint32_t>(c);
    });
  }
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] == kFree) throw Error("intervals do not cover every subgraph");
}

std::size_t TreePartition::index(EdgeSet s) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (s.contains(edges_[i])) idx |= std::size_t{1} << i;
  return idx;
}

std::size_t TreePartition::class_of(EdgeSet s) const {
  for (EdgeId e : s)
    if (std::find(edges_.begin(), edges_.end(), e) == edges_.end()) throw Error("edge set is not a subgraph");
  return table_[index(s)];
}

TreePartition partition(const Graph& g, const DecisionOracle& oracle) {
  std::vector<TreeClass> classes;
  for (EdgeSet t : spanning_trees(g)) {
    Activity a = delta_activity(g, oracle, t);
    classes.push_back({t, {t - a.internal, t | a.external}, a});
  }
  return TreePartition(g, std::move(classes));
}

EdgeSet representative_tree(const Graph& g, const DecisionOracle& oracle, EdgeSet s) {
  return run_history(g, oracle, s).internal_types();
}

ForestPartitions forest_partition(const Graph& g, const DecisionOracle& oracle) {
  ForestPartitions out;
  for (EdgeSet f : spanning_forests(g)) {
    EdgeSet loops = run_history(g, oracle, f).of_type(EdgeType::L);
    out.by_loop_type.push_back({f, {f, f | loops}});
    out.by_forest_activity.push_back({f, {f, f | forest_active(g, oracle, f)}});
  }
  return out;
}

bool is_disjoint_cover(const Graph& g, const std::vector<SubgraphInterval>& intervals) {
  if (g.edge_count() > 30) throw Error("cover check limited to 30 edges");
  std::uint64_t total = 0;
  for (const auto& iv : intervals) {
    if (!iv.lower.subset_of(iv.upper) || !iv.upper.subset_of(g.edges())) return false;
    total += iv.count();
  }
  if (total != std::uint64_t{1} << g.edge_count()) return false;
  // equal total size, so pairwise disjointness implies cover
  for (std::size_t i = 0; i < intervals.size(); ++i)
    for (std::size_t j = i + 1; j < intervals.size(); ++j) {
      const auto& a = intervals[i];
      const auto& b = intervals[j];
      // they meet iff lower(a) + lower(b) fits under both uppers
      if ((a.lower | b.lower).subset_of(a.upper & b.upper)) return false;
    }
  return true;
}

std::string partition_dot(const Graph& g, const TreePartition& p) {
  static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
                                  "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3"};
  auto node = [&](EdgeSet s) { return "s" + std::to_string(s.bits()); };
  auto label = [&](EdgeSet s) {
    std::string out;
    for (EdgeId e : s) out += g.edge_name(e);
    return out.empty() ? std::string("∅") : out;
  };
  std::ostringstream out;
  out << "graph subgraphs {\n  rankdir=BT;\n  node [style=filled, shape=box];\n";
  for_each_subset(g.edges(), [&](EdgeSet s) {
    std::size_t c = p.class_of(s);
    bool is_tree = p.classes()[c].tree == s;
    out << "  " << node(s) << " [label=\"" << label(s) << "\", fillcolor=\"" << palette[c % std::size(palette)]
        << "\"" << (is_tree ? ", penwidth=3" : "") << "];\n";
  });
  for_each_subset(g.edges(), [&](EdgeSet s) {
    for (EdgeId e : g.edges() - s) out << "  " << node(s) << " -- " << node(s.with(e)) << ";\n";
  });
  out << "}\n";
  return out.str();
}

}  // namespace dact
