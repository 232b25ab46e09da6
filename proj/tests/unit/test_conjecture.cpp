#include <gtest/gtest.h>

#include <map>

#include "dact/activity.hpp"
#include "dact/conjecture.hpp"
#include "dact/error.hpp"
#include "dact/graph_io.hpp"
#include "oracles.hpp"

using namespace dact;

namespace {

Graph g4() { return read_graph_file(oracle::fixture("g4.graph")); }

ActivityTable delta_table(const Graph& g, const DecisionOracle& o) {
  ActivityTable psi;
  for (EdgeSet t : spanning_trees(g)) psi[t] = delta_activity(g, o, t).all();
  return psi;
}

// Checks the partition and the Tutte sum without the library's predicates.
bool independently_strong(const Graph& g, const ActivityTable& psi) {
  std::map<std::uint64_t, int> hits;
  BivariatePoly sum;
  for (const auto& [t, act] : psi) {
    for_each_subset(act, [&](EdgeSet r) { ++hits[(t ^ r).bits()]; });
    sum += BivariatePoly::monomial(static_cast<unsigned>((act & t).size()), static_cast<unsigned>((act - t).size()));
  }
  if (hits.size() != (std::size_t{1} << g.edge_count())) return false;
  for (auto [s, n] : hits)
    if (n != 1 || !EdgeSet::from_bits(s).subset_of(g.edges())) return false;
  return sum == oracle::brute_tutte(g);
}

}  // namespace

TEST(Conjecture, SingleIsthmus) {
  Graph g = oracle::single_isthmus();
  ScanReport r = conjecture_scan(g, 1 << 10);
  ASSERT_EQ(r.strongly_descriptive.size(), 1u);
  EXPECT_EQ(r.strongly_descriptive[0].at({0}), EdgeSet{0});
  EXPECT_TRUE(r.counterexamples.empty());
}

TEST(Conjecture, TwoParallelEdges) {
  Graph g(2, {{0, 1}, {0, 1}});
  ScanReport r = conjecture_scan(g, 1 << 10);
  EXPECT_EQ(r.tree_count, 2u);
  EXPECT_FALSE(r.strongly_descriptive.empty());
  for (const auto& psi : r.strongly_descriptive) {
    EXPECT_FALSE(never_active_edges(g, psi).empty());
    EXPECT_TRUE(independently_strong(g, psi));
  }
  EXPECT_EQ(r.realised, r.strongly_descriptive.size());
  EXPECT_EQ(r.failing, 0u);
  EXPECT_TRUE(r.counterexamples.empty());
}

// A finding rather than a theorem: G4 admits activities that partition the
// subgraph lattice yet leave no edge inactive everywhere.
TEST(Conjecture, G4ScanFindsActivitiesWithoutNeverActiveEdge) {
  Graph g = g4();
  ScanReport r = conjecture_scan(g, 1 << 20);
  EXPECT_EQ(r.candidate_space, std::uint64_t{1} << 20);
  EXPECT_EQ(r.tutte_descriptive, r.strongly_descriptive.size());
  std::size_t without = 0;
  for (const auto& psi : r.strongly_descriptive) {
    ASSERT_TRUE(independently_strong(g, psi));
    if (never_active_edges(g, psi).empty()) ++without;
    EXPECT_EQ(realise_activity(g, psi).tree != nullptr, !never_active_edges(g, psi).empty());
  }
  EXPECT_GT(without, 0u);
  EXPECT_EQ(r.strongly_descriptive.size() - r.realised, without);
  EXPECT_EQ(r.failing, without);

  ActivityTable psi;
  auto s = [&](const char* csv) { return g.parse_edge_list(csv); };
  psi[s("a,b")] = s("a");
  psi[s("a,c")] = s("a,c");
  psi[s("b,c")] = s("a,d");
  psi[s("b,d")] = s("a,b");
  psi[s("c,d")] = s("a");
  EXPECT_TRUE(independently_strong(g, psi));
  EXPECT_TRUE(is_strongly_tutte_descriptive(g, psi));
  EXPECT_TRUE(never_active_edges(g, psi).empty());
}

TEST(Conjecture, BudgetEnforced) { EXPECT_THROW(conjecture_scan(g4(), 1000), Error); }

TEST(Conjecture, DeltaActivitiesAreStronglyDescriptiveAndRealisable) {
  for (const Graph& g : oracle::corpus(60, 91)) {
    bool standard = false;
    for (EdgeId e : g.edges()) standard = standard || g.classify(e) == EdgeKind::Standard;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto o = random_oracle(g, seed);
      ActivityTable psi = delta_table(g, *o);
      EXPECT_TRUE(is_strongly_tutte_descriptive(g, psi));
      EXPECT_TRUE(independently_strong(g, psi));
      if (standard) EXPECT_FALSE(never_active_edges(g, psi).empty());
      Realisation r = realise_activity(g, psi);
      ASSERT_TRUE(r.tree) << r.failure;
      EXPECT_EQ(delta_table(g, *r.tree), psi);
    }
  }
}

TEST(Conjecture, RejectsNonPartitions) {
  Graph g = g4();
  ActivityTable psi;
  for (EdgeSet t : spanning_trees(g)) psi[t] = {};
  EXPECT_FALSE(induces_partition(g, psi));
  EXPECT_FALSE(is_tutte_descriptive(g, psi));
  EXPECT_EQ(never_active_edges(g, psi), g.edges());
}

TEST(ConnectedMultigraphs, SmallCounts) {
  auto two = connected_multigraphs(2);
  // isthmus, loop, two loops, parallel pair, isthmus with loop, path
  EXPECT_EQ(two.size(), 6u);
  auto three = connected_multigraphs(3);
  for (std::size_t i = 0; i < three.size(); ++i) {
    EXPECT_TRUE(three[i].is_connected());
    for (std::size_t j = i + 1; j < three.size(); ++j) {
      bool iso = false;
      if (three[i].vertex_count() == three[j].vertex_count() && three[i].edge_count() == three[j].edge_count()) {
        // brute force over vertex bijections and edge matchings via sorted endpoint lists
        std::vector<VertexId> perm(three[i].vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        auto sorted_edges = [](const Graph& g, const std::vector<VertexId>& p) {
          std::vector<std::pair<VertexId, VertexId>> es;
          for (EdgeId e : g.edges())
            es.emplace_back(std::min(p[g.edge(e).a], p[g.edge(e).b]), std::max(p[g.edge(e).a], p[g.edge(e).b]));
          std::sort(es.begin(), es.end());
          return es;
        };
        std::vector<VertexId> id(perm);
        auto target = sorted_edges(three[j], id);
        do {
          iso = iso || sorted_edges(three[i], perm) == target;
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      EXPECT_FALSE(iso) << i << " " << j;
    }
  }
}
