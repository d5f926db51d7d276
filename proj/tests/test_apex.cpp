#include <gtest/gtest.h>

#include "apexkit/apex.hpp"
#include "apexkit/moves.hpp"
#include "apexkit/planarity.hpp"
#include "oracles.hpp"

using namespace apexkit;

namespace {

// Every deletion set of size <= n, planarity by the minor oracle.
bool subset_oracle(const Graph& g, int n) {
  for (VertexMask s = 0; s <= low_mask(g.order()); ++s) {
    if (popcount(s) > n) continue;
    if (minor_free_check(delete_vertices(g, s).graph)) return true;
  }
  return false;
}

}  // namespace

TEST(Apex, CompleteGraphs) {
  EXPECT_FALSE(is_n_apex(complete_graph(7), 2).is_n_apex);
  const ApexVerdict v = is_n_apex(complete_graph(7), 3);
  EXPECT_TRUE(v.is_n_apex);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(is_n_apex(complete_graph(5), 1).is_n_apex);
  EXPECT_TRUE(is_n_apex(complete_graph(4), 0).is_n_apex);
  EXPECT_THROW(is_n_apex(complete_graph(4), 5), std::invalid_argument);
  EXPECT_THROW(is_n_apex(complete_graph(4), -1), std::invalid_argument);
}

TEST(Apex, WitnessPlanarizes) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_graph(rng, 9, 0.6);
    const ApexVerdict v = is_n_apex(g, 2);
    if (!v.is_n_apex) continue;
    EXPECT_TRUE(is_planar(delete_vertices(g, to_mask(*v.witness)).graph));
  }
}

TEST(Apex, AgreesWithSubsetOracle) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph(rng, 8 + static_cast<int>(rng() % 3), 0.65);
    for (int n : {1, 2}) EXPECT_EQ(is_n_apex(g, n).is_n_apex, subset_oracle(g, n)) << to_graph6(g);
  }
}

TEST(Apex, N2AOnSmallGraphs) {
  EXPECT_FALSE(is_n2a(Graph(1)));
  EXPECT_FALSE(is_n2a(complete_graph(6)));
  EXPECT_TRUE(is_n2a(complete_graph(7)));
  EXPECT_TRUE(is_n2a(*named_graph("C14")));
  EXPECT_TRUE(is_n2a(*named_graph("H12")));
}

TEST(Apex, OneStepMinors) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(one_step_minors(k4).size(), 6U + 6U + 4U);
  EXPECT_EQ(one_step_minors(Graph(2)).size(), 2U);
}

TEST(Apex, MinorMinimality) {
  EXPECT_TRUE(is_mm_n2a(complete_graph(7)));
  Graph k7_plus = complete_graph(7);
  k7_plus.add_vertex();
  k7_plus.add_edge(7, 0);
  EXPECT_FALSE(is_mm_n2a(k7_plus));
  EXPECT_FALSE(is_mm_n2a(complete_graph(8)));
}
