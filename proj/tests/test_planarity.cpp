#include <gtest/gtest.h>

#include "apexkit/planarity.hpp"
#include "oracles.hpp"

using namespace apexkit;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace

TEST(Planarity, SmallKnownGraphs) {
  EXPECT_TRUE(is_planar(complete_graph(4)));
  EXPECT_FALSE(is_planar(complete_graph(5)));
  EXPECT_FALSE(is_planar(complete_bipartite(3, 3)));
  EXPECT_TRUE(is_planar(complete_bipartite(2, 8)));
  EXPECT_TRUE(is_planar(cube_graph()));
  EXPECT_FALSE(is_planar(petersen()));
  EXPECT_TRUE(is_planar(Graph(0)));
}

TEST(Planarity, WitnessKinds) {
  auto v5 = planarity(complete_graph(5));
  ASSERT_TRUE(v5.witness);
  EXPECT_EQ(v5.witness->kind, KuratowskiKind::K5);
  auto v33 = planarity(complete_bipartite(3, 3));
  ASSERT_TRUE(v33.witness);
  EXPECT_EQ(v33.witness->kind, KuratowskiKind::K33);
  EXPECT_TRUE(validate_witness(complete_bipartite(3, 3), *v33.witness));
  auto vp = planarity(petersen());
  ASSERT_TRUE(vp.witness);
  EXPECT_TRUE(validate_witness(petersen(), *vp.witness));
  EXPECT_FALSE(planarity(complete_graph(5), false).witness);
}

TEST(Planarity, ValidateWitnessRejectsForgery) {
  const Graph k5 = complete_graph(5);
  KuratowskiWitness w = *planarity(k5).witness;
  w.paths.pop_back();
  EXPECT_FALSE(validate_witness(k5, w));
  KuratowskiWitness wrong = *planarity(k5).witness;
  EXPECT_FALSE(validate_witness(complete_graph(4), wrong));
}

TEST(Planarity, AgreesWithBranchSetOracle) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 120; ++i) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const Graph g = oracle::random_graph(rng, n, 0.55);
    EXPECT_EQ(is_planar(g), oracle::planar(g)) << to_graph6(g);
  }
}

TEST(Planarity, AgreesWithMinorCheckOnLargerGraphs) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 400; ++i) {
    const int n = 8 + static_cast<int>(rng() % 3);
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.3 * (i % 5) / 4.0);
    const PlanarityVerdict v = planarity(g);
    EXPECT_EQ(v.planar, minor_free_check(g)) << to_graph6(g);
    if (!v.planar) {
      EXPECT_TRUE(v.witness && validate_witness(g, *v.witness)) << to_graph6(g);
    }
  }
}

TEST(Planarity, LargeSparseAndDense) {
  EXPECT_TRUE(is_planar(cycle_graph(32)));
  Graph wheel(32);
  for (int i = 1; i < 32; ++i) {
    wheel.add_edge(0, i);
    wheel.add_edge(i, i == 31 ? 1 : i + 1);
  }
  EXPECT_TRUE(is_planar(wheel));
  wheel.add_edge(1, 16);
  wheel.add_edge(8, 24);
  EXPECT_FALSE(is_planar(wheel));
}

TEST(Planarity, MinorCheckOrderLimit) {
  EXPECT_THROW(minor_free_check(cycle_graph(11)), std::domain_error);
}
