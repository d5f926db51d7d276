#include <gtest/gtest.h>

#include "apexkit/canon.hpp"
#include "oracles.hpp"

using namespace apexkit;

TEST(Canon, InvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const Graph g = oracle::random_graph(rng, n, 0.35);
    const Graph h = oracle::shuffled(g, rng);
    EXPECT_EQ(canonical_key(g), canonical_key(h)) << to_graph6(g);
  }
}

TEST(Canon, LabelingMapsToCanonicalGraph) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(rng, 9, 0.4);
    const CanonicalForm f = canonical_form(g);
    std::vector<Vertex> perm(g.order());
    for (int pos = 0; pos < g.order(); ++pos) perm[f.labeling[pos]] = pos;
    EXPECT_EQ(relabel(g, perm), f.graph);
    EXPECT_EQ(to_graph6(f.graph), f.key.str());
  }
}

TEST(Canon, AgreesWithPermutationSearch) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 150; ++i) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const Graph a = oracle::random_graph(rng, n, 0.5);
    const Graph b = rng() % 2 ? oracle::shuffled(a, rng) : oracle::random_graph(rng, n, 0.5);
    EXPECT_EQ(are_isomorphic(a, b), oracle::isomorphic(a, b));
  }
}

TEST(Canon, ClassCountsMatchLabeledSweep) {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> keys;
    const auto classes = oracle::labeled_classes(n, [](const Graph&) { return true; });
    for (const std::string& s : classes) keys.insert(canonical_key(parse_graph6(s)).str());
    EXPECT_EQ(keys.size(), classes.size());
  }
}

TEST(Canon, RegularGraphsWithManyAutomorphisms) {
  EXPECT_TRUE(are_isomorphic(cube_graph(), complete_bipartite(4, 4)) == false);
  const Graph k44 = complete_bipartite(4, 4);
  std::mt19937_64 rng(14);
  EXPECT_EQ(canonical_key(k44), canonical_key(oracle::shuffled(k44, rng)));
  const Graph c12 = cycle_graph(12);
  const Graph two_c6 = disjoint_union(cycle_graph(6), cycle_graph(6));
  EXPECT_NE(canonical_key(c12), canonical_key(two_c6));
}

TEST(IsoSet, InsertAndMerge) {
  IsoSet<int> a;
  EXPECT_TRUE(a.insert(cycle_graph(4), 1));
  EXPECT_FALSE(a.insert(complete_bipartite(2, 2), 2));
  EXPECT_EQ(a.size(), 1U);
  EXPECT_EQ(a.find(canonical_key(cycle_graph(4)))->payload, 1);

  IsoSet<int> b;
  b.insert(complete_bipartite(2, 2), 5);
  b.insert(path_graph(4), 6);
  a.merge(b);
  EXPECT_EQ(a.size(), 2U);
  EXPECT_EQ(a.find(canonical_key(cycle_graph(4)))->payload, 1);
  EXPECT_TRUE(a.contains(path_graph(4)));
}
