#include <gtest/gtest.h>

#include "apexkit/graph.hpp"
#include "oracles.hpp"

using namespace apexkit;

TEST(Graph, BasicCounts) {
  const Graph k7 = complete_graph(7);
  EXPECT_EQ(k7.order(), 7);
  EXPECT_EQ(k7.size(), 21);
  EXPECT_EQ(euler_characteristic(k7), -14);
  EXPECT_EQ(euler_characteristic(complete_bipartite(3, 3)), -3);
  EXPECT_EQ(min_degree(star_graph(4)), 1);
  EXPECT_EQ(max_degree(star_graph(4)), 4);
  EXPECT_EQ(path_graph(5).size(), 4);
  EXPECT_EQ(cycle_graph(6).size(), 6);
  EXPECT_EQ(cube_graph().size(), 12);
}

TEST(Graph, FromEdgesRejectsBadInput) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), GraphError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph(33), GraphError);
}

TEST(Graph, Properties) {
  EXPECT_TRUE(is_triangle_free(complete_bipartite(3, 3)));
  EXPECT_FALSE(is_triangle_free(complete_graph(3)));
  EXPECT_TRUE(is_bipartite(cube_graph()));
  EXPECT_FALSE(is_bipartite(cycle_graph(5)));
  EXPECT_EQ(girth(cube_graph()), 4);
  EXPECT_EQ(girth(cycle_graph(7)), 7);
  EXPECT_EQ(girth(path_graph(4)), 0);
  EXPECT_TRUE(is_connected(path_graph(4)));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_EQ(popcount(isolated_vertices(Graph(3))), 3);
}

TEST(Graph, DeleteAndContract) {
  const Graph c5 = cycle_graph(5);
  const Deletion d = delete_vertices(c5, bit(0));
  EXPECT_EQ(d.graph.order(), 4);
  EXPECT_EQ(d.graph.size(), 3);
  EXPECT_EQ(d.old_to_new[0], -1);
  EXPECT_EQ(d.new_to_old[0], 1);

  const Graph c4 = contract_edge(c5, 0, 1);
  EXPECT_EQ(c4.order(), 4);
  EXPECT_EQ(c4.size(), 4);
  // Contracting a triangle edge drops the parallel edge.
  EXPECT_EQ(contract_edge(complete_graph(3), 0, 1).size(), 1);
  EXPECT_THROW(contract_edge(path_graph(3), 0, 2), GraphError);
}

TEST(Graph, Components) {
  Graph g = disjoint_union(complete_bipartite(3, 3), path_graph(2));
  g = disjoint_union(g, star_graph(3));
  g = disjoint_union(g, cycle_graph(4));
  const std::vector<Component> parts = components(g);
  ASSERT_EQ(parts.size(), 4U);
  EXPECT_EQ(parts[0].kind.shape, ComponentShape::Other);
  EXPECT_EQ(parts[1].kind.shape, ComponentShape::Tree);
  EXPECT_EQ(parts[1].kind.order, 2);
  EXPECT_TRUE(parts[2].kind.is_star);
  EXPECT_EQ(parts[3].kind.shape, ComponentShape::Cycle);

  // Path a-b-c-d: b has degree 2 and is adjacent to leaf a.
  EXPECT_TRUE(components(path_graph(4))[0].kind.has_deg2_adjacent_to_leaf);
  EXPECT_FALSE(components(star_graph(3))[0].kind.has_deg2_adjacent_to_leaf);
}

TEST(DegreeSequence, ParseAndPrint) {
  const DegreeSequence s = DegreeSequence::parse("(3^11,4,5)");
  EXPECT_EQ(s.to_string(), "(5,4,3^11)");
  EXPECT_EQ(s.sum(), 42);
  EXPECT_EQ(s.length(), 13);
  EXPECT_EQ(degree_sequence(complete_graph(7)).to_string(), "(6^7)");
  EXPECT_EQ(DegreeSequence::parse("(4^6,3^6)"), DegreeSequence::parse("(3^6,4^6)"));
  EXPECT_THROW(DegreeSequence::parse("(3^)"), std::invalid_argument);
  EXPECT_THROW(DegreeSequence::parse("3,3"), std::invalid_argument);
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  EXPECT_EQ(to_graph6(path_graph(2)), "A_");
  EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const int n = static_cast<int>(rng() % 33);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, Malformed) {
  EXPECT_THROW(parse_graph6(""), Graph6Error);
  EXPECT_THROW(parse_graph6("C"), Graph6Error);
  EXPECT_THROW(parse_graph6("C~~"), Graph6Error);
  EXPECT_THROW(parse_graph6("C\x7f"), Graph6Error);
}
