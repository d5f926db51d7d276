#include <gtest/gtest.h>

#include <omp.h>

#include "apexkit/moves.hpp"
#include "oracles.hpp"

using namespace apexkit;

TEST(Moves, NablaYAndBack) {
  const Graph k4 = complete_graph(4);
  const Graph y = nabla_y(k4, {0, 1, 2});
  EXPECT_EQ(y.order(), 5);
  EXPECT_EQ(y.size(), 6);
  EXPECT_EQ(y.degree(4), 3);
  EXPECT_EQ(y_nabla(y, 4), k4);
}

TEST(Moves, YNablaReducesSizeWhenNeighboursAdjacent) {
  const Graph k4 = complete_graph(4);
  const Graph k3 = y_nabla(k4, 0);
  EXPECT_EQ(k3.order(), 3);
  EXPECT_EQ(k3.size(), 3);
}

TEST(Moves, Errors) {
  EXPECT_THROW(nabla_y(cycle_graph(4), {0, 1, 2}), MoveError);
  EXPECT_THROW(nabla_y(complete_graph(3), {0, 1, 1}), MoveError);
  EXPECT_THROW(y_nabla(cycle_graph(4), 0), MoveError);
  EXPECT_THROW(y_nabla(complete_graph(4), 7), MoveError);
}

TEST(Moves, LegalMovesOnK4) {
  const auto moves = legal_moves(complete_graph(4), true, true);
  EXPECT_EQ(moves.size(), 8U);
  EXPECT_EQ(legal_moves(complete_graph(4), true, false).size(), 4U);
  EXPECT_EQ(legal_moves(complete_graph(4), false, true).size(), 4U);
}

TEST(Closure, FamilyCounts) {
  EXPECT_EQ(ks_family().classes.size(), 14U);
  EXPECT_EQ(heawood_family().classes.size(), 20U);
  int triangle_free = 0;
  for (const auto& [key, entry] : heawood_family().classes) {
    EXPECT_EQ(entry.representative.size(), 21);
    triangle_free += is_triangle_free(entry.representative);
  }
  EXPECT_EQ(triangle_free, 2);
}

TEST(Closure, K4UnderBothMoves) {
  // nabla-Y turns K4 into K2,3; Y-nabla turns K4 into K3, whose nabla-Y image
  // is K1,3.
  const ClosureFamily f = closure({complete_graph(4)}, {true, true});
  EXPECT_EQ(f.classes.size(), 4U);
  EXPECT_TRUE(f.classes.contains(complete_graph(3)));
  EXPECT_TRUE(f.classes.contains(complete_bipartite(2, 3)));
}

TEST(Closure, CapError) {
  EXPECT_THROW(closure({complete_graph(7)}, {true, true}, {12, 21, 1000}), ClosureCapError);
  EXPECT_THROW(closure({}, {true, true}), std::invalid_argument);
}

TEST(Closure, ThreadCountDoesNotChangeExport) {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const std::string one = to_json(closure({complete_graph(7)}, {true, true}, {14, 21, 1000})).dump();
  omp_set_num_threads(4);
  const std::string four = to_json(closure({complete_graph(7)}, {true, true}, {14, 21, 1000})).dump();
  omp_set_num_threads(saved);
  EXPECT_EQ(one, four);
}

TEST(Closure, MoveEdgesConnectFamily) {
  const ClosureFamily& f = heawood_family();
  for (const MoveEdge& e : f.move_edges) {
    EXPECT_GE(f.index_of(e.from), 0);
    EXPECT_GE(f.index_of(e.to), 0);
  }
  EXPECT_EQ(f.index_of(canonical_key(complete_graph(7))), 0);
}

TEST(Names, Aliases) {
  const auto& aliases = family_aliases();
  for (const char* name : {"K7", "H8", "H12", "C12", "C13", "C14"}) {
    ASSERT_TRUE(aliases.contains(name)) << name;
  }
  EXPECT_EQ(aliases.at("K7"), canonical_form(complete_graph(7)).graph);
  EXPECT_EQ(aliases.at("H12").order(), 12);
  EXPECT_TRUE(is_triangle_free(aliases.at("H12")));
  EXPECT_EQ(aliases.at("C14").order(), 14);
  EXPECT_EQ(degree_sequence(aliases.at("C14")).to_string(), "(3^14)");
  EXPECT_TRUE(ks_family().classes.contains(aliases.at("C12")));
  EXPECT_TRUE(aliases.contains("HF20"));
  EXPECT_EQ(family_names().size(), 20U);
}

TEST(Names, GenericGraphs) {
  EXPECT_EQ(named_graph("K3,3")->size(), 9);
  EXPECT_EQ(named_graph("K5")->size(), 10);
  EXPECT_EQ(named_graph("cycle6")->size(), 6);
  EXPECT_EQ(named_graph("P4")->size(), 3);
  EXPECT_EQ(named_graph("star3")->order(), 4);
  EXPECT_EQ(named_graph("Petersen")->size(), 15);
  EXPECT_EQ(named_graph("Q3")->size(), 12);
  EXPECT_FALSE(named_graph("K99"));
  EXPECT_FALSE(named_graph("nonsense"));
}
