#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "apexkit/enumerate.hpp"
#include "apexkit/planarity.hpp"
#include "oracles.hpp"

using namespace apexkit;

namespace {

std::size_t count(const EnumSpec& spec, EnumStrategy strategy = EnumStrategy::MinDegree, bool parallel = true) {
  EnumOptions o;
  o.strategy = strategy;
  o.parallel = parallel;
  return enumerate(spec, o).classes.size();
}

EnumSpec cubic(int n, bool connected) {
  EnumSpec s = EnumSpec::exact(n, 3 * n / 2);
  s.min_degree = s.max_degree = 3;
  s.connected = connected;
  return s;
}

std::set<std::string> oracle_keys(const std::set<std::string>& min_forms) {
  std::set<std::string> keys;
  for (const std::string& s : min_forms) keys.insert(canonical_key(parse_graph6(s)).str());
  return keys;
}

std::set<std::string> enum_keys(const EnumSpec& spec) {
  std::set<std::string> keys;
  for (const EnumClass& c : enumerate(spec).classes) keys.insert(c.key.str());
  return keys;
}

}  // namespace

TEST(Enumerate, AllGraphsCensus) {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) {
    EnumSpec s;
    s.order = n;
    EXPECT_EQ(count(s), expected[n]) << n;
  }
}

TEST(Enumerate, ConnectedCensusBothStrategies) {
  const std::size_t expected[] = {1, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    EnumSpec s;
    s.order = n;
    s.connected = true;
    EXPECT_EQ(count(s), expected[n]) << n;
    EXPECT_EQ(count(s, EnumStrategy::ConnectedNonCut), expected[n]) << n;
  }
}

TEST(Enumerate, CubicCensus) {
  EXPECT_EQ(count(cubic(8, true)), 5U);
  EXPECT_EQ(count(cubic(10, true)), 19U);
  EXPECT_EQ(count(cubic(12, true)), 85U);
  EXPECT_EQ(count(cubic(10, true), EnumStrategy::ConnectedNonCut), 19U);
  EXPECT_EQ(count(cubic(8, false)), 6U);
}

TEST(Enumerate, MatchesLabeledSweepWithConstraints) {
  EnumSpec tf = EnumSpec::exact(6, 6);
  tf.triangle_free = true;
  EXPECT_EQ(enum_keys(tf), oracle_keys(oracle::labeled_classes(6, [](const Graph& g) {
              return g.size() == 6 && is_triangle_free(g);
            })));

  EnumSpec deg = EnumSpec::exact(6, 8);
  deg.min_degree = 2;
  deg.max_degree = 3;
  EXPECT_EQ(enum_keys(deg), oracle_keys(oracle::labeled_classes(6, [](const Graph& g) {
              return g.size() == 8 && min_degree(g) >= 2 && max_degree(g) <= 3;
            })));

  EnumSpec seq;
  seq.order = 6;
  seq.degree_sequence = DegreeSequence::parse("(3^2,2^4)");
  EXPECT_EQ(enum_keys(seq), oracle_keys(oracle::labeled_classes(6, [](const Graph& g) {
              return degree_sequence(g) == DegreeSequence::parse("(3^2,2^4)");
            })));
}

TEST(Enumerate, TriangleFreeSevenFiveWithIsolatedVertex) {
  const auto oracle_classes = oracle::labeled_classes(7, [](const Graph& g) {
    return g.size() == 5 && is_triangle_free(g) && max_degree(g) <= 4 && isolated_vertices(g) != 0;
  });
  EXPECT_EQ(oracle_classes.size(), 8U);
  EnumSpec s = EnumSpec::exact(7, 5);
  s.triangle_free = true;
  s.max_degree = 4;
  CatalogFilter f;
  f.min_isolated = 1;
  std::vector<Graph> graphs;
  for (const EnumClass& c : enumerate(s).classes) graphs.push_back(c.graph);
  EXPECT_EQ(filter_catalog(graphs, f).size(), oracle_classes.size());
}

TEST(Enumerate, SerialAndParallelAgree) {
  EnumSpec s = EnumSpec::exact(11, 21);
  s.min_degree = 3;
  s.triangle_free = true;
  EnumOptions serial;
  serial.parallel = false;
  const EnumResult a = enumerate(s, serial);
  const EnumResult b = enumerate(s);
  ASSERT_EQ(a.classes.size(), b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) EXPECT_EQ(a.classes[i].key, b.classes[i].key);
  EXPECT_EQ(a.classes.size(), 399U);
}

TEST(Enumerate, OutputIsSortedCanonical) {
  EnumSpec s = EnumSpec::exact(7, 9);
  const EnumResult r = enumerate(s);
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    EXPECT_EQ(to_graph6(r.classes[i].graph), r.classes[i].key.str());
    EXPECT_EQ(canonical_key(r.classes[i].graph), r.classes[i].key);
    if (i > 0) {
      EXPECT_LT(r.classes[i - 1].key, r.classes[i].key);
    }
  }
}

TEST(Enumerate, Budget) {
  EnumSpec s;
  s.order = 7;
  EnumOptions o;
  o.budget.max_classes = 10;
  const EnumResult r = enumerate(s, o);
  EXPECT_EQ(r.status, EnumStatus::ClassBudgetExceeded);
  EXPECT_FALSE(r.complete());
}

TEST(Enumerate, InvalidArguments) {
  EnumSpec big;
  big.order = 17;
  EXPECT_THROW(enumerate(big), std::invalid_argument);
  EnumSpec disconnected;
  disconnected.order = 5;
  EnumOptions o;
  o.strategy = EnumStrategy::ConnectedNonCut;
  EXPECT_THROW(enumerate(disconnected, o), std::invalid_argument);
}

TEST(EnumSpec, JsonRoundTripAndHash) {
  EnumSpec s = EnumSpec::exact(10, 21);
  s.min_degree = 3;
  s.triangle_free = true;
  s.degree_sequence = DegreeSequence::parse("(5^2,4^8)");
  EXPECT_EQ(EnumSpec::from_json(s.to_json()), s);
  EXPECT_EQ(s.hash(), EnumSpec::from_json(s.to_json()).hash());
  EXPECT_NE(s.hash(), EnumSpec::exact(10, 21).hash());
}

TEST(Enumerate, CacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "apexkit-cache-test";
  std::filesystem::remove_all(dir);
  EnumSpec s = EnumSpec::exact(7, 10);
  const EnumResult first = enumerate_cached(s, {}, dir);
  EXPECT_FALSE(first.from_cache);
  const EnumResult second = enumerate_cached(s, {}, dir);
  EXPECT_TRUE(second.from_cache);
  ASSERT_EQ(first.classes.size(), second.classes.size());
  for (std::size_t i = 0; i < first.classes.size(); ++i) EXPECT_EQ(first.classes[i].key, second.classes[i].key);
  std::filesystem::remove_all(dir);
}

TEST(Graph6Stream, ReadWrite) {
  std::istringstream in("# header\nC~\n\nA_\n");
  const auto records = read_graph6_stream(in);
  ASSERT_EQ(records.size(), 2U);
  EXPECT_EQ(records[0].line, 2);
  EXPECT_EQ(records[1].line, 4);

  std::istringstream bad("C~\nC\nA_\n");
  try {
    read_graph6_stream(bad);
    FAIL();
  } catch (const Graph6StreamError& e) {
    EXPECT_EQ(e.line, 2);
  }
  std::istringstream skip("C~\nC\nA_\n");
  std::vector<std::string> errors;
  EXPECT_EQ(read_graph6_stream(skip, true, &errors).size(), 2U);
  EXPECT_EQ(errors.size(), 1U);

  std::ostringstream out;
  write_graph6_stream(out, enumerate(EnumSpec::exact(4, 3)).classes);
  std::istringstream back(out.str());
  const auto written = read_graph6_stream(back);
  ASSERT_EQ(written.size(), 3U);
  for (const Graph6Record& r : written) EXPECT_EQ(r.graph.size(), 3);
}

TEST(Catalog, NonplanarCounts) {
  EnumSpec s = EnumSpec::exact(8, 11);
  s.min_degree = 1;
  std::vector<Graph> graphs;
  for (const EnumClass& c : enumerate(s).classes) graphs.push_back(c.graph);
  CatalogFilter np;
  np.planar = false;
  EXPECT_EQ(filter_catalog(graphs, np).size(), 11U);
  np.min_degree = 2;
  EXPECT_EQ(filter_catalog(graphs, np).size(), 3U);
  for (const auto& [key, entry] : filter_catalog(graphs, np)) EXPECT_FALSE(entry.payload.planar);
}
