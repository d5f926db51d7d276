#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <omp.h>

#include "apexkit/verify.hpp"

using namespace apexkit;

namespace {

VerifyOptions only(std::initializer_list<const char*> groups) {
  VerifyOptions o;
  for (const char* g : groups) o.groups.insert(g);
  return o;
}

const Claim& find(const VerificationReport& r, const std::string& id) {
  for (const Claim& c : r.claims) {
    if (c.id == id) return c;
  }
  throw std::runtime_error("no claim " + id);
}

}  // namespace

TEST(Verify, FamiliesPass) {
  const VerificationReport r = run_verification(only({"families"}));
  EXPECT_EQ(r.overall, "pass");
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(j["summary"]["witnesses"], 0);
  EXPECT_NO_THROW(validate_report(j));
}

TEST(Verify, InjectedFaultFails) {
  VerifyOptions o = only({"families"});
  o.expected_overrides["families.ks_count"] = 15;
  const VerificationReport r = run_verification(o);
  EXPECT_EQ(r.overall, "fail");
  const Claim& c = find(r, "families.ks_count");
  EXPECT_EQ(c.status, ClaimStatus::Fail);
  EXPECT_EQ(c.observed, 14);
  EXPECT_EQ(c.expected, 15);
}

TEST(Verify, BudgetOverrunIsIncomplete) {
  VerifyOptions o = only({"order12"});
  o.budget.max_classes = 5;
  const VerificationReport r = run_verification(o);
  EXPECT_EQ(r.overall, "incomplete");
  for (const Claim& c : r.claims) EXPECT_EQ(c.status, ClaimStatus::SkippedBudget) << c.id;
  EXPECT_EQ(to_json(r)["claims"][0]["status"], "skipped(budget)");
}

TEST(Verify, UnknownGroup) {
  EXPECT_THROW(run_verification(only({"nope"})), std::invalid_argument);
}

TEST(Verify, SchemaRejectsUntaggedExpectation) {
  nlohmann::json j = to_json(run_verification(only({"families"})));
  EXPECT_NO_THROW(validate_report(j));
  nlohmann::json untagged = j;
  untagged["claims"][0]["expected"] = 14;
  EXPECT_THROW(validate_report(untagged), ReportSchemaError);
  nlohmann::json bad_tag = j;
  bad_tag["claims"][0]["expected"]["provenance"] = "guess";
  EXPECT_THROW(validate_report(bad_tag), ReportSchemaError);
  nlohmann::json missing = j;
  missing.erase("overall");
  EXPECT_THROW(validate_report(missing), ReportSchemaError);
}

TEST(Verify, TimingsOnlyOnRequest) {
  const VerificationReport r = run_verification(only({"families"}));
  EXPECT_FALSE(to_json(r)["claims"][0].contains("seconds"));
  EXPECT_TRUE(to_json(r, true)["claims"][0].contains("seconds"));
}

TEST(Verify, ThreadCountDoesNotChangeReport) {
  VerifyOptions o = only({"order14", "lemmas"});
  o.threads = 1;
  const std::string one = to_json(run_verification(o)).dump();
  o.threads = 3;
  const std::string three = to_json(run_verification(o)).dump();
  EXPECT_EQ(one, three);
}

TEST(Verify, IngestedCorpusGivesSameOutcomes) {
  EnumSpec spec = EnumSpec::exact(14, 21);
  spec.min_degree = spec.max_degree = 3;
  spec.connected = true;
  const auto path = std::filesystem::temp_directory_path() / "apexkit-order14.g6";
  {
    std::ofstream out(path);
    out << "# connected cubic order 14\n";
    write_graph6_stream(out, enumerate(spec).classes);
  }
  VerifyOptions o = only({"order14"});
  const VerificationReport enumerated = run_verification(o);
  o.ingest["order14"] = path;
  const VerificationReport ingested = run_verification(o);
  std::filesystem::remove(path);
  ASSERT_EQ(enumerated.claims.size(), ingested.claims.size());
  for (std::size_t i = 0; i < enumerated.claims.size(); ++i) {
    EXPECT_EQ(enumerated.claims[i].status, ingested.claims[i].status) << enumerated.claims[i].id;
    EXPECT_EQ(enumerated.claims[i].observed, ingested.claims[i].observed) << enumerated.claims[i].id;
  }
  EXPECT_EQ(to_json(ingested)["corpus_sources"]["order14"]["source"], "ingested");
}

TEST(TreeComponents, DetectsSmallTrees) {
  // K3,3 plus a K2 joined completely to two extra vertices a, b.
  Graph g = complete_bipartite(3, 3);
  const Vertex a = g.add_vertex();
  const Vertex b = g.add_vertex();
  const Vertex x = g.add_vertex();
  const Vertex y = g.add_vertex();
  g.add_edge(x, y);
  for (Vertex t : {x, y}) {
    g.add_edge(a, t);
    g.add_edge(b, t);
  }
  g.add_edge(a, 0);
  g.add_edge(b, 3);
  EXPECT_TRUE(has_small_tree_component(g));
  EXPECT_FALSE(has_small_tree_component(complete_graph(7)));
}

TEST(Verify, SummaryText) {
  const std::string s = summary_text(run_verification(only({"families"})));
  EXPECT_NE(s.find("PASS  families.ks_count"), std::string::npos);
  EXPECT_NE(s.find("overall: pass"), std::string::npos);
}
