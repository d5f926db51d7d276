#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "apexkit/enumerate.hpp"

namespace apexkit {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

// Where an expected value comes from: a count or statement printed in the
// source publication, a value produced by an independent computation, or a
// fact that follows from the definitions.
enum class Provenance { Published, Computed, Definitional };
enum class ClaimStatus { Pass, Fail, SkippedBudget };

std::string to_string(Provenance p);
std::string to_string(ClaimStatus s);

struct Claim {
  std::string id;
  std::string anchor;     // the statement being checked, in neutral words
  std::string procedure;  // how the observed value is obtained
  nlohmann::json expected;
  Provenance provenance = Provenance::Published;
  nlohmann::json observed;
  ClaimStatus status = ClaimStatus::Fail;
  nlohmann::json details;               // supporting data, may be null
  std::vector<std::string> witnesses;   // graph6
  double seconds = 0.0;
};

enum class Tier { FamilyOnly, Full };

struct VerifyOptions {
  std::set<std::string> groups;  // empty selects every group
  Tier tier = Tier::Full;
  Budget budget;                 // applied to each enumeration
  int threads = 0;               // 0 keeps the OpenMP default
  std::optional<std::filesystem::path> cache_dir;
  // Group name -> graph6 file used instead of enumerating (order14 only).
  std::map<std::string, std::filesystem::path> ingest;
  // Claim id -> replacement expected value, for fault-injection tests.
  std::map<std::string, nlohmann::json> expected_overrides;
  std::uint64_t random_seed = 20240101;
  int random_graphs = 10000;
};

const std::vector<std::string>& claim_groups();

struct VerificationReport {
  std::vector<Claim> claims;
  nlohmann::json corpus_sources = nlohmann::json::object();
  std::string overall;  // "pass", "fail" or "incomplete"
};

VerificationReport run_verification(const VerifyOptions& options);

// Deterministic JSON; per-claim runtimes are included only when requested.
nlohmann::json to_json(const VerificationReport& report, bool timings = false);
std::string summary_text(const VerificationReport& report);

struct ReportSchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Throws ReportSchemaError on missing fields or untagged expectations.
void validate_report(const nlohmann::json& report);

// Lemma checks shared with the tests.
// Tree components T of G - a,b with |T| <= 3 or a degree-2 vertex adjacent
// to a leaf; returns true if some pair (a, b) produces one.
bool has_small_tree_component(const Graph& g);

}  // namespace apexkit
