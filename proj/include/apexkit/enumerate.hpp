#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "apexkit/canon.hpp"
#include "apexkit/graph.hpp"

namespace apexkit {

constexpr int kMaxEnumOrder = 16;

struct EnumSpec {
  int order = 0;
  int min_size = 0;
  int max_size = -1;  // -1: no upper bound
  int min_degree = 0;
  int max_degree = -1;  // -1: order - 1
  bool triangle_free = false;
  bool connected = false;
  std::optional<DegreeSequence> degree_sequence;

  static EnumSpec exact(int order, int size) {
    EnumSpec s;
    s.order = order;
    s.min_size = s.max_size = size;
    return s;
  }

  nlohmann::json to_json() const;
  static EnumSpec from_json(const nlohmann::json& j);
  // Hex FNV-1a of the JSON form; names cache files.
  std::string hash() const;
  bool operator==(const EnumSpec&) const = default;
};

enum class EnumStrategy {
  MinDegree,         // parent = delete a minimum-degree vertex
  ConnectedNonCut,   // parent = delete a non-cut vertex; requires connected
};

struct Budget {
  double seconds = 3600.0;
  std::uint64_t max_classes = 20'000'000;
};

enum class EnumStatus { Complete, TimeBudgetExceeded, ClassBudgetExceeded };
std::string to_string(EnumStatus status);

struct EnumClass {
  CanonicalKey key;
  Graph graph;  // canonical form
};

struct EnumOptions {
  EnumStrategy strategy = EnumStrategy::MinDegree;
  bool parallel = true;
  Budget budget;
};

struct EnumResult {
  std::vector<EnumClass> classes;  // sorted by key; partial unless Complete
  EnumStatus status = EnumStatus::Complete;
  std::uint64_t nodes = 0;  // search-tree nodes visited
  bool from_cache = false;

  bool complete() const { return status == EnumStatus::Complete; }
};

// One class per isomorphism type satisfying the spec. Throws
// std::invalid_argument for orders outside [0, kMaxEnumOrder] or for the
// connected strategy without the connected constraint.
EnumResult enumerate(const EnumSpec& spec, const EnumOptions& options = {});

// As enumerate, reading and writing complete results under cache_dir.
EnumResult enumerate_cached(const EnumSpec& spec, const EnumOptions& options,
                            const std::filesystem::path& cache_dir);

struct Graph6Record {
  Graph graph;
  int line = 0;
};

struct Graph6StreamError : std::runtime_error {
  Graph6StreamError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

// One graph6 record per line; blank lines and lines starting with '#' are
// skipped. Malformed lines throw, or are collected in `errors` when
// skip_malformed is set.
std::vector<Graph6Record> read_graph6_stream(std::istream& in, bool skip_malformed = false,
                                             std::vector<std::string>* errors = nullptr);
void write_graph6_stream(std::ostream& out, const std::vector<EnumClass>& classes);

struct ClassProperties {
  bool planar = true;
  bool triangle_free = true;
  bool connected = true;
  int min_degree = 0;
  int max_degree = 0;
  int isolated = 0;
};

struct CatalogFilter {
  std::optional<bool> planar;
  std::optional<int> min_degree;
  std::optional<int> max_degree;
  std::optional<bool> triangle_free;
  std::optional<bool> connected;
  std::optional<int> min_isolated;
};

ClassProperties class_properties(const Graph& g);
IsoSet<ClassProperties> filter_catalog(const std::vector<Graph>& graphs, const CatalogFilter& filter);

}  // namespace apexkit
