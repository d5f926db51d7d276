#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "apexkit/canon.hpp"
#include "apexkit/graph.hpp"

namespace apexkit {

constexpr int kMaxMinorOrder = 16;

// Exact minor containment. Throws std::domain_error above kMaxMinorOrder.
bool has_k5_minor(const Graph& g);
bool has_k33_minor(const Graph& g);

// Deletion/contraction search only, no planarity shortcut. Used as the
// independent planarity oracle.
bool has_k5_minor_exhaustive(const Graph& g);
bool has_k33_minor_exhaustive(const Graph& g);

struct SimplificationStep {
  enum class Kind { D0, D1, D2, CollapseParallel };
  Kind kind = Kind::D0;
  Vertex v = -1;  // removed vertex; for CollapseParallel the edge is (a, c)
  Vertex a = -1;  // D2: edge a-v becomes a-c
  Vertex c = -1;

  friend bool operator==(const SimplificationStep&, const SimplificationStep&) = default;
};

// Vertex numbers in steps refer to the input graph. The final graph keeps the
// survivors in increasing input order.
struct SimplificationTrace {
  std::vector<SimplificationStep> steps;
  std::vector<Vertex> survivors;
  Graph final_graph;
};

// Repeated D0/D1/D2 reduction, lowest-index eligible vertex first.
SimplificationTrace simplify(const Graph& g);

// Applies the steps of a trace to g and returns the resulting graph.
Graph replay(const Graph& g, const SimplificationTrace& trace);

struct RelativeSimplification {
  Graph graph;
  Vertex a = -1;  // position of the kept vertex in graph
  std::vector<Vertex> survivors;
};

// D0/D1/D2 applied to every vertex except a.
RelativeSimplification simplify_relative(const Graph& g, Vertex a);

struct SplitK33Certificate {
  std::array<Vertex, 3> v{};  // side containing the lowest-index original vertex
  std::array<Vertex, 3> w{};
  // paths[3 * i + j] realizes v[i]-w[j], endpoints included.
  std::array<std::vector<Vertex>, 9> paths;
  VertexMask core = 0;  // vertices on the subdivided K3,3; the rest lie on trees

  VertexMask originals() const;
};

std::optional<SplitK33Certificate> is_split_k33(const Graph& g);
bool validate_certificate(const Graph& g, const SplitK33Certificate& cert);
nlohmann::json to_json(const SplitK33Certificate& cert);

struct NearestPart {
  bool is_vertex = true;
  Vertex v = -1;
  Vertex w = -1;  // set for edge parts

  static NearestPart vertex(Vertex x) { return {true, x, -1}; }
  static NearestPart edge(Vertex x, Vertex y) { return {false, x, y}; }
  friend bool operator==(const NearestPart&, const NearestPart&) = default;
};

struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

NearestPart nearest_part(const SplitK33Certificate& cert, const Graph& g, Vertex a);

// True iff some path from a to v avoids every original vertex other than v.
bool has_clean_path(const Graph& g, Vertex a, Vertex v, VertexMask originals);

struct ExtensionClass {
  enum class Kind { OneApex, Deg3Canonical, Deg4Canonical };
  Kind kind = Kind::OneApex;
  int index = 0;  // 1-based form index for Deg4Canonical

  friend bool operator==(const ExtensionClass&, const ExtensionClass&) = default;
  std::string to_string() const;
};

struct ExtensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Irreducible shapes of a split K3,3 plus one vertex that are not 1-apex.
// Built by attaching a new vertex to K3,3 parts (subdividing edges as needed)
// and keeping the non-1-apex results; deg4 is sorted by canonical key.
struct ExtensionForms {
  std::vector<Graph> deg3;
  std::vector<Graph> deg4;
};
const ExtensionForms& extension_forms();

// Requires g - a to be a split K3,3 and deg(a) in {3, 4}. Throws
// ExtensionError when the simplified graph matches no form.
ExtensionClass classify_extension(const Graph& g, Vertex a);

// Split oracle: all classes reachable from K3,3 by at most `splits` vertex
// splits (including pendant splits), grouped by number of splits.
std::vector<IsoSet<>> split_k33_family(int splits);

// All graphs obtained from g by one vertex split.
std::vector<Graph> vertex_splits(const Graph& g);

}  // namespace apexkit
