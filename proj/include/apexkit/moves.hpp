#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "apexkit/canon.hpp"
#include "apexkit/graph.hpp"

namespace apexkit {

enum class MoveKind { NablaY, YNabla };

struct Move {
  MoveKind kind = MoveKind::NablaY;
  std::array<Vertex, 3> triangle{};  // NablaY
  Vertex center = -1;                // YNabla
};

struct MoveError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The new vertex gets index g.order().
Graph nabla_y(const Graph& g, std::array<Vertex, 3> triangle);
Graph y_nabla(const Graph& g, Vertex center);
Graph apply(const Graph& g, const Move& move);

// Every legal move on g: triangles in lexicographic order, then degree-3
// vertices in increasing order, filtered by the allowed kinds.
std::vector<Move> legal_moves(const Graph& g, bool nabla_y_allowed, bool y_nabla_allowed);

struct AllowedMoves {
  bool nabla_y = true;
  bool y_nabla = true;
};

struct ClosureLimits {
  int max_order = 32;
  int max_size = 496;
  std::size_t max_classes = 100000;
};

struct ClosureCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MoveEdge {
  CanonicalKey from;
  CanonicalKey to;
  MoveKind kind = MoveKind::NablaY;
  friend auto operator<=>(const MoveEdge&, const MoveEdge&) = default;
};

struct ClosureFamily {
  IsoSet<> classes;
  // Classes sorted by (order, key); the index in this list is the class id.
  std::vector<CanonicalKey> ordered;
  std::vector<MoveEdge> move_edges;  // sorted, deduplicated
  std::vector<CanonicalKey> seeds;

  int index_of(const CanonicalKey& key) const;  // -1 if absent
};

// Breadth-first search over isomorphism classes. Throws ClosureCapError when
// a class exceeds the limits.
ClosureFamily closure(const std::vector<Graph>& seeds, AllowedMoves allowed, ClosureLimits limits = {});

nlohmann::json to_json(const ClosureFamily& family, const std::map<CanonicalKey, std::string>& names = {});

// The K7 closures under both moves and under nabla-Y only (cap 14).
const ClosureFamily& heawood_family();
const ClosureFamily& ks_family();

// Named members of the Heawood family: K7, H8, H12, C12, C13, C14 where the
// name is determined uniquely, plus HF01..HF20 for every class in canonical
// order.
const std::map<std::string, Graph>& family_aliases();
std::map<CanonicalKey, std::string> family_names();

// Family aliases first, then generic names: K<n>, K<a>,<b>, cycle<n>, P<n>,
// star<n>, Q3, Petersen.
std::optional<Graph> named_graph(const std::string& name);

}  // namespace apexkit
