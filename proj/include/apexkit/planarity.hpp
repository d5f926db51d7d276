#pragma once

#include <optional>
#include <vector>

#include "apexkit/graph.hpp"

namespace apexkit {

enum class KuratowskiKind { K5, K33 };

// Subdivision of K5 or K3,3 inside the tested graph. For K3,3 the first three
// branch vertices form one side of the bipartition.
struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::K33;
  std::vector<Vertex> branch_vertices;
  std::vector<std::vector<Vertex>> paths;  // one per underlying edge, endpoints included
};

struct PlanarityVerdict {
  bool planar = true;
  std::optional<KuratowskiWitness> witness;
};

// Exact planarity test: degree <= 2 reduction, then path addition on each
// biconnected block.
bool is_planar(const Graph& g);

// As is_planar, plus a Kuratowski subdivision for nonplanar inputs when
// requested.
PlanarityVerdict planarity(const Graph& g, bool want_witness = true);

// Checks that a witness is a subdivision of K5 / K3,3 contained in g.
bool validate_witness(const Graph& g, const KuratowskiWitness& witness);

// Independent oracle: true iff g has neither a K5 nor a K3,3 minor.
// Exponential; throws std::domain_error above order 10.
bool minor_free_check(const Graph& g);

}  // namespace apexkit
