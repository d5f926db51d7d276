#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "apexkit/graph.hpp"

namespace apexkit {

struct ApexVerdict {
  bool is_n_apex = false;
  std::optional<std::vector<Vertex>> witness;
  std::uint64_t checked_subsets = 0;
};

// Tries deletion sets by size, then lexicographically, stopping at the first
// planarizing set. Without a witness every subset of size <= n was checked.
ApexVerdict is_n_apex(const Graph& g, int n);

bool is_n2a(const Graph& g);

// Single edge deletions, single edge contractions and single vertex
// deletions, in that order.
std::vector<Graph> one_step_minors(const Graph& g);

// N2A with every one-step minor 2-apex.
bool is_mm_n2a(const Graph& g);

}  // namespace apexkit
