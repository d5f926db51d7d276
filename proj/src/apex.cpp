#include "apexkit/apex.hpp"

#include <stdexcept>

#include "apexkit/planarity.hpp"
#include "rows.hpp"

namespace apexkit {
namespace {

// Visits the size-k subsets of {0..n-1} in lexicographic order until f
// returns true.
template <typename F>
bool for_each_subset(int n, int k, F&& f) {
  std::vector<Vertex> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    VertexMask mask = 0;
    for (Vertex v : pick) mask |= bit(v);
    if (f(mask)) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

ApexVerdict is_n_apex(const Graph& g, int n) {
  if (n < 0 || n > g.order()) throw std::invalid_argument("apex count out of range");
  ApexVerdict verdict;
  for (int k = 0; k <= n && !verdict.is_n_apex; ++k) {
    for_each_subset(g.order(), k, [&](VertexMask removed) {
      ++verdict.checked_subsets;
      if (!is_planar(delete_vertices(g, removed).graph)) return false;
      verdict.is_n_apex = true;
      verdict.witness = to_vector(removed);
      return true;
    });
  }
  return verdict;
}

bool is_n2a(const Graph& g) { return g.order() >= 2 && !is_n_apex(g, 2).is_n_apex; }

std::vector<Graph> one_step_minors(const Graph& g) {
  std::vector<Graph> out;
  const auto edges = g.edges();
  for (const Edge& e : edges) {
    Graph h = g;
    h.remove_edge(e.u, e.v);
    out.push_back(std::move(h));
  }
  for (const Edge& e : edges) out.push_back(contract_edge(g, e.u, e.v));
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(delete_vertices(g, bit(v)).graph);
  return out;
}

bool is_mm_n2a(const Graph& g) {
  if (!is_n2a(g)) return false;
  for (const Graph& m : one_step_minors(g)) {
    if (m.order() >= 2 && !is_n_apex(m, 2).is_n_apex) return false;
  }
  return true;
}

}  // namespace apexkit
