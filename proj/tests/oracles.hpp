#pragma once

// Brute-force reference implementations used to check the library. They only
// rely on Graph storage and the graph6 writer.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "apexkit/graph.hpp"

namespace oracle {

using apexkit::Graph;
using apexkit::Vertex;

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return apexkit::relabel(g, perm);
}

// Least graph6 string over all vertex orders.
inline std::string min_graph6(const Graph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    std::string s = apexkit::to_graph6(apexkit::relabel(g, perm));
    if (first || s < best) best = s;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (apexkit::relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every labeled graph on n vertices passing keep, reduced to isomorphism
// classes by min_graph6.
inline std::set<std::string> labeled_classes(int n, const std::function<bool(const Graph&)>& keep) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::set<std::string> seen;
  std::set<std::string> classes;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((m >> i) & 1U) g.add_edge(slots[i].first, slots[i].second);
    }
    if (!keep(g)) continue;
    if (!seen.insert(apexkit::to_graph6(g)).second) continue;
    classes.insert(min_graph6(g));
  }
  return classes;
}

// Minor test with branch set i of g mapped to vertex i of h. Each vertex of g
// joins one of the sets or none; set i is opened before set i+1, so every
// vertex partition is visited once.
inline bool has_labeled_minor(const Graph& g, const Graph& h) {
  const int n = g.order();
  const int k = h.order();
  std::vector<int> label(n, k);
  auto connected = [&](apexkit::VertexMask set) {
    if (set == 0) return false;
    apexkit::VertexMask seen = set & (~set + 1);
    apexkit::VertexMask frontier = seen;
    while (frontier) {
      apexkit::VertexMask next = 0;
      apexkit::for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v) & set; });
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == set;
  };
  auto check = [&] {
    std::vector<apexkit::VertexMask> sets(k, 0);
    for (Vertex v = 0; v < n; ++v) {
      if (label[v] < k) sets[label[v]] |= apexkit::bit(v);
    }
    for (int i = 0; i < k; ++i) {
      if (!connected(sets[i])) return false;
    }
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (!h.has_edge(i, j)) continue;
        bool joined = false;
        apexkit::for_each_vertex(sets[i], [&](Vertex v) { joined |= (g.neighbors(v) & sets[j]) != 0; });
        if (!joined) return false;
      }
    }
    return true;
  };
  std::function<bool(int, int)> assign = [&](int v, int opened) {
    if (v == n) return opened == k && check();
    for (int c = 0; c <= std::min(opened, k - 1); ++c) {
      label[v] = c;
      if (assign(v + 1, std::max(opened, c + 1))) return true;
    }
    label[v] = k;
    return assign(v + 1, opened);
  };
  return assign(0, 0);
}

// Tries every distinct labeling of h, since the opening order ties set i to
// vertex i.
inline bool has_minor(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return false;
  std::vector<Vertex> perm(h.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::string> tried;
  do {
    const Graph hp = apexkit::relabel(h, perm);
    if (tried.insert(apexkit::to_graph6(hp)).second && has_labeled_minor(g, hp)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Wagner: planar iff no K5 and no K3,3 minor.
inline bool planar(const Graph& g) {
  return !has_minor(g, apexkit::complete_graph(5)) && !has_minor(g, apexkit::complete_bipartite(3, 3));
}

}  // namespace oracle
