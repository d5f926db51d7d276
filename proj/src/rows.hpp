#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "apexkit/graph.hpp"

namespace apexkit::detail {

using Rows = std::array<VertexMask, kMaxOrder>;

inline Rows rows_of(const Graph& g) {
  Rows adj{};
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

inline int edge_count(const Rows& adj, VertexMask alive) {
  int twice = 0;
  for_each_vertex(alive, [&](Vertex v) { twice += popcount(adj[v] & alive); });
  return twice / 2;
}

// Removes degree <= 1 vertices and suppresses degree-2 vertices (dropping a
// resulting parallel edge) until every survivor has degree >= 3. Preserves
// planarity and every minor of minimum degree >= 3.
inline VertexMask reduce(Rows& adj, VertexMask alive) {
  bool changed = true;
  while (changed) {
    changed = false;
    VertexMask scan = alive;
    while (scan != 0) {
      const Vertex v = lowest(scan);
      scan &= scan - 1;
      const int d = popcount(adj[v]);
      if (d >= 3) continue;
      if (d == 2) {
        const Vertex a = lowest(adj[v]);
        const Vertex c = lowest(adj[v] & (adj[v] - 1));
        adj[a] = (adj[a] & ~bit(v)) | bit(c);
        adj[c] = (adj[c] & ~bit(v)) | bit(a);
      } else {
        for_each_vertex(adj[v], [&](Vertex w) { adj[w] &= ~bit(v); });
      }
      adj[v] = 0;
      alive &= ~bit(v);
      changed = true;
    }
  }
  return alive;
}

inline Graph compact(const Rows& adj, VertexMask alive) {
  std::array<Vertex, kMaxOrder> index{};
  int n = 0;
  for_each_vertex(alive, [&](Vertex v) { index[v] = n++; });
  Graph g(n);
  for_each_vertex(alive, [&](Vertex v) {
    for_each_vertex(adj[v] & alive & ~low_mask(v + 1), [&](Vertex w) { g.add_edge(index[v], index[w]); });
  });
  return g;
}

// Vertex sets of the biconnected blocks (Tarjan, edge stack). Isolated
// vertices produce no block.
class BlockFinder {
 public:
  BlockFinder(const Rows& adj, VertexMask alive) : adj_(adj), alive_(alive) {
    for_each_vertex(alive, [&](Vertex v) {
      if (disc_[v] == 0) dfs(v, -1);
    });
  }
  const std::vector<VertexMask>& blocks() const { return blocks_; }

 private:
  void dfs(Vertex v, Vertex parent) {
    disc_[v] = low_[v] = ++time_;
    for_each_vertex(adj_[v] & alive_, [&](Vertex w) {
      if (w == parent) return;
      if (disc_[w] == 0) {
        stack_.push_back({v, w});
        dfs(w, v);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) {
          VertexMask block = 0;
          while (true) {
            const Edge e = stack_.back();
            stack_.pop_back();
            block |= bit(e.u) | bit(e.v);
            if (e.u == v && e.v == w) break;
          }
          blocks_.push_back(block);
        }
      } else if (disc_[w] < disc_[v]) {
        stack_.push_back({v, w});
        low_[v] = std::min(low_[v], disc_[w]);
      }
    });
  }

  const Rows& adj_;
  VertexMask alive_;
  std::array<int, kMaxOrder> disc_{};
  std::array<int, kMaxOrder> low_{};
  int time_ = 0;
  std::vector<Edge> stack_;
  std::vector<VertexMask> blocks_;
};

}  // namespace apexkit::detail
