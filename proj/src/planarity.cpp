#include "apexkit/planarity.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "apexkit/minors.hpp"
#include "rows.hpp"

namespace apexkit {
namespace {

using detail::BlockFinder;
using detail::Rows;
using detail::edge_count;
using detail::reduce;
using detail::rows_of;

struct Face {
  std::vector<Vertex> cycle;
  VertexMask mask = 0;
};

// Path addition on a 2-connected graph given by rows restricted to `block`.
bool planar_block(const Rows& rows, VertexMask block) {
  Rows adj{};
  int twice = 0;
  for_each_vertex(block, [&](Vertex v) {
    adj[v] = rows[v] & block;
    twice += popcount(adj[v]);
  });
  const int n = popcount(block);
  const int m = twice / 2;
  if (n <= 4) return true;
  if (m > 3 * n - 6) return false;

  // Initial cycle: an edge s-t closed by a shortest t->s path avoiding it.
  const Vertex s = lowest(block);
  const Vertex t = lowest(adj[s]);
  std::array<Vertex, kMaxOrder> parent{};
  parent.fill(-1);
  {
    VertexMask seen = bit(t);
    VertexMask frontier = bit(t);
    while (frontier != 0 && !(seen & bit(s))) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](Vertex v) {
        VertexMask nb = adj[v] & ~seen;
        if (v == t) nb &= ~bit(s);
        for_each_vertex(nb, [&](Vertex w) {
          parent[w] = v;
        });
        next |= nb;
        seen |= nb;
      });
      frontier = next;
    }
  }
  std::vector<Vertex> cycle;
  for (Vertex v = s; v != -1; v = parent[v]) cycle.push_back(v);

  Rows emb{};
  VertexMask embedded = 0;
  int embedded_edges = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    emb[a] |= bit(b);
    emb[b] |= bit(a);
    embedded |= bit(a);
    ++embedded_edges;
  }
  std::vector<Face> faces(2);
  faces[0].cycle = cycle;
  faces[0].mask = embedded;
  faces[1] = faces[0];

  struct Fragment {
    VertexMask attach = 0;
    VertexMask body = 0;  // 0 for a single chord
    Edge chord{};
  };

  while (embedded_edges < m) {
    std::vector<Fragment> fragments;
    for_each_vertex(embedded, [&](Vertex u) {
      for_each_vertex(adj[u] & embedded & ~emb[u] & ~low_mask(u + 1), [&](Vertex v) {
        fragments.push_back({bit(u) | bit(v), 0, {u, v}});
      });
    });
    VertexMask rest = block & ~embedded;
    while (rest != 0) {
      VertexMask comp = bit(lowest(rest));
      VertexMask frontier = comp;
      while (frontier != 0) {
        VertexMask next = 0;
        for_each_vertex(frontier, [&](Vertex v) { next |= adj[v]; });
        next &= rest;
        frontier = next & ~comp;
        comp |= next;
      }
      VertexMask attach = 0;
      for_each_vertex(comp, [&](Vertex v) { attach |= adj[v] & embedded; });
      fragments.push_back({attach, comp, {}});
      rest &= ~comp;
    }

    int chosen = -1;
    int chosen_face = -1;
    for (std::size_t i = 0; i < fragments.size(); ++i) {
      int admissible = 0;
      int first = -1;
      for (std::size_t f = 0; f < faces.size(); ++f) {
        if ((fragments[i].attach & ~faces[f].mask) == 0) {
          if (first < 0) first = static_cast<int>(f);
          ++admissible;
        }
      }
      if (admissible == 0) return false;
      if (chosen < 0 || admissible == 1) {
        chosen = static_cast<int>(i);
        chosen_face = first;
        if (admissible == 1) break;
      }
    }

    const Fragment& frag = fragments[chosen];
    std::vector<Vertex> path;
    if (frag.body == 0) {
      path = {frag.chord.u, frag.chord.v};
    } else {
      const Vertex u = lowest(frag.attach);
      const VertexMask targets = frag.attach & ~bit(u);
      std::array<Vertex, kMaxOrder> from{};
      from.fill(-1);
      VertexMask seen = adj[u] & frag.body;
      VertexMask frontier = seen;
      for_each_vertex(seen, [&](Vertex w) { from[w] = u; });
      Vertex hit = -1;
      while (hit < 0) {
        VertexMask next = 0;
        for_each_vertex(frontier, [&](Vertex v) {
          if (hit < 0 && (adj[v] & targets)) hit = v;
          const VertexMask nb = adj[v] & frag.body & ~seen;
          for_each_vertex(nb, [&](Vertex w) { from[w] = v; });
          next |= nb;
          seen |= nb;
        });
        frontier = next;
      }
      std::vector<Vertex> back;
      back.push_back(lowest(adj[hit] & targets));
      for (Vertex v = hit; v != u; v = from[v]) back.push_back(v);
      back.push_back(u);
      path.assign(back.rbegin(), back.rend());
    }

    // Split the face along the path.
    Face old = std::move(faces[chosen_face]);
    const Vertex u = path.front();
    const Vertex w = path.back();
    const std::size_t len = old.cycle.size();
    std::size_t i = 0;
    std::size_t j = 0;
    for (std::size_t k = 0; k < len; ++k) {
      if (old.cycle[k] == u) i = k;
      if (old.cycle[k] == w) j = k;
    }
    Face a;
    Face b;
    for (std::size_t k = i;; k = (k + 1) % len) {
      a.cycle.push_back(old.cycle[k]);
      if (k == j) break;
    }
    for (std::size_t k = path.size() - 2; k >= 1; --k) a.cycle.push_back(path[k]);
    for (std::size_t k = j;; k = (k + 1) % len) {
      b.cycle.push_back(old.cycle[k]);
      if (k == i) break;
    }
    for (std::size_t k = 1; k + 1 < path.size(); ++k) b.cycle.push_back(path[k]);
    for (Vertex v : a.cycle) a.mask |= bit(v);
    for (Vertex v : b.cycle) b.mask |= bit(v);
    faces[chosen_face] = std::move(a);
    faces.push_back(std::move(b));

    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      emb[path[k]] |= bit(path[k + 1]);
      emb[path[k + 1]] |= bit(path[k]);
      embedded |= bit(path[k]) | bit(path[k + 1]);
      ++embedded_edges;
    }
  }
  return true;
}

bool planar_rows(Rows adj, VertexMask alive) {
  alive = reduce(adj, alive);
  const int n = popcount(alive);
  if (n <= 4) return true;
  const int m = edge_count(adj, alive);
  if (m <= 8) return true;
  if (m > 3 * n - 6) return false;
  BlockFinder finder(adj, alive);
  for (VertexMask block : finder.blocks()) {
    if (popcount(block) >= 5 && !planar_block(adj, block)) return false;
  }
  return true;
}

KuratowskiWitness extract_witness(const Graph& g) {
  Rows adj = rows_of(g);
  for (const Edge& e : g.edges()) {
    adj[e.u] &= ~bit(e.v);
    adj[e.v] &= ~bit(e.u);
    if (planar_rows(adj, g.vertices())) {
      adj[e.u] |= bit(e.v);
      adj[e.v] |= bit(e.u);
    }
  }
  KuratowskiWitness w;
  VertexMask branch = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (popcount(adj[v]) >= 3) branch |= bit(v);
  }
  w.kind = popcount(branch) == 5 ? KuratowskiKind::K5 : KuratowskiKind::K33;
  for_each_vertex(branch, [&](Vertex b) {
    for_each_vertex(adj[b], [&](Vertex next) {
      std::vector<Vertex> path{b};
      Vertex prev = b;
      Vertex cur = next;
      while (!(branch & bit(cur))) {
        path.push_back(cur);
        const Vertex after = lowest(adj[cur] & ~bit(prev));
        prev = cur;
        cur = after;
      }
      path.push_back(cur);
      if (b < cur) w.paths.push_back(std::move(path));
    });
  });
  if (w.kind == KuratowskiKind::K5) {
    w.branch_vertices = to_vector(branch);
  } else {
    const Vertex first = lowest(branch);
    VertexMask other = 0;
    for (const auto& p : w.paths) {
      if (p.front() == first) other |= bit(p.back());
      if (p.back() == first) other |= bit(p.front());
    }
    const VertexMask same = branch & ~other;
    w.branch_vertices = to_vector(same);
    for (Vertex v : to_vector(other)) w.branch_vertices.push_back(v);
  }
  return w;
}

}  // namespace

bool is_planar(const Graph& g) {
  if (g.order() <= 4) return true;
  return planar_rows(rows_of(g), g.vertices());
}

PlanarityVerdict planarity(const Graph& g, bool want_witness) {
  PlanarityVerdict verdict;
  verdict.planar = is_planar(g);
  if (!verdict.planar && want_witness) verdict.witness = extract_witness(g);
  return verdict;
}

bool validate_witness(const Graph& g, const KuratowskiWitness& w) {
  const bool k5 = w.kind == KuratowskiKind::K5;
  const std::size_t nb = k5 ? 5 : 6;
  const std::size_t np = k5 ? 10 : 9;
  if (w.branch_vertices.size() != nb || w.paths.size() != np) return false;
  VertexMask branch = 0;
  for (Vertex v : w.branch_vertices) {
    if (v < 0 || v >= g.order()) return false;
    branch |= bit(v);
  }
  if (popcount(branch) != static_cast<int>(nb)) return false;
  auto side = [&](Vertex v) {
    for (std::size_t i = 0; i < nb; ++i) {
      if (w.branch_vertices[i] == v) return static_cast<int>(i) / 3;
    }
    return -1;
  };
  VertexMask interior_used = 0;
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (const auto& p : w.paths) {
    if (p.size() < 2) return false;
    const Vertex a = p.front();
    const Vertex b = p.back();
    if (!(branch & bit(a)) || !(branch & bit(b)) || a == b) return false;
    if (!k5 && side(a) == side(b)) return false;
    ends.emplace_back(std::min(a, b), std::max(a, b));
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (!g.has_edge(p[i], p[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if ((branch | interior_used) & bit(p[i])) return false;
      interior_used |= bit(p[i]);
    }
  }
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

bool minor_free_check(const Graph& g) {
  if (g.order() > 10) throw std::domain_error("minor_free_check supports order <= 10");
  return !has_k5_minor_exhaustive(g) && !has_k33_minor_exhaustive(g);
}

}  // namespace apexkit
