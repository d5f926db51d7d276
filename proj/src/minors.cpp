#include "apexkit/minors.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "apexkit/apex.hpp"
#include "apexkit/planarity.hpp"
#include "rows.hpp"

namespace apexkit {
namespace {

using detail::BlockFinder;
using detail::Rows;

enum class Target { K5, K33 };

bool contains_k5_subgraph(const Graph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    const VertexMask na = g.neighbors(a) & ~low_mask(a + 1);
    VertexMask bs = na;
    while (bs) {
      const Vertex b = lowest(bs);
      bs &= bs - 1;
      const VertexMask nab = na & g.neighbors(b) & ~low_mask(b + 1);
      VertexMask cs = nab;
      while (cs) {
        const Vertex c = lowest(cs);
        cs &= cs - 1;
        const VertexMask nabc = nab & g.neighbors(c) & ~low_mask(c + 1);
        VertexMask ds = nabc;
        while (ds) {
          const Vertex d = lowest(ds);
          ds &= ds - 1;
          if (nabc & g.neighbors(d) & ~low_mask(d + 1)) return true;
        }
      }
    }
  }
  return false;
}

bool contains_k33_subgraph(const Graph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const VertexMask ab = g.neighbors(a) & g.neighbors(b);
      if (popcount(ab) < 3) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (popcount(ab & g.neighbors(c)) >= 3) return true;
      }
    }
  }
  return false;
}

// Contraction-closure search. A graph has the target as a minor iff it
// contains it as a subgraph or some single-edge contraction has it as a
// minor: in a minimal model either every branch set is a single vertex or
// some branch set contains an edge that can be contracted. Degree <= 1
// deletion, degree-2 suppression and restriction to blocks are safe because
// both targets are 2-connected with minimum degree 3.
class MinorSearch {
 public:
  MinorSearch(Target target, bool planarity_shortcut)
      : target_(target), shortcut_(planarity_shortcut) {}

  bool has(const Graph& g) {
    Rows adj = detail::rows_of(g);
    const VertexMask alive = detail::reduce(adj, g.vertices());
    if (!large_enough(adj, alive)) return false;
    BlockFinder finder(adj, alive);
    const auto& blocks = finder.blocks();
    if (blocks.size() == 1 && blocks[0] == alive) return search(detail::compact(adj, alive));
    for (VertexMask block : blocks) {
      if (large_enough(adj, block) && search(detail::compact(adj, block))) return true;
    }
    return false;
  }

 private:
  int target_order() const { return target_ == Target::K5 ? 5 : 6; }
  int target_size() const { return target_ == Target::K5 ? 10 : 9; }

  bool large_enough(const Rows& adj, VertexMask alive) const {
    return popcount(alive) >= target_order() && detail::edge_count(adj, alive) >= target_size();
  }

  bool search(const Graph& g) {
    if (target_ == Target::K5 ? contains_k5_subgraph(g) : contains_k33_subgraph(g)) return true;
    if (g.order() <= target_order()) return false;
    CanonicalKey key = canonical_key(g);
    if (auto it = memo_.find(key.str()); it != memo_.end()) return it->second;
    bool found = false;
    if (shortcut_ && is_planar(g)) {
      found = false;
    } else {
      for (const Edge& e : g.edges()) {
        if (has(contract_edge(g, e.u, e.v))) {
          found = true;
          break;
        }
      }
    }
    memo_.emplace(key.str(), found);
    return found;
  }

  Target target_;
  bool shortcut_;
  std::unordered_map<std::string, bool> memo_;
};

void check_minor_order(const Graph& g) {
  if (g.order() > kMaxMinorOrder) {
    throw std::domain_error("minor search supports order <= " + std::to_string(kMaxMinorOrder));
  }
}

class Reducer {
 public:
  explicit Reducer(const Graph& g) : adj_(detail::rows_of(g)), alive_(g.vertices()) {}

  // Runs D0/D1/D2 on the lowest eligible vertex outside `keep` until none
  // remains.
  void run(VertexMask keep, std::vector<SimplificationStep>& steps) {
    while (true) {
      Vertex v = -1;
      for_each_vertex(alive_ & ~keep, [&](Vertex x) {
        if (v < 0 && popcount(adj_[x]) <= 2) v = x;
      });
      if (v < 0) return;
      const int d = popcount(adj_[v]);
      if (d == 0) {
        steps.push_back({SimplificationStep::Kind::D0, v, -1, -1});
      } else if (d == 1) {
        const Vertex a = lowest(adj_[v]);
        adj_[a] &= ~bit(v);
        steps.push_back({SimplificationStep::Kind::D1, v, a, -1});
      } else {
        const Vertex a = lowest(adj_[v]);
        const Vertex c = lowest(adj_[v] & ~bit(a));
        const bool parallel = (adj_[a] & bit(c)) != 0;
        adj_[a] = (adj_[a] & ~bit(v)) | bit(c);
        adj_[c] = (adj_[c] & ~bit(v)) | bit(a);
        steps.push_back({SimplificationStep::Kind::D2, v, a, c});
        if (parallel) steps.push_back({SimplificationStep::Kind::CollapseParallel, -1, a, c});
      }
      adj_[v] = 0;
      alive_ &= ~bit(v);
    }
  }

  VertexMask alive() const { return alive_; }
  Graph graph() const { return detail::compact(adj_, alive_); }

 private:
  Rows adj_;
  VertexMask alive_;
};

VertexMask two_core(const Graph& g) {
  Rows adj = detail::rows_of(g);
  VertexMask alive = g.vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for_each_vertex(alive, [&](Vertex v) {
      if (popcount(adj[v] & alive) <= 1) {
        alive &= ~bit(v);
        changed = true;
      }
    });
  }
  return alive;
}

}  // namespace

bool has_k5_minor(const Graph& g) {
  check_minor_order(g);
  return MinorSearch(Target::K5, true).has(g);
}

bool has_k33_minor(const Graph& g) {
  check_minor_order(g);
  return MinorSearch(Target::K33, true).has(g);
}

bool has_k5_minor_exhaustive(const Graph& g) {
  check_minor_order(g);
  return MinorSearch(Target::K5, false).has(g);
}

bool has_k33_minor_exhaustive(const Graph& g) {
  check_minor_order(g);
  return MinorSearch(Target::K33, false).has(g);
}

SimplificationTrace simplify(const Graph& g) {
  SimplificationTrace trace;
  Reducer r(g);
  r.run(0, trace.steps);
  trace.survivors = to_vector(r.alive());
  trace.final_graph = r.graph();
  return trace;
}

Graph replay(const Graph& g, const SimplificationTrace& trace) {
  Rows adj = detail::rows_of(g);
  VertexMask alive = g.vertices();
  auto fail = [](const char* why) { throw GraphError(std::string("invalid simplification step: ") + why); };
  for (const SimplificationStep& s : trace.steps) {
    using Kind = SimplificationStep::Kind;
    if (s.kind == Kind::CollapseParallel) {
      if (!(adj[s.a] & bit(s.c))) fail("collapse on absent edge");
      continue;
    }
    if (s.v < 0 || s.v >= g.order() || !(alive & bit(s.v))) fail("vertex not present");
    const int d = popcount(adj[s.v]);
    if ((s.kind == Kind::D0 && d != 0) || (s.kind == Kind::D1 && d != 1) || (s.kind == Kind::D2 && d != 2)) {
      fail("degree mismatch");
    }
    if (s.kind == Kind::D2) {
      if ((adj[s.v] & ~(bit(s.a) | bit(s.c))) != 0) fail("D2 neighbours mismatch");
      adj[s.a] = (adj[s.a] & ~bit(s.v)) | bit(s.c);
      adj[s.c] = (adj[s.c] & ~bit(s.v)) | bit(s.a);
    } else {
      for_each_vertex(adj[s.v], [&](Vertex w) { adj[w] &= ~bit(s.v); });
    }
    adj[s.v] = 0;
    alive &= ~bit(s.v);
  }
  return detail::compact(adj, alive);
}

RelativeSimplification simplify_relative(const Graph& g, Vertex a) {
  if (a < 0 || a >= g.order()) throw GraphError("vertex out of range");
  Reducer r(g);
  std::vector<SimplificationStep> steps;
  r.run(bit(a), steps);
  RelativeSimplification out;
  out.survivors = to_vector(r.alive());
  out.graph = r.graph();
  out.a = static_cast<Vertex>(std::find(out.survivors.begin(), out.survivors.end(), a) - out.survivors.begin());
  return out;
}

VertexMask SplitK33Certificate::originals() const {
  VertexMask m = 0;
  for (int i = 0; i < 3; ++i) m |= bit(v[i]) | bit(w[i]);
  return m;
}

std::optional<SplitK33Certificate> is_split_k33(const Graph& g) {
  if (g.order() < 6 || euler_characteristic(g) != -3 || !is_connected(g)) return std::nullopt;
  if (!has_k33_minor(g)) return std::nullopt;

  const SimplificationTrace trace = simplify(g);
  const Graph& k = trace.final_graph;
  if (k.order() != 6 || k.size() != 9 || !is_bipartite(k)) {
    throw CertificateError("split K3,3 does not simplify to K3,3: " + to_graph6(g));
  }
  SplitK33Certificate cert;
  int nv = 0;
  int nw = 0;
  for (Vertex x = 0; x < 6; ++x) {
    const bool same_side = x == 0 || !k.has_edge(0, x);
    (same_side ? cert.v[nv++] : cert.w[nw++]) = trace.survivors[x];
  }
  cert.core = two_core(g);
  const VertexMask originals = cert.originals();
  for (int i = 0; i < 3; ++i) {
    for_each_vertex(g.neighbors(cert.v[i]) & cert.core, [&](Vertex first) {
      std::vector<Vertex> path{cert.v[i]};
      Vertex prev = cert.v[i];
      Vertex cur = first;
      while (!(originals & bit(cur))) {
        path.push_back(cur);
        const VertexMask next = g.neighbors(cur) & cert.core & ~bit(prev);
        if (popcount(next) != 1) throw CertificateError("branch path does not continue: " + to_graph6(g));
        prev = cur;
        cur = lowest(next);
      }
      path.push_back(cur);
      const auto j = std::find(cert.w.begin(), cert.w.end(), cur) - cert.w.begin();
      if (j == 3 || !cert.paths[3 * i + j].empty()) {
        throw CertificateError("branch paths do not form K3,3: " + to_graph6(g));
      }
      cert.paths[3 * i + j] = std::move(path);
    });
  }
  if (!validate_certificate(g, cert)) throw CertificateError("invalid certificate for " + to_graph6(g));
  return cert;
}

bool validate_certificate(const Graph& g, const SplitK33Certificate& cert) {
  const VertexMask originals = cert.originals();
  if (popcount(originals) != 6) return false;
  if ((originals & ~cert.core) != 0) return false;
  VertexMask interior = 0;
  int core_edges = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto& p = cert.paths[3 * i + j];
      if (p.size() < 2 || p.front() != cert.v[i] || p.back() != cert.w[j]) return false;
      for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        if (!g.has_edge(p[k], p[k + 1])) return false;
      }
      for (std::size_t k = 1; k + 1 < p.size(); ++k) {
        const VertexMask b = bit(p[k]);
        if ((interior | originals) & b) return false;
        if (popcount(g.neighbors(p[k]) & cert.core) != 2) return false;
        interior |= b;
      }
      core_edges += static_cast<int>(p.size()) - 1;
    }
  }
  if (interior != (cert.core & ~originals)) return false;
  // The paths must use every edge among core vertices.
  int induced = 0;
  for_each_vertex(cert.core, [&](Vertex x) { induced += popcount(g.neighbors(x) & cert.core); });
  return induced / 2 == core_edges;
}

nlohmann::json to_json(const SplitK33Certificate& cert) {
  nlohmann::json paths = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      paths.push_back({{"ends", {cert.v[i], cert.w[j]}}, {"path", cert.paths[3 * i + j]}});
    }
  }
  return {{"originals", {{"v", cert.v}, {"w", cert.w}}}, {"branch_paths", paths}};
}

NearestPart nearest_part(const SplitK33Certificate& cert, const Graph& g, Vertex a) {
  if (a < 0 || a >= g.order()) throw CertificateError("vertex out of range");
  const VertexMask originals = cert.originals();
  Vertex root = a;
  if (!(cert.core & bit(a))) {
    VertexMask seen = bit(a);
    VertexMask frontier = bit(a);
    root = -1;
    while (frontier != 0 && root < 0) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](Vertex x) { next |= g.neighbors(x); });
      next &= ~seen;
      if (next & cert.core) root = lowest(next & cert.core);
      seen |= next;
      frontier = next;
    }
    if (root < 0) throw CertificateError("vertex not attached to the core");
  }
  if (originals & bit(root)) return NearestPart::vertex(root);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto& p = cert.paths[3 * i + j];
      if (std::find(p.begin() + 1, p.end() - 1, root) != p.end() - 1) return NearestPart::edge(cert.v[i], cert.w[j]);
    }
  }
  throw CertificateError("vertex lies on no branch path");
}

bool has_clean_path(const Graph& g, Vertex a, Vertex v, VertexMask originals) {
  if (a == v) return true;
  const VertexMask blocked = originals & ~bit(v);
  if (blocked & bit(a)) return false;
  VertexMask seen = bit(a);
  VertexMask frontier = bit(a);
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex x) { next |= g.neighbors(x); });
    next &= ~seen & ~blocked;
    if (next & bit(v)) return true;
    seen |= next;
    frontier = next;
  }
  return false;
}

std::string ExtensionClass::to_string() const {
  switch (kind) {
    case Kind::OneApex:
      return "one-apex";
    case Kind::Deg3Canonical:
      return "degree-3 form";
    case Kind::Deg4Canonical:
      return "degree-4 form " + std::to_string(index);
  }
  return {};
}

namespace {

// K3,3 on {0,1,2} x {3,4,5} plus a new vertex attached to the given parts:
// part p < 6 is vertex p, part p >= 6 is edge (p-6)/3 -- 3+(p-6)%3, which is
// subdivided once per occurrence with each subdivision vertex joined to the
// new vertex.
Graph attach_to_parts(const std::vector<int>& parts) {
  int extra = 0;
  for (int p : parts) extra += p >= 6;
  Graph g(7 + extra);
  const Vertex a = 6;
  std::array<int, 9> subdivisions{};
  for (int p : parts) {
    if (p < 6) {
      g.add_edge(a, p);
    } else {
      ++subdivisions[p - 6];
    }
  }
  Vertex next = 7;
  for (int e = 0; e < 9; ++e) {
    const Vertex x = e / 3;
    const Vertex y = 3 + e % 3;
    Vertex prev = x;
    for (int s = 0; s < subdivisions[e]; ++s) {
      g.add_edge(prev, next);
      g.add_edge(next, a);
      prev = next++;
    }
    g.add_edge(prev, y);
  }
  return g;
}

void collect_forms(int degree, std::vector<int>& parts, int start, std::map<CanonicalKey, Graph>& out) {
  if (static_cast<int>(parts.size()) == degree) {
    const Graph g = attach_to_parts(parts);
    if (!is_n_apex(g, 1).is_n_apex) {
      CanonicalForm f = canonical_form(g);
      out.try_emplace(f.key, f.graph);
    }
    return;
  }
  for (int p = start; p < 15; ++p) {
    // A vertex part may be used once; an edge part may repeat.
    if (p < 6 && std::find(parts.begin(), parts.end(), p) != parts.end()) continue;
    parts.push_back(p);
    collect_forms(degree, parts, p, out);
    parts.pop_back();
  }
}

}  // namespace

const ExtensionForms& extension_forms() {
  static const ExtensionForms forms = [] {
    ExtensionForms f;
    for (int degree : {3, 4}) {
      std::map<CanonicalKey, Graph> found;
      std::vector<int> parts;
      collect_forms(degree, parts, 0, found);
      auto& dst = degree == 3 ? f.deg3 : f.deg4;
      for (auto& [key, graph] : found) dst.push_back(graph);
    }
    return f;
  }();
  return forms;
}

ExtensionClass classify_extension(const Graph& g, Vertex a) {
  if (a < 0 || a >= g.order()) throw std::invalid_argument("vertex out of range");
  const int d = g.degree(a);
  if (d != 3 && d != 4) throw std::invalid_argument("attached vertex must have degree 3 or 4");
  if (is_n_apex(g, 1).is_n_apex) return {ExtensionClass::Kind::OneApex, 0};
  const CanonicalKey key = canonical_key(simplify(g).final_graph);
  const ExtensionForms& forms = extension_forms();
  for (const Graph& f : forms.deg3) {
    if (canonical_key(f) == key) return {ExtensionClass::Kind::Deg3Canonical, 0};
  }
  for (std::size_t i = 0; i < forms.deg4.size(); ++i) {
    if (canonical_key(forms.deg4[i]) == key) return {ExtensionClass::Kind::Deg4Canonical, static_cast<int>(i) + 1};
  }
  throw ExtensionError("extension matches no form: " + to_graph6(g) + " simplified " + key.str());
}

std::vector<Graph> vertex_splits(const Graph& g) {
  std::vector<Graph> out;
  const int n = g.order();
  if (n >= kMaxOrder) throw GraphError("vertex split exceeds maximum order");
  for (Vertex v = 0; v < n; ++v) {
    const std::vector<Vertex> nb = to_vector(g.neighbors(v));
    const int d = static_cast<int>(nb.size());
    // The new vertex n takes the neighbours in `moved`; the subset and its
    // complement give isomorphic results, so only subsets without the
    // first neighbour are used.
    for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << d); ++sub) {
      if (d > 0 && (sub & 1)) continue;
      Graph h = g;
      h.add_vertex();
      for (int i = 0; i < d; ++i) {
        if (sub & (std::uint32_t{1} << i)) {
          h.remove_edge(v, nb[i]);
          h.add_edge(n, nb[i]);
        }
      }
      h.add_edge(v, n);
      out.push_back(std::move(h));
    }
  }
  return out;
}

std::vector<IsoSet<>> split_k33_family(int splits) {
  std::vector<IsoSet<>> levels(1);
  levels[0].insert(complete_bipartite(3, 3));
  for (int s = 1; s <= splits; ++s) {
    IsoSet<> next;
    for (const auto& [key, entry] : levels.back()) {
      for (const Graph& h : vertex_splits(entry.representative)) next.insert(h);
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace apexkit
