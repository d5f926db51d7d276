#include "apexkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>

namespace apexkit {

std::vector<Vertex> to_vector(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(popcount(m));
  for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexMask to_mask(std::span<const Vertex> vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) m |= bit(v);
  return m;
}

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw GraphError("graph order must be in [0, 32], got " + std::to_string(order));
  }
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for order " + std::to_string(order));
    }
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (g.has_edge(e.u, e.v)) {
      throw GraphError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    g.add_edge(e.u, e.v);
  }
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order_; ++u) {
    for_each_vertex(adj_[u] & ~low_mask(u + 1), [&](Vertex v) { out.push_back({u, v}); });
  }
  return out;
}

Vertex Graph::add_vertex() {
  if (order_ >= kMaxOrder) throw GraphError("graph order would exceed 32");
  adj_[order_] = 0;
  return order_++;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order_ != b.order_) return false;
  return std::equal(a.adj_.begin(), a.adj_.begin() + a.order_, b.adj_.begin());
}

Deletion delete_vertices(const Graph& g, VertexMask removed) {
  Deletion d;
  d.old_to_new.assign(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!(removed & bit(v))) {
      d.old_to_new[v] = static_cast<Vertex>(d.new_to_old.size());
      d.new_to_old.push_back(v);
    }
  }
  d.graph = Graph(static_cast<int>(d.new_to_old.size()));
  for (Vertex nu = 0; nu < d.graph.order(); ++nu) {
    const Vertex u = d.new_to_old[nu];
    for_each_vertex(g.neighbors(u) & ~removed, [&](Vertex v) {
      if (v > u) d.graph.add_edge(nu, d.old_to_new[v]);
    });
  }
  return d;
}

Graph induced_subgraph(const Graph& g, VertexMask keep) {
  return delete_vertices(g, g.vertices() & ~keep).graph;
}

Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v)) {
    throw GraphError("cannot contract absent edge (" + std::to_string(u) + "," +
                     std::to_string(v) + ")");
  }
  const Vertex keep = std::min(u, v);
  const Vertex gone = std::max(u, v);
  Graph merged = g;
  for_each_vertex(g.neighbors(gone), [&](Vertex w) {
    if (w != keep) merged.add_edge(keep, w);
  });
  return delete_vertices(merged, bit(gone)).graph;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for_each_vertex(g.neighbors(u) & ~low_mask(u + 1),
                    [&](Vertex v) { out.add_edge(perm[u], perm[v]); });
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
  return out;
}

int euler_characteristic(const Graph& g) { return g.order() - g.size(); }

bool is_triangle_free(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    VertexMask later = g.neighbors(u) & ~low_mask(u + 1);
    while (later != 0) {
      const Vertex v = lowest(later);
      later &= later - 1;
      if (g.neighbors(v) & later) return false;
    }
  }
  return true;
}

std::vector<VertexMask> connected_components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask unseen = g.vertices();
  while (unseen != 0) {
    VertexMask comp = bit(lowest(unseen));
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

int min_degree(const Graph& g) {
  int best = g.order() == 0 ? 0 : kMaxOrder;
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

VertexMask isolated_vertices(const Graph& g) {
  VertexMask m = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.neighbors(v) == 0) m |= bit(v);
  }
  return m;
}

Graph without_isolated_vertices(const Graph& g) {
  return delete_vertices(g, isolated_vertices(g)).graph;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      bool ok = true;
      for_each_vertex(g.neighbors(v), [&](Vertex w) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

int girth(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1);
    std::vector<Vertex> parent(g.order(), -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for_each_vertex(g.neighbors(v), [&](Vertex w) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          const int len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      });
    }
  }
  return best;
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

DegreeSequence DegreeSequence::of(const Graph& g) {
  std::vector<int> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return DegreeSequence(std::move(d));
}

int DegreeSequence::sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

std::string DegreeSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < degrees_.size();) {
    std::size_t j = i;
    while (j < degrees_.size() && degrees_[j] == degrees_[i]) ++j;
    if (i > 0) out += ",";
    out += std::to_string(degrees_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
    throw GraphError("malformed degree sequence: " + std::string(whole));
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

DegreeSequence DegreeSequence::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw GraphError("degree sequence must be parenthesized: " + std::string(text));
  }
  body = body.substr(1, body.size() - 2);
  std::vector<int> degrees;
  if (trim(body).empty()) return DegreeSequence{};
  while (true) {
    const std::size_t comma = body.find(',');
    std::string_view term = trim(body.substr(0, comma));
    const std::size_t caret = term.find('^');
    const int degree = parse_int(trim(term.substr(0, caret)), text);
    const int count = caret == std::string_view::npos ? 1 : parse_int(trim(term.substr(caret + 1)), text);
    degrees.insert(degrees.end(), count, degree);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return DegreeSequence(std::move(degrees));
}

std::vector<Component> components(const Graph& g) {
  std::vector<Component> out;
  for (VertexMask comp : connected_components(g)) {
    Component c;
    c.vertices = comp;
    const int n = popcount(comp);
    int twice_edges = 0;
    bool two_regular = true;
    for_each_vertex(comp, [&](Vertex v) {
      twice_edges += g.degree(v);
      two_regular = two_regular && g.degree(v) == 2;
    });
    const int m = twice_edges / 2;
    c.kind.order = n;
    if (n - m == 1) {
      c.kind.shape = ComponentShape::Tree;
      bool star = n <= 2;
      bool deg2_by_leaf = false;
      for_each_vertex(comp, [&](Vertex v) {
        if (g.degree(v) == n - 1) star = true;
        if (g.degree(v) == 2) {
          for_each_vertex(g.neighbors(v), [&](Vertex w) {
            if (g.degree(w) == 1) deg2_by_leaf = true;
          });
        }
      });
      c.kind.is_star = star;
      c.kind.has_deg2_adjacent_to_leaf = deg2_by_leaf;
    } else if (n == m && two_regular) {
      c.kind.shape = ComponentShape::Cycle;
    } else {
      c.kind.shape = ComponentShape::Other;
    }
    out.push_back(c);
  }
  return out;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 record");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw Graph6Error("graph6 byte out of range");
  }
  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) {
      if (text.size() < 8) throw Graph6Error("truncated graph6 order field");
      for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | (text[i] - 63);
      pos = 8;
    } else {
      if (text.size() < 4) throw Graph6Error("truncated graph6 order field");
      for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | (text[i] - 63);
      pos = 4;
    }
  }
  if (n > kMaxOrder) throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds 32");
  const long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected) {
    throw Graph6Error("graph6 record has " + std::to_string(text.size()) + " bytes, expected " +
                      std::to_string(expected));
  }
  Graph g(static_cast<int>(n));
  long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int byte = text[pos + k / 6] - 63;
    if (byte & ((1 << (6 - k % 6)) - 1)) throw Graph6Error("nonzero graph6 padding bits");
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph cube_graph() {
  Graph g(8);
  for (Vertex u = 0; u < 8; ++u)
    for (int b = 0; b < 3; ++b) {
      const Vertex v = u ^ (1 << b);
      if (u < v) g.add_edge(u, v);
    }
  return g;
}

}  // namespace apexkit
