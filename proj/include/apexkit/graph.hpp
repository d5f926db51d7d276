#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace apexkit {

using Vertex = int;
using VertexMask = std::uint32_t;

inline constexpr int kMaxOrder = 32;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }
inline constexpr VertexMask low_mask(int n) {
  return n >= 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}
inline int popcount(VertexMask m) { return std::popcount(m); }
inline Vertex lowest(VertexMask m) { return std::countr_zero(m); }

// Iterates the set bits of a mask in increasing order.
template <typename F>
inline void for_each_vertex(VertexMask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

std::vector<Vertex> to_vector(VertexMask m);
VertexMask to_mask(std::span<const Vertex> vertices);

// Simple undirected graph on at most 32 vertices stored as adjacency-row
// bitsets. Vertices are the dense indices 0..order-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  // Throws GraphError on out-of-range endpoints, loops or duplicate edges.
  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return order_; }
  int size() const;
  VertexMask vertices() const { return low_mask(order_); }
  VertexMask neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  bool has_edge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  std::vector<Edge> edges() const;

  // Unchecked mutators for builders; callers keep u != v and both < order.
  void add_edge(Vertex u, Vertex v) {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
  void remove_edge(Vertex u, Vertex v) {
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }
  // Appends an isolated vertex and returns its index.
  Vertex add_vertex();

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int order_ = 0;
  std::array<VertexMask, kMaxOrder> adj_{};
};

// Result of deleting vertices: remaining vertices keep their relative order.
struct Deletion {
  Graph graph;
  std::vector<Vertex> old_to_new;  // -1 for deleted vertices
  std::vector<Vertex> new_to_old;
};

Deletion delete_vertices(const Graph& g, VertexMask removed);
Graph induced_subgraph(const Graph& g, VertexMask keep);

// Simple contraction: u absorbs v, parallel edges and loops are dropped. The
// merged vertex sits at index min(u, v); max(u, v) is removed.
Graph contract_edge(const Graph& g, Vertex u, Vertex v);

// new_graph has an edge (perm[u], perm[v]) for every edge (u, v) of g.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

Graph disjoint_union(const Graph& a, const Graph& b);

int euler_characteristic(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_connected(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);
VertexMask isolated_vertices(const Graph& g);
Graph without_isolated_vertices(const Graph& g);
bool is_bipartite(const Graph& g);
int girth(const Graph& g);  // 0 for forests
std::vector<VertexMask> connected_components(const Graph& g);

// Degrees sorted descending. Text form: "(6^7)", "(4^6,3^6)", "(5,4^4,3^7)".
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> degrees);

  static DegreeSequence of(const Graph& g);
  static DegreeSequence parse(std::string_view text);

  const std::vector<int>& degrees() const { return degrees_; }
  int length() const { return static_cast<int>(degrees_.size()); }
  int sum() const;
  std::string to_string() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

inline DegreeSequence degree_sequence(const Graph& g) { return DegreeSequence::of(g); }

enum class ComponentShape { Tree, Cycle, Other };

struct ComponentKind {
  ComponentShape shape = ComponentShape::Other;
  int order = 0;
  bool is_star = false;                       // trees only
  bool has_deg2_adjacent_to_leaf = false;     // trees only

  friend bool operator==(const ComponentKind&, const ComponentKind&) = default;
};

struct Component {
  VertexMask vertices = 0;
  ComponentKind kind;
};

// Components ordered by their lowest vertex.
std::vector<Component> components(const Graph& g);

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

// Common constructions used throughout tests and tools.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph cube_graph();

}  // namespace apexkit
