#include "apexkit/moves.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>

namespace apexkit {

Graph nabla_y(const Graph& g, std::array<Vertex, 3> t) {
  const auto [a, b, c] = t;
  for (Vertex x : t) {
    if (x < 0 || x >= g.order()) throw MoveError("triangle vertex out of range");
  }
  if (a == b || b == c || a == c || !g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c)) {
    throw MoveError("nabla-Y needs a triangle");
  }
  Graph h = g;
  h.remove_edge(a, b);
  h.remove_edge(b, c);
  h.remove_edge(a, c);
  const Vertex y = h.add_vertex();
  for (Vertex x : t) h.add_edge(x, y);
  return h;
}

Graph y_nabla(const Graph& g, Vertex center) {
  if (center < 0 || center >= g.order()) throw MoveError("vertex out of range");
  if (g.degree(center) != 3) throw MoveError("Y-nabla needs a degree-3 vertex");
  const std::vector<Vertex> nb = to_vector(g.neighbors(center));
  Graph h = g;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!h.has_edge(nb[i], nb[j])) h.add_edge(nb[i], nb[j]);
    }
  }
  return delete_vertices(h, bit(center)).graph;
}

Graph apply(const Graph& g, const Move& move) {
  return move.kind == MoveKind::NablaY ? nabla_y(g, move.triangle) : y_nabla(g, move.center);
}

std::vector<Move> legal_moves(const Graph& g, bool nabla_y_allowed, bool y_nabla_allowed) {
  std::vector<Move> out;
  if (nabla_y_allowed) {
    for (Vertex a = 0; a < g.order(); ++a) {
      const VertexMask na = g.neighbors(a) & ~low_mask(a + 1);
      for_each_vertex(na, [&](Vertex b) {
        for_each_vertex(na & g.neighbors(b) & ~low_mask(b + 1), [&](Vertex c) {
          out.push_back({MoveKind::NablaY, {a, b, c}, -1});
        });
      });
    }
  }
  if (y_nabla_allowed) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 3) out.push_back({MoveKind::YNabla, {}, v});
    }
  }
  return out;
}

int ClosureFamily::index_of(const CanonicalKey& key) const {
  auto it = std::find(ordered.begin(), ordered.end(), key);
  return it == ordered.end() ? -1 : static_cast<int>(it - ordered.begin());
}

namespace {

bool by_order_then_key(const std::pair<int, CanonicalKey>& a, const std::pair<int, CanonicalKey>& b) {
  return a < b;
}

struct Expansion {
  std::vector<CanonicalForm> images;
  std::vector<MoveKind> kinds;
};

}  // namespace

ClosureFamily closure(const std::vector<Graph>& seeds, AllowedMoves allowed, ClosureLimits limits) {
  if (seeds.empty()) throw std::invalid_argument("closure needs at least one seed");
  ClosureFamily family;
  std::set<MoveEdge> edges;
  auto admit = [&](const CanonicalForm& f) {
    if (f.graph.order() > limits.max_order || f.graph.size() > limits.max_size) {
      throw ClosureCapError("closure class exceeds limits: " + f.key.str());
    }
    const bool fresh = family.classes.insert_canonical(f.key, f.graph);
    if (family.classes.size() > limits.max_classes) throw ClosureCapError("closure exceeds class cap");
    return fresh;
  };

  std::vector<std::pair<int, CanonicalKey>> frontier;
  for (const Graph& s : seeds) {
    CanonicalForm f = canonical_form(s);
    family.seeds.push_back(f.key);
    if (admit(f)) frontier.emplace_back(f.graph.order(), f.key);
  }
  std::sort(family.seeds.begin(), family.seeds.end());
  family.seeds.erase(std::unique(family.seeds.begin(), family.seeds.end()), family.seeds.end());

  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(), by_order_then_key);
    std::vector<Expansion> results(frontier.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const Graph& g = family.classes.find(frontier[i].second)->representative;
      for (const Move& m : legal_moves(g, allowed.nabla_y, allowed.y_nabla)) {
        results[i].images.push_back(canonical_form(apply(g, m)));
        results[i].kinds.push_back(m.kind);
      }
    }
    std::vector<std::pair<int, CanonicalKey>> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (std::size_t k = 0; k < results[i].images.size(); ++k) {
        const CanonicalForm& f = results[i].images[k];
        edges.insert({frontier[i].second, f.key, results[i].kinds[k]});
        if (admit(f)) next.emplace_back(f.graph.order(), f.key);
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<int, CanonicalKey>> all;
  for (const auto& [key, entry] : family.classes) all.emplace_back(entry.representative.order(), key);
  std::sort(all.begin(), all.end(), by_order_then_key);
  for (auto& [order, key] : all) family.ordered.push_back(key);
  family.move_edges.assign(edges.begin(), edges.end());
  return family;
}

nlohmann::json to_json(const ClosureFamily& family, const std::map<CanonicalKey, std::string>& names) {
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t i = 0; i < family.ordered.size(); ++i) {
    const CanonicalKey& key = family.ordered[i];
    const Graph& g = family.classes.find(key)->representative;
    nlohmann::json c = {{"id", i},
                        {"graph6", key.str()},
                        {"order", g.order()},
                        {"size", g.size()},
                        {"degree_sequence", degree_sequence(g).to_string()},
                        {"triangle_free", is_triangle_free(g)}};
    if (auto it = names.find(key); it != names.end()) c["name"] = it->second;
    classes.push_back(std::move(c));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const MoveEdge& e : family.move_edges) {
    edges.push_back({{"from", family.index_of(e.from)},
                     {"to", family.index_of(e.to)},
                     {"move", e.kind == MoveKind::NablaY ? "nabla-y" : "y-nabla"}});
  }
  nlohmann::json seeds = nlohmann::json::array();
  for (const CanonicalKey& s : family.seeds) seeds.push_back(family.index_of(s));
  return {{"class_count", family.ordered.size()}, {"classes", classes}, {"move_edges", edges}, {"seeds", seeds}};
}

const ClosureFamily& heawood_family() {
  static const ClosureFamily family = closure({complete_graph(7)}, {true, true}, {14, 21, 1000});
  return family;
}

const ClosureFamily& ks_family() {
  static const ClosureFamily family = closure({complete_graph(7)}, {true, false}, {14, 21, 1000});
  return family;
}

namespace {

std::map<std::string, Graph> build_aliases() {
  const ClosureFamily& hf = heawood_family();
  const ClosureFamily& ks = ks_family();
  std::map<std::string, Graph> names;
  auto unique_match = [&](auto&& pred) -> std::optional<Graph> {
    std::optional<Graph> found;
    for (const CanonicalKey& key : hf.ordered) {
      const Graph& g = hf.classes.find(key)->representative;
      if (!pred(key, g)) continue;
      if (found) return std::nullopt;
      found = g;
    }
    return found;
  };
  auto at_order = [](int n) { return [n](const CanonicalKey&, const Graph& g) { return g.order() == n; }; };
  auto ks_with_triangle = [&](int n) {
    return [&, n](const CanonicalKey& key, const Graph& g) {
      return g.order() == n && ks.classes.contains(key) && !is_triangle_free(g);
    };
  };
  auto triangle_free_at = [](int n) {
    return [n](const CanonicalKey&, const Graph& g) { return g.order() == n && is_triangle_free(g); };
  };
  const std::pair<const char*, std::optional<Graph>> candidates[] = {
      {"K7", unique_match(at_order(7))},
      {"H8", unique_match(at_order(8))},
      {"H12", unique_match(triangle_free_at(12))},
      {"C12", unique_match(ks_with_triangle(12))},
      {"C13", unique_match(ks_with_triangle(13))},
      {"C14", unique_match(triangle_free_at(14))},
  };
  for (const auto& [name, g] : candidates) {
    if (g) names.emplace(name, *g);
  }
  for (std::size_t i = 0; i < hf.ordered.size(); ++i) {
    char id[8];
    std::snprintf(id, sizeof id, "HF%02zu", i + 1);
    names.emplace(id, hf.classes.find(hf.ordered[i])->representative);
  }
  return names;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace

const std::map<std::string, Graph>& family_aliases() {
  static const std::map<std::string, Graph> aliases = build_aliases();
  return aliases;
}

std::map<CanonicalKey, std::string> family_names() {
  std::map<CanonicalKey, std::string> out;
  for (const auto& [name, g] : family_aliases()) {
    const CanonicalKey key = canonical_key(g);
    auto it = out.find(key);
    // Prefer a descriptive name over the systematic HFxx id.
    if (it == out.end() || it->second.starts_with("HF")) out[key] = name;
  }
  return out;
}

std::optional<Graph> named_graph(const std::string& name) {
  const auto& aliases = family_aliases();
  if (auto it = aliases.find(name); it != aliases.end()) return it->second;
  std::string_view s = name;
  try {
    if (s == "Q3") return cube_graph();
    if (s == "Petersen") return petersen_graph();
    if (s.starts_with("cycle")) {
      if (auto n = parse_int(s.substr(5))) return cycle_graph(*n);
    } else if (s.starts_with("star")) {
      if (auto n = parse_int(s.substr(4))) return star_graph(*n);
    } else if (s.starts_with("P")) {
      if (auto n = parse_int(s.substr(1)); n && *n >= 1) return path_graph(*n);
    } else if (s.starts_with("K")) {
      const auto comma = s.find(',');
      if (comma == std::string_view::npos) {
        if (auto n = parse_int(s.substr(1)); n && *n >= 0) return complete_graph(*n);
      } else {
        auto a = parse_int(s.substr(1, comma - 1));
        auto b = parse_int(s.substr(comma + 1));
        if (a && b && *a >= 0 && *b >= 0) return complete_bipartite(*a, *b);
      }
    }
  } catch (const GraphError&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace apexkit
