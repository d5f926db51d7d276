#include "apexkit/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "apexkit/planarity.hpp"
#include "rows.hpp"

namespace apexkit {

nlohmann::json EnumSpec::to_json() const {
  nlohmann::json j = {{"order", order},
                      {"min_size", min_size},
                      {"max_size", max_size},
                      {"min_degree", min_degree},
                      {"max_degree", max_degree},
                      {"triangle_free", triangle_free},
                      {"connected", connected}};
  j["degree_sequence"] = degree_sequence ? nlohmann::json(degree_sequence->to_string()) : nlohmann::json(nullptr);
  return j;
}

EnumSpec EnumSpec::from_json(const nlohmann::json& j) {
  EnumSpec s;
  s.order = j.at("order").get<int>();
  s.min_size = j.value("min_size", 0);
  s.max_size = j.value("max_size", -1);
  s.min_degree = j.value("min_degree", 0);
  s.max_degree = j.value("max_degree", -1);
  s.triangle_free = j.value("triangle_free", false);
  s.connected = j.value("connected", false);
  if (j.contains("degree_sequence") && !j["degree_sequence"].is_null()) {
    s.degree_sequence = DegreeSequence::parse(j["degree_sequence"].get<std::string>());
  }
  return s;
}

std::string EnumSpec::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_json().dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_string(EnumStatus status) {
  switch (status) {
    case EnumStatus::Complete:
      return "complete";
    case EnumStatus::TimeBudgetExceeded:
      return "time budget exceeded";
    case EnumStatus::ClassBudgetExceeded:
      return "class budget exceeded";
  }
  return {};
}

namespace {

using Clock = std::chrono::steady_clock;

struct Node {
  Graph graph;  // canonical
  CanonicalKey key;
};

int component_count(const Graph& g) {
  int count = 0;
  VertexMask rest = g.vertices();
  while (rest != 0) {
    VertexMask comp = bit(lowest(rest));
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    rest &= ~comp;
    ++count;
  }
  return count;
}

VertexMask cut_vertices(const Graph& g) {
  VertexMask cuts = 0;
  const int base = component_count(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 2 && component_count(delete_vertices(g, bit(v)).graph) > base) cuts |= bit(v);
  }
  return cuts;
}

class Generator {
 public:
  Generator(const EnumSpec& spec, const EnumOptions& options) : spec_(spec), options_(options) {
    n_ = spec.order;
    if (n_ < 0 || n_ > kMaxEnumOrder) {
      throw std::invalid_argument("enumeration supports order 0.." + std::to_string(kMaxEnumOrder));
    }
    if (options.strategy == EnumStrategy::ConnectedNonCut && !spec.connected) {
      throw std::invalid_argument("the non-cut strategy requires the connected constraint");
    }
    feasible_ = normalize();
  }

  EnumResult run() {
    start_ = Clock::now();
    EnumResult result;
    if (feasible_) {
      std::vector<EnumClass> found;
      if (n_ == 0) {
        Graph g(0);
        if (final_ok(g)) found.push_back({canonical_key(g), g});
      } else {
        Graph root(1);
        if (viable(root)) search(root, found);
      }
      std::sort(found.begin(), found.end(), [](const EnumClass& a, const EnumClass& b) { return a.key < b.key; });
      result.classes = std::move(found);
    }
    result.status = status_.load();
    result.nodes = nodes_.load();
    return result;
  }

 private:
  bool normalize() {
    const int pairs = n_ * (n_ - 1) / 2;
    m_min_ = std::max(0, spec_.min_size);
    m_max_ = spec_.max_size < 0 ? pairs : std::min(spec_.max_size, pairs);
    d_min_ = std::max(0, spec_.min_degree);
    d_max_ = spec_.max_degree < 0 ? std::max(0, n_ - 1) : std::min(spec_.max_degree, std::max(0, n_ - 1));
    if (spec_.degree_sequence) {
      target_ = spec_.degree_sequence->degrees();
      std::sort(target_.rbegin(), target_.rend());
      if (static_cast<int>(target_.size()) != n_) return false;
      const int sum = spec_.degree_sequence->sum();
      if (sum % 2 != 0) return false;
      m_min_ = std::max(m_min_, sum / 2);
      m_max_ = std::min(m_max_, sum / 2);
      if (n_ > 0) {
        d_min_ = std::max(d_min_, target_.back());
        d_max_ = std::min(d_max_, target_.front());
      }
    }
    if (m_min_ > m_max_ || d_min_ > d_max_) return false;
    if (n_ > 0 && (n_ * d_min_ > 2 * m_max_ || n_ * d_max_ < 2 * m_min_)) return false;

    lower_.assign(n_ + 1, 0);
    upper_.assign(n_ + 1, 0);
    for (int k = 0; k <= n_; ++k) {
      const int r = n_ - k;
      int forced = 0;
      for (int j = 0; j < r; ++j) forced += std::max(0, d_min_ - j);
      upper_[k] = m_max_ - forced;
    }
    if (options_.strategy == EnumStrategy::MinDegree) {
      lower_[n_] = m_min_;
      for (int k = n_ - 1; k >= 1; --k) lower_[k] = (lower_[k + 1] * (k - 1) + k) / (k + 1);
    }
    return true;
  }

  // Necessary conditions for a graph on k vertices to grow into a match.
  bool viable(const Graph& g) const {
    const int k = g.order();
    const int r = n_ - k;
    const int e = g.size();
    if (e > upper_[k] || e < lower_[k]) return false;
    int need = 0;
    std::vector<int> degs(k);
    for (Vertex v = 0; v < k; ++v) {
      const int d = g.degree(v);
      if (d > d_max_) return false;
      const int deficit = d_min_ - d;
      if (deficit > r) return false;
      if (deficit > 0) need += deficit;
      degs[v] = d;
    }
    if (need > r * std::min(d_max_, k)) return false;
    if (e + std::min(r * (r - 1) / 2 + r * k, r * d_max_) < m_min_) return false;
    if (spec_.connected && component_count(g) + r - 1 > m_max_ - e) return false;
    if (!target_.empty()) {
      std::sort(degs.rbegin(), degs.rend());
      for (int i = 0; i < k; ++i) {
        if (degs[i] > target_[i]) return false;
      }
    }
    return true;
  }

  bool final_ok(const Graph& g) const {
    const int e = g.size();
    if (e < m_min_ || e > m_max_) return false;
    if (g.order() > 0 && (min_degree(g) < d_min_ || max_degree(g) > d_max_)) return false;
    if (spec_.triangle_free && !is_triangle_free(g)) return false;
    if (spec_.connected && !is_connected(g)) return false;
    if (spec_.degree_sequence && degree_sequence(g) != *spec_.degree_sequence) return false;
    return true;
  }

  bool out_of_budget() {
    if (status_.load(std::memory_order_relaxed) != EnumStatus::Complete) return true;
    const std::uint64_t visited = nodes_.fetch_add(1, std::memory_order_relaxed);
    if ((visited & 255) == 0) {
      const double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
      if (elapsed > options_.budget.seconds) {
        status_.store(EnumStatus::TimeBudgetExceeded);
        return true;
      }
    }
    return false;
  }

  // Vertices that may be chosen as the canonical deletion vertex of c.
  VertexMask candidates(const Graph& c) const {
    VertexMask pool = c.vertices();
    if (options_.strategy == EnumStrategy::ConnectedNonCut) pool &= ~cut_vertices(c);
    int best_deg = kMaxOrder;
    for_each_vertex(pool, [&](Vertex v) { best_deg = std::min(best_deg, c.degree(v)); });
    VertexMask out = 0;
    int best_inv = -1;
    for_each_vertex(pool, [&](Vertex v) {
      if (c.degree(v) != best_deg) return;
      int inv = 0;
      for_each_vertex(c.neighbors(v), [&](Vertex w) { inv += c.degree(w); });
      if (inv > best_inv) {
        best_inv = inv;
        out = 0;
      }
      if (inv == best_inv) out |= bit(v);
    });
    return out;
  }

  void children(const Node& parent, std::vector<Node>& out) {
    const Graph& p = parent.graph;
    const int k = p.order();
    const Vertex x = k;
    const int r_after = n_ - (k + 1);
    const bool min_rule = options_.strategy == EnumStrategy::MinDegree;
    int min_size = std::max(0, d_min_ - r_after);
    if (!min_rule && k > 0) min_size = std::max(min_size, 1);
    const int max_size = std::min(d_max_, k);
    VertexMask open = 0;
    int delta_p = kMaxOrder;
    for (Vertex v = 0; v < k; ++v) {
      if (p.degree(v) < d_max_) open |= bit(v);
      delta_p = std::min(delta_p, p.degree(v));
    }
    std::unordered_set<std::string> seen;

    auto consider = [&](VertexMask s) {
      const int size = popcount(s);
      if (min_rule) {
        // The new vertex must have minimum degree in the child.
        for (Vertex v = 0; v < k; ++v) {
          const int dv = p.degree(v) + ((s >> v) & 1);
          if (dv < size) return;
        }
      }
      Graph c = p;
      c.add_vertex();
      for_each_vertex(s, [&](Vertex v) { c.add_edge(v, x); });
      if (!viable(c)) return;
      const VertexMask cand = candidates(c);
      if (!(cand & bit(x))) return;
      CanonicalForm form = canonical_form(c);
      if (!seen.insert(form.key.str()).second) return;
      Vertex chosen = -1;
      for (Vertex v : form.labeling) {
        if (cand & bit(v)) {
          chosen = v;
          break;
        }
      }
      if (chosen != x && canonical_key(delete_vertices(c, bit(chosen)).graph) != parent.key) return;
      out.push_back({std::move(form.graph), std::move(form.key)});
    };

    // Subsets of `open` with size in [min_size, max_size]; independent when
    // triangle-free.
    std::vector<Vertex> verts = to_vector(open);
    auto rec = [&](auto&& self, std::size_t i, VertexMask s, int size) -> void {
      if (size >= min_size) consider(s);
      if (size == max_size || (min_rule && size > delta_p)) return;
      for (std::size_t j = i; j < verts.size(); ++j) {
        const Vertex v = verts[j];
        if (spec_.triangle_free && (p.neighbors(v) & s)) continue;
        self(self, j + 1, s | bit(v), size + 1);
      }
    };
    rec(rec, 0, 0, 0);
  }

  void emit(const Node& node, std::vector<EnumClass>& out) {
    if (!final_ok(node.graph)) return;
    out.push_back({node.key, node.graph});
    if (emitted_.fetch_add(1) + 1 > options_.budget.max_classes) {
      EnumStatus expected = EnumStatus::Complete;
      status_.compare_exchange_strong(expected, EnumStatus::ClassBudgetExceeded);
    }
  }

  void dfs(const Node& node, std::vector<EnumClass>& out) {
    if (out_of_budget()) return;
    if (node.graph.order() == n_) {
      emit(node, out);
      return;
    }
    std::vector<Node> kids;
    children(node, kids);
    for (const Node& child : kids) dfs(child, out);
  }

  void search(const Graph& root, std::vector<EnumClass>& out) {
    std::vector<Node> frontier{{root, canonical_key(root)}};
    if (options_.parallel) {
      // Breadth-first until there is enough independent work to share out.
      while (!frontier.empty() && frontier.front().graph.order() < n_ && frontier.size() < 256) {
        std::vector<Node> next;
        for (const Node& node : frontier) {
          if (out_of_budget()) break;
          children(node, next);
        }
        frontier = std::move(next);
      }
      std::vector<std::vector<EnumClass>> parts(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
      for (std::size_t i = 0; i < frontier.size(); ++i) dfs(frontier[i], parts[i]);
      for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    } else {
      for (const Node& node : frontier) dfs(node, out);
    }
  }

  const EnumSpec& spec_;
  EnumOptions options_;
  int n_ = 0;
  bool feasible_ = true;
  int m_min_ = 0, m_max_ = 0, d_min_ = 0, d_max_ = 0;
  std::vector<int> target_;
  std::vector<int> lower_, upper_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> emitted_{0};
  std::atomic<EnumStatus> status_{EnumStatus::Complete};
};

}  // namespace

EnumResult enumerate(const EnumSpec& spec, const EnumOptions& options) {
  return Generator(spec, options).run();
}

EnumResult enumerate_cached(const EnumSpec& spec, const EnumOptions& options,
                            const std::filesystem::path& cache_dir) {
  const std::filesystem::path file = cache_dir / ("enum-" + spec.hash() + ".g6");
  const std::string header = "# " + spec.to_json().dump();
  if (std::ifstream in(file); in) {
    std::string first;
    std::getline(in, first);
    if (first == header) {
      EnumResult result;
      result.from_cache = true;
      for (auto& rec : read_graph6_stream(in)) {
        CanonicalForm f = canonical_form(rec.graph);
        result.classes.push_back({std::move(f.key), std::move(f.graph)});
      }
      std::sort(result.classes.begin(), result.classes.end(),
                [](const EnumClass& a, const EnumClass& b) { return a.key < b.key; });
      return result;
    }
  }
  EnumResult result = enumerate(spec, options);
  if (result.complete()) {
    std::filesystem::create_directories(cache_dir);
    const std::filesystem::path tmp = file.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << header << '\n';
      write_graph6_stream(out, result.classes);
    }
    std::filesystem::rename(tmp, file);
  }
  return result;
}

std::vector<Graph6Record> read_graph6_stream(std::istream& in, bool skip_malformed, std::vector<std::string>* errors) {
  std::vector<Graph6Record> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      out.push_back({parse_graph6(line), number});
    } catch (const std::exception& e) {
      if (!skip_malformed) throw Graph6StreamError(number, e.what());
      if (errors) errors->push_back("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

void write_graph6_stream(std::ostream& out, const std::vector<EnumClass>& classes) {
  for (const EnumClass& c : classes) out << c.key.str() << '\n';
}

ClassProperties class_properties(const Graph& g) {
  ClassProperties p;
  p.planar = is_planar(g);
  p.triangle_free = is_triangle_free(g);
  p.connected = is_connected(g);
  p.min_degree = g.order() > 0 ? min_degree(g) : 0;
  p.max_degree = g.order() > 0 ? max_degree(g) : 0;
  p.isolated = popcount(isolated_vertices(g));
  return p;
}

IsoSet<ClassProperties> filter_catalog(const std::vector<Graph>& graphs, const CatalogFilter& f) {
  IsoSet<ClassProperties> out;
  for (const Graph& g : graphs) {
    const ClassProperties p = class_properties(g);
    if (f.planar && p.planar != *f.planar) continue;
    if (f.min_degree && p.min_degree < *f.min_degree) continue;
    if (f.max_degree && p.max_degree > *f.max_degree) continue;
    if (f.triangle_free && p.triangle_free != *f.triangle_free) continue;
    if (f.connected && p.connected != *f.connected) continue;
    if (f.min_isolated && p.isolated < *f.min_isolated) continue;
    out.insert(g, p);
  }
  return out;
}

}  // namespace apexkit
