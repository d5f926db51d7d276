#include "apexkit/canon.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

namespace apexkit {
namespace {

using Labels = std::array<Vertex, kMaxOrder>;
// code[j] holds the adjacency of canonical vertex j to canonical vertices
// 0..j-1, most significant bit first; comparing codes lexicographically is
// comparing graph6 strings.
using Code = std::array<std::uint32_t, kMaxOrder>;

constexpr int kMaxGenerators = 64;

struct Partition {
  int n = 0;
  Labels lab{};
  std::array<std::int8_t, kMaxOrder> len{};  // valid at cell starts
  int cells = 0;

  bool discrete() const { return cells == n; }
  VertexMask cell_mask(int start) const {
    VertexMask m = 0;
    for (int i = start; i < start + len[start]; ++i) m |= bit(lab[i]);
    return m;
  }
};

class Queue {
 public:
  void push(int start) {
    if (!queued_[start]) {
      queued_[start] = true;
      items_[tail_++ % kMaxOrder] = start;
      ++count_;
    }
  }
  int pop() {
    const int s = items_[head_++ % kMaxOrder];
    queued_[s] = false;
    --count_;
    return s;
  }
  bool empty() const { return count_ == 0; }
  bool queued(int start) const { return queued_[start]; }

 private:
  std::array<int, kMaxOrder> items_{};
  std::array<bool, kMaxOrder> queued_{};
  int head_ = 0;
  int tail_ = 0;
  int count_ = 0;
};

void refine(const Graph& g, Partition& p, Queue& q) {
  const int n = p.n;
  std::array<int, kMaxOrder> count{};
  while (!q.empty() && !p.discrete()) {
    const int ws = q.pop();
    const VertexMask w = p.cell_mask(ws);
    for (int s = 0; s < n; s += p.len[s]) {
      const int k = p.len[s];
      if (k == 1) continue;
      bool uniform = true;
      for (int i = s; i < s + k; ++i) {
        count[i] = popcount(g.neighbors(p.lab[i]) & w);
        uniform = uniform && count[i] == count[s];
      }
      if (uniform) continue;
      // Stable insertion sort of the cell by count.
      for (int i = s + 1; i < s + k; ++i) {
        const int c = count[i];
        const Vertex v = p.lab[i];
        int j = i - 1;
        while (j >= s && count[j] > c) {
          count[j + 1] = count[j];
          p.lab[j + 1] = p.lab[j];
          --j;
        }
        count[j + 1] = c;
        p.lab[j + 1] = v;
      }
      const bool was_queued = q.queued(s);
      int largest = s;
      int largest_len = 0;
      std::array<int, kMaxOrder> starts{};
      int fragments = 0;
      for (int i = s; i < s + k;) {
        int j = i;
        while (j < s + k && count[j] == count[i]) ++j;
        p.len[i] = static_cast<std::int8_t>(j - i);
        starts[fragments++] = i;
        if (j - i > largest_len) {
          largest_len = j - i;
          largest = i;
        }
        i = j;
      }
      p.cells += fragments - 1;
      for (int f = 0; f < fragments; ++f) {
        if (was_queued || starts[f] != largest) q.push(starts[f]);
      }
    }
  }
}

void individualize(Partition& p, int start, Vertex v, Queue& q) {
  const int k = p.len[start];
  for (int i = start; i < start + k; ++i) {
    if (p.lab[i] == v) {
      std::swap(p.lab[i], p.lab[start]);
      break;
    }
  }
  p.len[start] = 1;
  p.len[start + 1] = static_cast<std::int8_t>(k - 1);
  ++p.cells;
  q.push(start);
}

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Partition root;
    root.n = n_;
    for (int i = 0; i < n_; ++i) root.lab[i] = i;
    root.len[0] = static_cast<std::int8_t>(n_);
    root.cells = 1;
    Queue q;
    q.push(0);
    refine(g_, root, q);
    search(root);
  }

  const Labels& best_labels() const { return best_lab_; }

 private:
  Code leaf_code(const Labels& lab) const {
    std::array<int, kMaxOrder> pos{};
    for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
    Code code{};
    for (int j = 1; j < n_; ++j) {
      std::uint32_t c = 0;
      for_each_vertex(g_.neighbors(lab[j]), [&](Vertex w) {
        const int i = pos[w];
        if (i < j) c |= std::uint32_t{1} << (j - 1 - i);
      });
      code[j] = c;
    }
    return code;
  }

  static int compare(const Code& a, const Code& b, int n) {
    for (int j = 1; j < n; ++j) {
      if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
    }
    return 0;
  }

  void record_automorphism(const Labels& from, const Labels& to) {
    if (static_cast<int>(generators_.size()) >= kMaxGenerators) return;
    Labels gamma{};
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) generators_.push_back(gamma);
  }

  void leaf(const Partition& p) {
    const Code code = leaf_code(p.lab);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_ = best_ = code;
      first_lab_ = best_lab_ = p.lab;
      return;
    }
    if (compare(code, first_, n_) == 0) {
      record_automorphism(p.lab, first_lab_);
      return;
    }
    const int c = compare(code, best_, n_);
    if (c == 0) {
      record_automorphism(p.lab, best_lab_);
    } else if (c < 0) {
      best_ = code;
      best_lab_ = p.lab;
    }
  }

  // Union-find over orbits of the generators fixing the current prefix.
  int find(std::array<int, kMaxOrder>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  bool equivalent_to_explored(Vertex v, const std::vector<Vertex>& explored) const {
    if (explored.empty() || generators_.empty()) return false;
    std::array<int, kMaxOrder> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    bool any = false;
    for (const Labels& gamma : generators_) {
      bool fixes = true;
      for (Vertex u : prefix_) {
        if (gamma[u] != u) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        const int a = find(parent, x);
        const int b = find(parent, gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    const int root = find(parent, v);
    for (Vertex u : explored) {
      if (find(parent, u) == root) return true;
    }
    return false;
  }

  void search(const Partition& p) {
    if (p.discrete()) {
      leaf(p);
      return;
    }
    int target = -1;
    for (int s = 0; s < n_; s += p.len[s]) {
      if (p.len[s] > 1 && (target < 0 || p.len[s] < p.len[target])) target = s;
    }
    std::array<Vertex, kMaxOrder> cell{};
    const int k = p.len[target];
    for (int i = 0; i < k; ++i) cell[i] = p.lab[target + i];
    std::sort(cell.begin(), cell.begin() + k);
    std::vector<Vertex> explored;
    for (int i = 0; i < k; ++i) {
      const Vertex v = cell[i];
      if (equivalent_to_explored(v, explored)) continue;
      Partition child = p;
      Queue q;
      individualize(child, target, v, q);
      refine(g_, child, q);
      prefix_.push_back(v);
      search(child);
      prefix_.pop_back();
      explored.push_back(v);
    }
  }

  const Graph& g_;
  int n_;
  bool have_leaf_ = false;
  Code first_{};
  Code best_{};
  Labels first_lab_{};
  Labels best_lab_{};
  std::vector<Labels> generators_;
  std::vector<Vertex> prefix_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  CanonicalForm form;
  form.labeling.resize(n);
  if (n <= 1) {
    std::iota(form.labeling.begin(), form.labeling.end(), 0);
    form.graph = g;
  } else {
    Searcher searcher(g);
    searcher.run();
    const Labels& lab = searcher.best_labels();
    std::vector<Vertex> pos(n);
    for (int i = 0; i < n; ++i) {
      form.labeling[i] = lab[i];
      pos[lab[i]] = i;
    }
    form.graph = relabel(g, pos);
  }
  form.key = CanonicalKey(to_graph6(form.graph));
  return form;
}

CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_key(a) == canonical_key(b);
}

}  // namespace apexkit
