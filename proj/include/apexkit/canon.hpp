#pragma once

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "apexkit/graph.hpp"

namespace apexkit {

// Identity of an isomorphism class: the graph6 encoding of the canonically
// relabeled graph.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string graph6) : bytes_(std::move(graph6)) {}

  const std::string& str() const { return bytes_; }
  Graph graph() const { return parse_graph6(bytes_); }

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::string bytes_;
};

struct CanonicalForm {
  Graph graph;
  // labeling[pos] is the input vertex placed at canonical position pos.
  std::vector<Vertex> labeling;
  CanonicalKey key;
};

// Individualization/refinement search with automorphism pruning. The form is
// the relabeling whose graph6 encoding is least over all leaves of the
// search tree, so it depends only on the isomorphism class.
CanonicalForm canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

// Set of isomorphism classes, each with a representative (the canonical
// form) and an optional payload.
template <typename Payload = std::monostate>
class IsoSet {
 public:
  struct Entry {
    Graph representative;
    Payload payload{};
  };
  using Map = std::map<CanonicalKey, Entry>;

  // Returns true when the class was not present yet.
  bool insert(const Graph& g, Payload payload = {}) {
    CanonicalForm form = canonical_form(g);
    return insert_canonical(std::move(form.key), std::move(form.graph), std::move(payload));
  }
  bool insert_canonical(CanonicalKey key, Graph canonical, Payload payload = {}) {
    return classes_.try_emplace(std::move(key), Entry{std::move(canonical), std::move(payload)}).second;
  }

  bool contains(const Graph& g) const { return classes_.count(canonical_key(g)) > 0; }
  bool contains(const CanonicalKey& key) const { return classes_.count(key) > 0; }
  const Entry* find(const CanonicalKey& key) const {
    auto it = classes_.find(key);
    return it == classes_.end() ? nullptr : &it->second;
  }

  // Set union; for classes present in both, this set's payload is kept.
  void merge(const IsoSet& other) {
    for (const auto& [key, entry] : other.classes_) classes_.try_emplace(key, entry);
  }

  std::size_t size() const { return classes_.size(); }
  bool empty() const { return classes_.empty(); }
  auto begin() const { return classes_.begin(); }
  auto end() const { return classes_.end(); }

  std::vector<CanonicalKey> keys() const {
    std::vector<CanonicalKey> out;
    out.reserve(classes_.size());
    for (const auto& [key, entry] : classes_) out.push_back(key);
    return out;
  }

  friend bool operator==(const IsoSet& a, const IsoSet& b) {
    if (a.size() != b.size()) return false;
    auto it = b.classes_.begin();
    for (const auto& [key, entry] : a.classes_) {
      if (key != (it++)->first) return false;
    }
    return true;
  }

 private:
  Map classes_;
};

}  // namespace apexkit
