#ifndef ARTINSYS_SIMPLICIAL_GRAPH_HPP
#define ARTINSYS_SIMPLICIAL_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace artinsys {

/// Finite simple graph with vertices labelled by ordered keys.
///
/// Read as a flag simplicial complex: every clique spans a simplex, so the
/// graph is the whole complex. Vertex indices are dense and stable; all
/// iteration orders (vertices(), neighbors()) are by key, which keeps every
/// derived output independent of insertion order.
template <class Key>
class SimplicialGraph {
 public:
  using key_type = Key;

  std::size_t add_vertex(const Key& key) {
    auto [it, inserted] = index_.emplace(key, keys_.size());
    if (inserted) {
      keys_.push_back(key);
      adjacency_.emplace_back();
    }
    return it->second;
  }

  /// Adds an undirected edge, creating missing endpoints. Loops are rejected;
  /// repeated edges are ignored.
  void add_edge(const Key& u, const Key& v) {
    if (u == v) throw std::invalid_argument("simple graphs have no loops");
    std::size_t iu = add_vertex(u);
    std::size_t iv = add_vertex(v);
    insert_sorted(adjacency_[iu], iv);
    insert_sorted(adjacency_[iv], iu);
  }

  std::size_t vertex_count() const noexcept { return keys_.size(); }

  std::size_t edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& a : adjacency_) total += a.size();
    return total / 2;
  }

  const Key& key(std::size_t index) const { return keys_.at(index); }

  std::optional<std::size_t> index_of(const Key& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Key& key) const { return index_.count(key) != 0; }

  std::size_t at(const Key& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw std::out_of_range("vertex not in graph");
    return it->second;
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    const auto& a = adjacency_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
  }

  bool adjacent(const Key& u, const Key& v) const {
    auto iu = index_of(u);
    auto iv = index_of(v);
    return iu && iv && adjacent(*iu, *iv);
  }

  /// Neighbour indices sorted by index.
  const std::vector<std::size_t>& neighbor_indices(std::size_t v) const { return adjacency_.at(v); }

  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

  /// Keys in ascending order.
  std::vector<Key> vertices() const {
    std::vector<Key> out;
    out.reserve(keys_.size());
    for (const auto& [k, idx] : index_) out.push_back(k);
    return out;
  }

  /// Neighbour keys of `key` in ascending order.
  std::vector<Key> neighbors(const Key& key) const {
    std::vector<Key> out;
    for (std::size_t j : adjacency_.at(at(key))) out.push_back(keys_[j]);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Edges as ordered key pairs (first < second), ascending.
  std::vector<std::pair<Key, Key>> edges() const {
    std::vector<std::pair<Key, Key>> out;
    out.reserve(edge_count());
    for (std::size_t u = 0; u < keys_.size(); ++u) {
      for (std::size_t v : adjacency_[u]) {
        if (keys_[u] < keys_[v]) out.emplace_back(keys_[u], keys_[v]);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Full (induced) subgraph on the given keys; keys absent from the graph
  /// are an error.
  SimplicialGraph full_subgraph(std::span<const Key> keys) const {
    SimplicialGraph sub;
    std::vector<std::size_t> picked;
    picked.reserve(keys.size());
    for (const auto& k : keys) {
      sub.add_vertex(k);
      picked.push_back(at(k));
    }
    std::sort(picked.begin(), picked.end());
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    for (std::size_t u : picked) {
      for (std::size_t v : adjacency_[u]) {
        if (u < v && std::binary_search(picked.begin(), picked.end(), v)) sub.add_edge(keys_[u], keys_[v]);
      }
    }
    return sub;
  }

  /// Full subgraph spanned by the neighbours of `key`.
  SimplicialGraph link(const Key& key) const {
    auto nbrs = neighbors(key);
    return full_subgraph(std::span<const Key>(nbrs));
  }

  /// Same graph with vertices re-keyed through `f` (which must be injective
  /// on this vertex set).
  template <class F>
  auto relabel(F&& f) const -> SimplicialGraph<std::decay_t<decltype(f(std::declval<const Key&>()))>> {
    using Out = std::decay_t<decltype(f(std::declval<const Key&>()))>;
    SimplicialGraph<Out> out;
    std::vector<Out> mapped;
    mapped.reserve(keys_.size());
    for (const auto& k : keys_) mapped.push_back(f(k));
    for (const auto& m : mapped) out.add_vertex(m);
    if (out.vertex_count() != keys_.size()) throw std::invalid_argument("relabelling is not injective");
    for (std::size_t u = 0; u < keys_.size(); ++u) {
      for (std::size_t v : adjacency_[u]) {
        if (u < v) out.add_edge(mapped[u], mapped[v]);
      }
    }
    return out;
  }

  bool operator==(const SimplicialGraph& other) const {
    return vertices() == other.vertices() && edges() == other.edges();
  }

 private:
  static void insert_sorted(std::vector<std::size_t>& v, std::size_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
  }

  std::vector<Key> keys_;
  std::map<Key, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

}  // namespace artinsys

#endif  // ARTINSYS_SIMPLICIAL_GRAPH_HPP
