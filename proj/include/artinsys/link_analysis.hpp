#ifndef ARTINSYS_LINK_ANALYSIS_HPP
#define ARTINSYS_LINK_ANALYSIS_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "artinsys/dihedral_complex.hpp"
#include "artinsys/errors.hpp"
#include "artinsys/simplicial_graph.hpp"

namespace artinsys {

/// Link of a vertex in a ball; only defined where the ball sees the whole
/// neighbourhood.
inline SimplicialGraph<VertexId> link_of(const VertexId& v, const BallComplex& ball) {
  if (!ball.in_exact_region(v)) {
    throw MarginViolation("vertex " + v.key() + " is outside the exact link region of the radius-" +
                          std::to_string(ball.radius()) + " ball");
  }
  return ball.graph().link(v);
}

/// An induced (full) cycle of length 4 or 5, listed from its least vertex in
/// the direction whose second vertex is smaller.
template <class Key>
struct CycleWitness {
  std::vector<Key> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  auto operator<=>(const CycleWitness&) const = default;
};

namespace detail {

// Ranks vertices by key so that searches run in key order.
template <class Key>
struct RankedView {
  explicit RankedView(const SimplicialGraph<Key>& g) : graph(g) {
    std::vector<Key> sorted = g.vertices();
    by_rank.reserve(sorted.size());
    rank_of.resize(g.vertex_count());
    for (std::size_t r = 0; r < sorted.size(); ++r) {
      std::size_t idx = g.at(sorted[r]);
      by_rank.push_back(idx);
      rank_of[idx] = r;
    }
    neighbors.resize(sorted.size());
    for (std::size_t r = 0; r < sorted.size(); ++r) {
      for (std::size_t w : g.neighbor_indices(by_rank[r])) neighbors[r].push_back(rank_of[w]);
      std::sort(neighbors[r].begin(), neighbors[r].end());
    }
  }

  bool adjacent(std::size_t r1, std::size_t r2) const {
    const auto& nb = neighbors[r1];
    return std::binary_search(nb.begin(), nb.end(), r2);
  }

  std::size_t size() const { return by_rank.size(); }

  CycleWitness<Key> witness(std::initializer_list<std::size_t> ranks) const {
    CycleWitness<Key> w;
    for (std::size_t r : ranks) w.vertices.push_back(graph.key(by_rank[r]));
    return w;
  }

  const SimplicialGraph<Key>& graph;
  std::vector<std::size_t> by_rank;
  std::vector<std::size_t> rank_of;
  std::vector<std::vector<std::size_t>> neighbors;
};

// Calls visit(v0, v1, v2, v3) for every induced 4-cycle in canonical form, in
// lexicographic order; stops when visit returns false.
template <class Key, class Visit>
void for_each_full_4_cycle(const RankedView<Key>& g, Visit&& visit) {
  for (std::size_t v0 = 0; v0 < g.size(); ++v0) {
    for (std::size_t v1 : g.neighbors[v0]) {
      if (v1 <= v0) continue;
      for (std::size_t v2 : g.neighbors[v1]) {
        if (v2 <= v0 || g.adjacent(v0, v2)) continue;
        for (std::size_t v3 : g.neighbors[v2]) {
          if (v3 <= v1 || !g.adjacent(v3, v0) || g.adjacent(v3, v1)) continue;
          if (!visit(v0, v1, v2, v3)) return;
        }
      }
    }
  }
}

template <class Key, class Visit>
void for_each_full_5_cycle(const RankedView<Key>& g, Visit&& visit) {
  for (std::size_t v0 = 0; v0 < g.size(); ++v0) {
    for (std::size_t v1 : g.neighbors[v0]) {
      if (v1 <= v0) continue;
      for (std::size_t v2 : g.neighbors[v1]) {
        if (v2 <= v0 || g.adjacent(v2, v0)) continue;
        for (std::size_t v3 : g.neighbors[v2]) {
          if (v3 <= v0 || v3 == v1 || g.adjacent(v3, v0) || g.adjacent(v3, v1)) continue;
          for (std::size_t v4 : g.neighbors[v3]) {
            if (v4 <= v1 || v4 == v2 || !g.adjacent(v4, v0) || g.adjacent(v4, v1) || g.adjacent(v4, v2)) continue;
            if (!visit(v0, v1, v2, v3, v4)) return;
          }
        }
      }
    }
  }
}

}  // namespace detail

/// Exhaustive search for an induced 4- or 5-cycle. Returns the
/// lexicographically least one (by key sequence) or nothing when the graph
/// is 6-large.
template <class Key>
std::optional<CycleWitness<Key>> find_full_short_cycle(const SimplicialGraph<Key>& g) {
  detail::RankedView<Key> view(g);
  std::optional<std::vector<std::size_t>> best4, best5;
  detail::for_each_full_4_cycle(view, [&](auto a, auto b, auto c, auto d) {
    best4 = std::vector<std::size_t>{a, b, c, d};
    return false;
  });
  detail::for_each_full_5_cycle(view, [&](auto a, auto b, auto c, auto d, auto e) {
    best5 = std::vector<std::size_t>{a, b, c, d, e};
    return false;
  });
  const std::vector<std::size_t>* pick = nullptr;
  if (best4 && best5) {
    pick = std::lexicographical_compare(best4->begin(), best4->end(), best5->begin(), best5->end()) ? &*best4
                                                                                                    : &*best5;
  } else if (best4) {
    pick = &*best4;
  } else if (best5) {
    pick = &*best5;
  }
  if (!pick) return std::nullopt;
  CycleWitness<Key> w;
  for (std::size_t r : *pick) w.vertices.push_back(g.key(view.by_rank[r]));
  return w;
}

/// Every induced 4- and 5-cycle (canonical form), sorted; at most `limit`.
template <class Key>
std::vector<CycleWitness<Key>> all_full_short_cycles(const SimplicialGraph<Key>& g,
                                                     std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  detail::RankedView<Key> view(g);
  std::vector<std::vector<std::size_t>> found;
  detail::for_each_full_4_cycle(view, [&](auto a, auto b, auto c, auto d) {
    found.push_back({a, b, c, d});
    return found.size() < limit;
  });
  std::size_t fours = found.size();
  detail::for_each_full_5_cycle(view, [&](auto a, auto b, auto c, auto d, auto e) {
    found.push_back({a, b, c, d, e});
    return found.size() - fours < limit;
  });
  std::sort(found.begin(), found.end());
  if (found.size() > limit) found.resize(limit);
  std::vector<CycleWitness<Key>> out;
  for (const auto& cyc : found) {
    CycleWitness<Key> w;
    for (std::size_t r : cyc) w.vertices.push_back(g.key(view.by_rank[r]));
    out.push_back(std::move(w));
  }
  return out;
}

template <class Key>
bool is_6_large(const SimplicialGraph<Key>& g) {
  return !find_full_short_cycle(g).has_value();
}

/// Ordering w_1..w_k of W with W'_1 strictly containing W'_2 ... W'_k, where
/// W'_j is the set of neighbours of w_j in W'.
template <class Key>
struct PrismOrder {
  std::vector<Key> ordering;
  std::vector<std::vector<Key>> neighbor_chains;

  auto operator<=>(const PrismOrder&) const = default;
};

template <class Key>
struct PrismRecognition {
  std::optional<PrismOrder<Key>> order;
  std::string failure;
};

template <class Key>
PrismRecognition<Key> recognize_prism_detailed(const SimplicialGraph<Key>& g, std::span<const Key> w,
                                               std::span<const Key> w_prime) {
  PrismRecognition<Key> out;
  std::set<Key> ws(w.begin(), w.end());
  std::set<Key> wps(w_prime.begin(), w_prime.end());
  for (const auto& k : ws) {
    if (wps.count(k)) throw std::invalid_argument("prism sides must be disjoint");
  }
  for (const auto* side : {&ws, &wps}) {
    for (const auto& k : *side) {
      if (!g.contains(k)) throw std::invalid_argument("prism vertex not in graph");
    }
  }
  if (ws.size() != wps.size()) {
    out.failure = "sides have different cardinalities";
    return out;
  }
  auto is_clique = [&](const std::set<Key>& s) {
    for (auto x = s.begin(); x != s.end(); ++x) {
      for (auto y = std::next(x); y != s.end(); ++y) {
        if (!g.adjacent(*x, *y)) return false;
      }
    }
    return true;
  };
  if (!is_clique(ws) || !is_clique(wps)) {
    out.failure = "a side does not span a complete subgraph";
    return out;
  }
  std::vector<std::pair<std::vector<Key>, Key>> rows;
  for (const auto& x : ws) {
    std::vector<Key> nb;
    for (const auto& y : wps) {
      if (g.adjacent(x, y)) nb.push_back(y);
    }
    rows.emplace_back(std::move(nb), x);
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& p, const auto& q) { return p.first.size() > q.first.size(); });
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto& big = rows[k - 1].first;
    const auto& small = rows[k].first;
    if (big.size() == small.size()) {
      out.failure = "neighbour sets of equal size, nesting is not strict";
      return out;
    }
    if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) {
      out.failure = "neighbour sets are not nested";
      return out;
    }
  }
  // strict nesting alone admits sizes k-1..0; a subdivided prism needs k..1
  if (!rows.empty() && rows.back().first.empty()) {
    out.failure = "a vertex has no neighbour on the other side";
    return out;
  }
  PrismOrder<Key> order;
  for (auto& [nb, x] : rows) {
    order.ordering.push_back(x);
    order.neighbor_chains.push_back(nb);
  }
  out.order = std::move(order);
  return out;
}

/// Recovers the prism order on the full subgraph spanned by W and W'.
template <class Key>
std::optional<PrismOrder<Key>> recognize_prism(const SimplicialGraph<Key>& g, std::span<const Key> w,
                                               std::span<const Key> w_prime) {
  return recognize_prism_detailed(g, w, w_prime).order;
}

template <class Key>
struct ModelGraphPartition {
  Key c_l{};
  Key c_r{};
  std::vector<Key> u_l, u_r, d_l, d_r;
};

struct ModelGraphCheck {
  bool pass = false;
  int failed_condition = 0;  // 1..4, or 0 on success
  std::string detail;
};

/// Checks the four model-graph conditions: c_l / c_r see exactly U_l+D_l /
/// U_r+D_r; no U-D edges; U_l,U_r and D_l,D_r span prisms.
template <class Key>
ModelGraphCheck check_model_graph(const SimplicialGraph<Key>& g, const ModelGraphPartition<Key>& p) {
  std::map<Key, int> part;
  auto claim = [&](const Key& k, int which) {
    if (!g.contains(k)) throw std::invalid_argument("partition names a vertex outside the graph");
    if (!part.emplace(k, which).second) throw std::invalid_argument("partition parts overlap");
  };
  claim(p.c_l, 0);
  claim(p.c_r, 1);
  int which = 2;
  for (const auto* set : {&p.u_l, &p.u_r, &p.d_l, &p.d_r}) {
    if (set->empty()) throw std::invalid_argument("partition parts must be nonempty");
    for (const auto& k : *set) claim(k, which);
    ++which;
  }
  if (part.size() != g.vertex_count()) throw std::invalid_argument("partition does not cover the graph");

  auto as_set = [](const std::vector<Key>& a, const std::vector<Key>& b) {
    std::vector<Key> out(a);
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
  };
  ModelGraphCheck out;
  if (g.neighbors(p.c_l) != as_set(p.u_l, p.d_l)) {
    out.failed_condition = 1;
    out.detail = "neighbours of c_l differ from U_l + D_l";
    return out;
  }
  if (g.neighbors(p.c_r) != as_set(p.u_r, p.d_r)) {
    out.failed_condition = 1;
    out.detail = "neighbours of c_r differ from U_r + D_r";
    return out;
  }
  for (const auto& x : as_set(p.u_l, p.u_r)) {
    for (const auto& y : g.neighbors(x)) {
      int py = part.at(y);
      if (py >= 4) {
        out.failed_condition = 2;
        out.detail = "edge between an upper and a lower part";
        return out;
      }
    }
  }
  auto upper = recognize_prism_detailed(g, std::span<const Key>(p.u_l), std::span<const Key>(p.u_r));
  if (!upper.order) {
    out.failed_condition = 3;
    out.detail = "U_l, U_r do not span a prism: " + upper.failure;
    return out;
  }
  auto lower = recognize_prism_detailed(g, std::span<const Key>(p.d_l), std::span<const Key>(p.d_r));
  if (!lower.order) {
    out.failed_condition = 4;
    out.detail = "D_l, D_r do not span a prism: " + lower.failure;
    return out;
  }
  out.pass = true;
  return out;
}

/// A partition of a dihedral link with a readable name for every vertex.
struct NamedPartition {
  ModelGraphPartition<VertexId> partition;
  std::map<VertexId, std::string> names;

  std::vector<VertexId> all_vertices() const {
    std::vector<VertexId> out{partition.c_l, partition.c_r};
    for (const auto* set : {&partition.u_l, &partition.u_r, &partition.d_l, &partition.d_r}) {
      out.insert(out.end(), set->begin(), set->end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Partition of the link of the identity (n >= 3): c_l = r^-1 c_{n-2},
/// c_r = c_1 and the four (n-1)-sets U_l, U_r, D_l, D_r.
inline NamedPartition real_link_partition(DihedralIndex n, const CellTemplate& tmpl) {
  if (n < 3) throw std::invalid_argument("real link partition needs n >= 3; n = 2 links are 6-cycles");
  const auto& group = tmpl.group();
  NamedPartition out;
  auto inv = [&](const CellVertexRole& role) { return group.inverse(tmpl.element(role)); };
  CanonicalForm r_inv = inv(CellVertexRole::right());
  auto real = [&](const CanonicalForm& g, std::string name) {
    VertexId v = VertexId::real(g);
    out.names[v] = std::move(name);
    return v;
  };
  auto interior = [&](const CanonicalForm& tip, int i, std::string name) {
    VertexId v = VertexId::interior(tip, i);
    out.names[v] = std::move(name);
    return v;
  };
  auto& p = out.partition;
  const std::string nm1 = std::to_string(n - 1);
  p.c_l = interior(r_inv, n - 2, "r^-1 c" + std::to_string(n - 2));
  p.c_r = interior(group.identity(), 1, "c1");
  p.d_l.push_back(real(group.multiply(r_inv, tmpl.element(CellVertexRole::d(n - 1))), "r^-1 d" + nm1));
  for (int j = 2; j <= n - 1; ++j) {
    p.d_l.push_back(interior(inv(CellVertexRole::u(j)), j - 1, "u" + std::to_string(j) + "^-1 c" + std::to_string(j - 1)));
  }
  p.d_r.push_back(real(tmpl.element(CellVertexRole::d(1)), "d1"));
  for (int j = 1; j <= n - 2; ++j) {
    p.d_r.push_back(interior(inv(CellVertexRole::u(j)), j, "u" + std::to_string(j) + "^-1 c" + std::to_string(j)));
  }
  p.u_l.push_back(real(group.multiply(r_inv, tmpl.element(CellVertexRole::u(n - 1))), "r^-1 u" + nm1));
  for (int j = 2; j <= n - 1; ++j) {
    p.u_l.push_back(interior(inv(CellVertexRole::d(j)), j - 1, "d" + std::to_string(j) + "^-1 c" + std::to_string(j - 1)));
  }
  p.u_r.push_back(real(tmpl.element(CellVertexRole::u(1)), "u1"));
  for (int j = 1; j <= n - 2; ++j) {
    p.u_r.push_back(interior(inv(CellVertexRole::d(j)), j, "d" + std::to_string(j) + "^-1 c" + std::to_string(j)));
  }
  return out;
}

inline NamedPartition real_link_partition(DihedralIndex n) { return real_link_partition(n, CellTemplate(n)); }

/// Partition of the link of c_i in the base cell, 1 <= i <= n-2, with
/// p_j = u_i u_j^-1 and q_j = d_i d_j^-1 (u_0 = d_0 = identity).
inline NamedPartition interior_link_partition(DihedralIndex n, int i, const CellTemplate& tmpl) {
  if (n < 3) throw std::invalid_argument("interior vertices need n >= 3");
  if (i < 1 || i > n - 2) {
    throw std::invalid_argument("interior index " + std::to_string(i) + " out of range 1.." + std::to_string(n - 2));
  }
  const auto& group = tmpl.group();
  NamedPartition out;
  auto elem = [&](const CellVertexRole& role) { return tmpl.element(role); };
  auto translate = [&](bool upper, int j) {
    CanonicalForm base = elem(upper ? CellVertexRole::u(i) : CellVertexRole::d(i));
    if (j == 0) return base;
    return group.multiply(base, group.inverse(elem(upper ? CellVertexRole::u(j) : CellVertexRole::d(j))));
  };
  auto real = [&](const CellVertexRole& role) {
    VertexId v = VertexId::real(elem(role));
    out.names[v] = role.name();
    return v;
  };
  auto shifted = [&](bool upper, int j, int k) {
    VertexId v = VertexId::interior(translate(upper, j), k);
    out.names[v] = std::string(upper ? "p" : "q") + std::to_string(j) + " c" + std::to_string(k);
    return v;
  };
  auto& p = out.partition;
  CanonicalForm id = group.identity();
  if (i == 1) {
    p.c_l = real(CellVertexRole::left());
  } else {
    p.c_l = VertexId::interior(id, i - 1);
    out.names[p.c_l] = "c" + std::to_string(i - 1);
  }
  if (i == n - 2) {
    p.c_r = real(CellVertexRole::right());
  } else {
    p.c_r = VertexId::interior(id, i + 1);
    out.names[p.c_r] = "c" + std::to_string(i + 1);
  }
  for (bool upper : {true, false}) {
    auto& left = upper ? p.u_l : p.d_l;
    auto& right = upper ? p.u_r : p.d_r;
    left.push_back(real(upper ? CellVertexRole::u(i) : CellVertexRole::d(i)));
    for (int j = 1; j <= i - 1; ++j) left.push_back(shifted(upper, j, j));
    for (int j = i + 1; j <= n - 1; ++j) left.push_back(shifted(upper, j, j - 1));
    right.push_back(real(upper ? CellVertexRole::d(i + 1) : CellVertexRole::u(i + 1)));
    for (int j = 0; j <= i - 1; ++j) right.push_back(shifted(upper, j, j + 1));
    for (int j = i + 1; j <= n - 2; ++j) right.push_back(shifted(upper, j, j));
  }
  return out;
}

inline NamedPartition interior_link_partition(DihedralIndex n, int i) {
  return interior_link_partition(n, i, CellTemplate(n));
}

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// Hop distance, or kInfiniteDistance when v2 is unreachable from v1.
template <class Key>
int link_distance(const SimplicialGraph<Key>& g, const Key& v1, const Key& v2) {
  std::size_t s = g.at(v1);
  std::size_t t = g.at(v2);
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<std::size_t> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    if (x == t) return dist[x];
    for (std::size_t y : g.neighbor_indices(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return kInfiniteDistance;
}

/// Graph isomorphism by colour refinement followed by backtracking. Returns
/// a vertex map g1 -> g2 when one exists.
template <class K1, class K2>
std::optional<std::map<K1, K2>> find_isomorphism(const SimplicialGraph<K1>& g1, const SimplicialGraph<K2>& g2) {
  const std::size_t n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;

  // joint colour refinement
  std::vector<std::size_t> c1(n), c2(n);
  for (std::size_t v = 0; v < n; ++v) {
    c1[v] = g1.degree(v);
    c2[v] = g2.degree(v);
  }
  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> palette;
    auto signature = [&](const auto& g, const std::vector<std::size_t>& col, std::size_t v) {
      std::vector<std::size_t> nb;
      for (std::size_t w : g.neighbor_indices(v)) nb.push_back(col[w]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(col[v], std::move(nb));
    };
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> s1, s2;
    for (std::size_t v = 0; v < n; ++v) {
      s1.push_back(signature(g1, c1, v));
      s2.push_back(signature(g2, c2, v));
    }
    for (const auto& s : s1) palette.emplace(s, 0);
    for (const auto& s : s2) palette.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [sig, id] : palette) id = next++;
    for (std::size_t v = 0; v < n; ++v) {
      c1[v] = palette[s1[v]];
      c2[v] = palette[s2[v]];
    }
    if (palette.size() == classes) break;
    classes = palette.size();
  }
  {
    std::vector<std::size_t> h1(c1), h2(c2);
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return std::nullopt;
  }

  // match vertices in an order that keeps each new vertex attached to
  // already-matched ones
  std::vector<std::size_t> order;
  std::vector<bool> queued(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (queued[root]) continue;
    std::deque<std::size_t> q{root};
    queued[root] = true;
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop_front();
      order.push_back(x);
      for (std::size_t y : g1.neighbor_indices(x)) {
        if (!queued[y]) {
          queued[y] = true;
          q.push_back(y);
        }
      }
    }
  }
  std::vector<long long> map12(n, -1), map21(n, -1);
  auto consistent = [&](std::size_t v, std::size_t w) {
    if (c1[v] != c2[w] || map21[w] >= 0) return false;
    for (std::size_t y : g1.neighbor_indices(v)) {
      if (map12[y] >= 0 && !g2.adjacent(w, static_cast<std::size_t>(map12[y]))) return false;
    }
    std::size_t mapped_nbrs1 = 0, mapped_nbrs2 = 0;
    for (std::size_t y : g1.neighbor_indices(v)) mapped_nbrs1 += map12[y] >= 0 ? 1 : 0;
    for (std::size_t z : g2.neighbor_indices(w)) mapped_nbrs2 += map21[z] >= 0 ? 1 : 0;
    return mapped_nbrs1 == mapped_nbrs2;
  };
  auto solve = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (!consistent(v, w)) continue;
      map12[v] = static_cast<long long>(w);
      map21[w] = static_cast<long long>(v);
      if (self(self, depth + 1)) return true;
      map12[v] = -1;
      map21[w] = -1;
    }
    return false;
  };
  if (!solve(solve, 0)) return std::nullopt;
  std::map<K1, K2> out;
  for (std::size_t v = 0; v < n; ++v) out.emplace(g1.key(v), g2.key(static_cast<std::size_t>(map12[v])));
  return out;
}

template <class K1, class K2>
bool are_isomorphic(const SimplicialGraph<K1>& g1, const SimplicialGraph<K2>& g2) {
  return find_isomorphism(g1, g2).has_value();
}

}  // namespace artinsys

#endif  // ARTINSYS_LINK_ANALYSIS_HPP
