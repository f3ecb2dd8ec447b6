#ifndef ARTINSYS_DIHEDRAL_COMPLEX_HPP
#define ARTINSYS_DIHEDRAL_COMPLEX_HPP

// Finite balls of the systolized complex X of DA_n.
//
// A cell is a relator 2n-gon with left tip l (a group element g), right tip
// r = g*Delta, upper half spelling aba... and lower half spelling bab....
// For n >= 3 it carries interior vertices c_1..c_{n-2} on a spine from l to
// r; c_k spans triangles with the boundary edges at path positions (k, k+1)
// of both halves, and c_1 / c_{n-2} also with the edges at l / r. For n = 2
// the square only receives its diagonal l-r.
//
// Boundary vertex names: u_i is the vertex at position i on the upper path
// when i is odd and on the lower path when i is even; d_i the other way
// round. With this convention the four real neighbours of the identity are
// u_1 = a, d_1 = b, r^-1 u_{n-1} = b^-1 and r^-1 d_{n-1} = a^-1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "artinsys/dihedral_words.hpp"
#include "artinsys/errors.hpp"
#include "artinsys/simplicial_graph.hpp"

namespace artinsys {

struct CellVertexRole {
  enum class Kind : std::uint8_t { LeftTip, RightTip, BoundaryU, BoundaryD, Interior };

  Kind kind = Kind::LeftTip;
  int i = 0;

  static CellVertexRole left() { return {Kind::LeftTip, 0}; }
  static CellVertexRole right() { return {Kind::RightTip, 0}; }
  static CellVertexRole u(int i) { return {Kind::BoundaryU, i}; }
  static CellVertexRole d(int i) { return {Kind::BoundaryD, i}; }
  static CellVertexRole c(int i) { return {Kind::Interior, i}; }

  bool is_boundary() const noexcept { return kind != Kind::Interior; }

  std::string name() const {
    switch (kind) {
      case Kind::LeftTip: return "l";
      case Kind::RightTip: return "r";
      case Kind::BoundaryU: return "u" + std::to_string(i);
      case Kind::BoundaryD: return "d" + std::to_string(i);
      case Kind::Interior: return "c" + std::to_string(i);
    }
    return "?";
  }

  auto operator<=>(const CellVertexRole&) const = default;
};

enum class Half : std::uint8_t { Upper, Lower };

/// Role of the vertex at `position` (0 = l, n = r) on the given half.
inline CellVertexRole role_at(Half half, int position, DihedralIndex n) {
  if (position < 0 || position > n) throw std::invalid_argument("boundary position out of range");
  if (position == 0) return CellVertexRole::left();
  if (position == n) return CellVertexRole::right();
  bool odd = position % 2 == 1;
  bool is_u = (half == Half::Upper) == odd;
  return is_u ? CellVertexRole::u(position) : CellVertexRole::d(position);
}

/// Half and position of a non-tip boundary role (tips lie on both halves).
inline std::pair<Half, int> position_of(const CellVertexRole& role) {
  switch (role.kind) {
    case CellVertexRole::Kind::BoundaryU: return {role.i % 2 == 1 ? Half::Upper : Half::Lower, role.i};
    case CellVertexRole::Kind::BoundaryD: return {role.i % 2 == 1 ? Half::Lower : Half::Upper, role.i};
    default: throw std::invalid_argument("role " + role.name() + " has no unique boundary position");
  }
}

inline void check_role(const CellVertexRole& role, DihedralIndex n) {
  using K = CellVertexRole::Kind;
  bool ok = true;
  if (role.kind == K::BoundaryU || role.kind == K::BoundaryD) ok = role.i >= 1 && role.i <= n - 1;
  if (role.kind == K::Interior) ok = n >= 3 && role.i >= 1 && role.i <= n - 2;
  if (!ok) throw std::invalid_argument("role " + role.name() + " out of range for n=" + std::to_string(n.value()));
}

/// Group element of a boundary vertex of the cell whose left tip is the identity.
inline CanonicalForm boundary_vertex_element(const CellVertexRole& role, DihedralIndex n) {
  check_role(role, n);
  DihedralGroup group(n);
  switch (role.kind) {
    case CellVertexRole::Kind::LeftTip: return group.identity();
    case CellVertexRole::Kind::RightTip: return group.canonicalize_positive(alternating_word(Generator::A, n));
    case CellVertexRole::Kind::Interior:
      throw std::invalid_argument("interior vertices are not group elements");
    default: break;
  }
  auto [half, pos] = position_of(role);
  Generator first = half == Half::Upper ? Generator::A : Generator::B;
  return group.canonicalize_positive(alternating_word(first, pos));
}

/// A (subdivided) precell, identified by its left tip.
struct Cell {
  CanonicalForm left_tip;

  auto operator<=>(const Cell&) const = default;
};

/// Vertex of X: a real vertex (group element) or interior vertex c_i of the
/// cell with the given left tip.
struct VertexId {
  enum class Kind : std::uint8_t { Real, Interior };

  Kind kind = Kind::Real;
  CanonicalForm element;  // the element itself, or the owning cell's left tip
  int index = 0;

  static VertexId real(CanonicalForm g) { return {Kind::Real, std::move(g), 0}; }
  static VertexId interior(CanonicalForm cell_left_tip, int i) {
    return {Kind::Interior, std::move(cell_left_tip), i};
  }

  bool is_real() const noexcept { return kind == Kind::Real; }

  /// Stable text key; ascending key order is the export order.
  std::string key() const {
    if (is_real()) return "r/" + element.key();
    return "c/" + element.key() + "/" + std::to_string(index);
  }

  auto operator<=>(const VertexId&) const = default;
};

/// Orbit representative (Pi, g^-1 Pi) with g = u_i (Upper) or d_i (Lower).
struct ZigzagPairClass {
  enum class Kind : std::uint8_t { Upper, Lower };
  Kind kind = Kind::Upper;
  int i = 1;

  CellVertexRole translating_role() const {
    return kind == Kind::Upper ? CellVertexRole::u(i) : CellVertexRole::d(i);
  }

  auto operator<=>(const ZigzagPairClass&) const = default;
};

/// Pairs (j, j') such that c_j in Pi is joined to c_{j'} in g^-1 Pi.
/// i = n-1 is accepted and yields no edges.
inline std::vector<std::pair<int, int>> zigzag_edges(DihedralIndex n, const ZigzagPairClass& cls) {
  if (n < 3) throw std::invalid_argument("zigzag edges need n >= 3");
  if (cls.i < 1 || cls.i > n - 1) {
    throw std::invalid_argument("zigzag class index " + std::to_string(cls.i) + " out of range 1.." +
                                std::to_string(n - 1));
  }
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= n - 2 - cls.i; ++j) out.emplace_back(j, j + cls.i);
  for (int j = 1; j <= n - 1 - cls.i; ++j) out.emplace_back(j, j + cls.i - 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// Combinatorics of one cell, shared by every translate.
class CellTemplate {
 public:
  explicit CellTemplate(DihedralIndex n) : n_(n), group_(n) {
    roles_.push_back(CellVertexRole::left());
    roles_.push_back(CellVertexRole::right());
    for (int i = 1; i <= n - 1; ++i) {
      roles_.push_back(CellVertexRole::u(i));
      roles_.push_back(CellVertexRole::d(i));
    }
    for (int i = 1; i <= n - 2; ++i) roles_.push_back(CellVertexRole::c(i));
    for (const auto& r : roles_) {
      if (r.is_boundary()) elements_.emplace(r, boundary_vertex_element(r, n));
    }
    for (Half h : {Half::Upper, Half::Lower}) {
      for (int p = 0; p < n; ++p) edges_.emplace_back(role_at(h, p, n), role_at(h, p + 1, n));
    }
    if (n == 2) {
      edges_.emplace_back(CellVertexRole::left(), CellVertexRole::right());
    } else {
      edges_.emplace_back(CellVertexRole::left(), CellVertexRole::c(1));
      for (int k = 1; k < n - 2; ++k) edges_.emplace_back(CellVertexRole::c(k), CellVertexRole::c(k + 1));
      edges_.emplace_back(CellVertexRole::c(n - 2), CellVertexRole::right());
      for (int k = 1; k <= n - 2; ++k) {
        for (Half h : {Half::Upper, Half::Lower}) {
          edges_.emplace_back(CellVertexRole::c(k), role_at(h, k, n));
          edges_.emplace_back(CellVertexRole::c(k), role_at(h, k + 1, n));
        }
      }
    }
    for (Half h : {Half::Upper, Half::Lower}) {
      auto& path = h == Half::Upper ? upper_ : lower_;
      for (int p = 0; p <= n; ++p) path.push_back(role_at(h, p, n));
    }
  }

  DihedralIndex n() const noexcept { return n_; }
  const DihedralGroup& group() const noexcept { return group_; }
  const std::vector<CellVertexRole>& roles() const noexcept { return roles_; }
  const std::vector<std::pair<CellVertexRole, CellVertexRole>>& local_edges() const noexcept { return edges_; }

  /// Roles along a half from l (position 0) to r (position n).
  const std::vector<CellVertexRole>& half_path(Half h) const { return h == Half::Upper ? upper_ : lower_; }

  const CanonicalForm& element(const CellVertexRole& role) const {
    auto it = elements_.find(role);
    if (it == elements_.end()) throw std::invalid_argument("role " + role.name() + " is not a boundary role");
    return it->second;
  }

  VertexId vertex(const Cell& cell, const CellVertexRole& role) const {
    if (role.kind == CellVertexRole::Kind::Interior) {
      check_role(role, n_);
      return VertexId::interior(cell.left_tip, role.i);
    }
    return VertexId::real(group_.multiply(cell.left_tip, element(role)));
  }

  /// Boundary elements of the cell in cyclic order: l, upper 1..n-1, r,
  /// lower n-1..1.
  std::vector<CanonicalForm> boundary_cycle(const Cell& cell) const {
    std::vector<CanonicalForm> out;
    out.reserve(static_cast<std::size_t>(2 * n_.value()));
    for (int p = 0; p <= n_; ++p) out.push_back(group_.multiply(cell.left_tip, element(upper_[p])));
    for (int p = n_ - 1; p >= 1; --p) out.push_back(group_.multiply(cell.left_tip, element(lower_[p])));
    return out;
  }

  /// Left tip of g^-1 * cell for g = u_i or d_i.
  CanonicalForm translate(const CanonicalForm& tip, const ZigzagPairClass& cls) const {
    return group_.multiply(tip, group_.inverse(element(cls.translating_role())));
  }

 private:
  DihedralIndex n_;
  DihedralGroup group_;
  std::vector<CellVertexRole> roles_;
  std::map<CellVertexRole, CanonicalForm> elements_;
  std::vector<std::pair<CellVertexRole, CellVertexRole>> edges_;
  std::vector<CellVertexRole> upper_;
  std::vector<CellVertexRole> lower_;
};

inline std::vector<std::pair<VertexId, VertexId>> cell_edges(const Cell& cell, const CellTemplate& tmpl) {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(tmpl.local_edges().size());
  for (const auto& [x, y] : tmpl.local_edges()) out.emplace_back(tmpl.vertex(cell, x), tmpl.vertex(cell, y));
  return out;
}

inline std::vector<std::pair<VertexId, VertexId>> cell_edges(const Cell& cell, DihedralIndex n) {
  return cell_edges(cell, CellTemplate(n));
}

struct PairClassification {
  CanonicalForm alpha;
  ZigzagPairClass cls;

  auto operator<=>(const PairClassification&) const = default;
};

/// Finds alpha and the class with alpha^-1 {c1, c2} = {Pi, g^-1 Pi},
/// g in {u_i, d_i}, 1 <= i <= n-1. Pairs with i = n-1 share a single edge
/// and receive no zigzag edges.
inline std::optional<PairClassification> classify_pair(const Cell& c1, const Cell& c2, const CellTemplate& tmpl) {
  const auto& group = tmpl.group();
  auto try_from = [&](const Cell& base, const Cell& partner) -> std::optional<PairClassification> {
    // partner = base * g^-1  <=>  g = partner^-1 * base
    CanonicalForm g = group.multiply(group.inverse(partner.left_tip), base.left_tip);
    for (int i = 1; i <= tmpl.n() - 1; ++i) {
      if (g == tmpl.element(CellVertexRole::u(i))) return PairClassification{base.left_tip, {ZigzagPairClass::Kind::Upper, i}};
      if (g == tmpl.element(CellVertexRole::d(i))) return PairClassification{base.left_tip, {ZigzagPairClass::Kind::Lower, i}};
    }
    return std::nullopt;
  };
  if (c1 == c2) return std::nullopt;
  if (auto r = try_from(c1, c2)) return r;
  return try_from(c2, c1);
}

/// Intersection of the boundaries of two precells.
struct PrecellIntersection {
  enum class Shape : std::uint8_t { Empty, SingleVertex, Path, Disconnected, WholeBoundary };

  Shape shape = Shape::Empty;
  /// Shared vertices, in boundary order of the first cell (path order for a path).
  std::vector<CanonicalForm> vertices;
  /// Positions (0..2n-1 in boundary_cycle order) of the shared vertices in each cell.
  std::vector<int> positions_first;
  std::vector<int> positions_second;
  std::size_t edge_count = 0;
};

inline PrecellIntersection precell_intersection(const std::vector<CanonicalForm>& cycle1,
                                                const std::vector<CanonicalForm>& cycle2) {
  const int len = static_cast<int>(cycle1.size());
  std::unordered_map<CanonicalForm, int> pos2;
  for (int p = 0; p < static_cast<int>(cycle2.size()); ++p) pos2.emplace(cycle2[static_cast<std::size_t>(p)], p);

  std::vector<int> shared(static_cast<std::size_t>(len), -1);
  int shared_count = 0;
  for (int p = 0; p < len; ++p) {
    auto it = pos2.find(cycle1[static_cast<std::size_t>(p)]);
    if (it != pos2.end()) {
      shared[static_cast<std::size_t>(p)] = it->second;
      ++shared_count;
    }
  }
  auto edge_shared = [&](int p) {  // edge p -- p+1 of cycle1
    int q = (p + 1) % len;
    int a = shared[static_cast<std::size_t>(p)];
    int b = shared[static_cast<std::size_t>(q)];
    if (a < 0 || b < 0) return false;
    int diff = (a - b + len) % len;
    return diff == 1 || diff == len - 1;
  };

  PrecellIntersection out;
  std::vector<bool> edge(static_cast<std::size_t>(len));
  for (int p = 0; p < len; ++p) {
    edge[static_cast<std::size_t>(p)] = edge_shared(p);
    if (edge[static_cast<std::size_t>(p)]) ++out.edge_count;
  }

  if (shared_count == 0) return out;
  auto push = [&](int p) {
    out.vertices.push_back(cycle1[static_cast<std::size_t>(p)]);
    out.positions_first.push_back(p);
    out.positions_second.push_back(shared[static_cast<std::size_t>(p)]);
  };
  if (static_cast<int>(out.edge_count) == len) {
    out.shape = PrecellIntersection::Shape::WholeBoundary;
    for (int p = 0; p < len; ++p) push(p);
    return out;
  }
  if (out.edge_count == 0) {
    for (int p = 0; p < len; ++p) {
      if (shared[static_cast<std::size_t>(p)] >= 0) push(p);
    }
    out.shape = shared_count == 1 ? PrecellIntersection::Shape::SingleVertex
                                  : PrecellIntersection::Shape::Disconnected;
    return out;
  }
  // a single path exists iff the shared vertices form one run of shared edges
  int start = -1;
  for (int p = 0; p < len; ++p) {
    int prev = (p - 1 + len) % len;
    if (edge[static_cast<std::size_t>(p)] && !edge[static_cast<std::size_t>(prev)]) {
      start = p;
      break;
    }
  }
  int run_vertices = 1;
  for (int p = start; edge[static_cast<std::size_t>(p)]; p = (p + 1) % len) ++run_vertices;
  if (run_vertices != shared_count) {
    for (int p = 0; p < len; ++p) {
      if (shared[static_cast<std::size_t>(p)] >= 0) push(p);
    }
    out.shape = PrecellIntersection::Shape::Disconnected;
    return out;
  }
  for (int k = 0, p = start; k < run_vertices; ++k, p = (p + 1) % len) push(p);
  out.shape = PrecellIntersection::Shape::Path;
  return out;
}

inline PrecellIntersection precell_intersection(const Cell& c1, const Cell& c2, const CellTemplate& tmpl) {
  return precell_intersection(tmpl.boundary_cycle(c1), tmpl.boundary_cycle(c2));
}

inline std::size_t default_max_cells() {
  if (const char* env = std::getenv("ARTINSYS_MAX_CELLS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 400000;
}

/// Word lengths of all elements within `radius` of the identity (BFS in the
/// Cayley graph).
inline std::unordered_map<CanonicalForm, int> ball_elements(const DihedralGroup& group, int radius,
                                                             std::size_t max_elements) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  std::unordered_map<CanonicalForm, int> lengths;
  std::vector<CanonicalForm> frontier{group.identity()};
  lengths.emplace(group.identity(), 0);
  static const Letter kLetters[] = {Letter::from_char('a'), Letter::from_char('b'), Letter::from_char('A'),
                                    Letter::from_char('B')};
  for (int r = 1; r <= radius; ++r) {
    std::vector<CanonicalForm> next;
    for (const auto& f : frontier) {
      for (const Letter& x : kLetters) {
        CanonicalForm g = f;
        group.apply(g, x);
        if (lengths.emplace(g, r).second) next.push_back(std::move(g));
      }
    }
    if (lengths.size() > max_elements) throw BudgetExceeded("ball construction (cells)", lengths.size(), max_elements);
    frontier = std::move(next);
  }
  return lengths;
}

struct BallOptions {
  int radius = 0;
  bool systolize = true;
  std::size_t max_cells = default_max_cells();
};

/// All cells whose left tip has word length <= radius, with their edges and
/// (when systolized) every zigzag edge between two included cells.
///
/// A vertex's link is complete in the ball when its element (or its cell's
/// left tip) has word length <= radius - n: every cell carrying a neighbour,
/// and every cell carrying an edge between two neighbours, then has left tip
/// within distance n - 1 of it.
class BallComplex {
 public:
  BallComplex(DihedralIndex n, const BallOptions& options) : tmpl_(n), radius_(options.radius), systolized_(options.systolize) {
    if (options.radius < 0) throw std::invalid_argument("radius must be non-negative");
    enumerate_elements(options.max_cells);
    build();
  }

  DihedralIndex n() const noexcept { return tmpl_.n(); }
  int radius() const noexcept { return radius_; }
  bool systolized() const noexcept { return systolized_; }
  int link_margin() const noexcept { return tmpl_.n(); }
  const CellTemplate& cell_template() const noexcept { return tmpl_; }
  const DihedralGroup& group() const noexcept { return tmpl_.group(); }
  const SimplicialGraph<VertexId>& graph() const noexcept { return graph_; }

  /// Cells sorted by left tip.
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  bool contains_cell(const CanonicalForm& tip) const { return lengths_.count(tip) != 0; }

  /// Word length of an element of length <= radius.
  std::optional<int> word_length(const CanonicalForm& g) const {
    auto it = lengths_.find(g);
    if (it == lengths_.end()) return std::nullopt;
    return it->second;
  }

  bool in_exact_region(const VertexId& v) const {
    auto len = word_length(v.element);
    return len && *len <= radius_ - link_margin();
  }

  bool is_zigzag(const VertexId& x, const VertexId& y) const {
    return zigzag_.count(x < y ? std::make_pair(x, y) : std::make_pair(y, x)) != 0;
  }

  const std::set<std::pair<VertexId, VertexId>>& zigzag_edges() const noexcept { return zigzag_; }

 private:
  void enumerate_elements(std::size_t max_cells) {
    lengths_ = ball_elements(tmpl_.group(), radius_, max_cells);
  }

  void build() {
    cells_.reserve(lengths_.size());
    for (const auto& [g, len] : lengths_) cells_.push_back(Cell{g});
    std::sort(cells_.begin(), cells_.end());
    for (const auto& cell : cells_) {
      for (const auto& role : tmpl_.roles()) graph_.add_vertex(tmpl_.vertex(cell, role));
      for (auto& [x, y] : cell_edges(cell, tmpl_)) graph_.add_edge(x, y);
    }
    if (!systolized_ || n() < 3) return;
    for (const auto& cell : cells_) {
      for (auto kind : {ZigzagPairClass::Kind::Upper, ZigzagPairClass::Kind::Lower}) {
        for (int i = 1; i <= n() - 2; ++i) {
          ZigzagPairClass cls{kind, i};
          CanonicalForm partner = tmpl_.translate(cell.left_tip, cls);
          if (!contains_cell(partner)) continue;
          for (auto [j, jp] : artinsys::zigzag_edges(n(), cls)) {
            VertexId x = VertexId::interior(cell.left_tip, j);
            VertexId y = VertexId::interior(partner, jp);
            graph_.add_edge(x, y);
            zigzag_.insert(x < y ? std::make_pair(x, y) : std::make_pair(y, x));
          }
        }
      }
    }
  }

  CellTemplate tmpl_;
  int radius_;
  bool systolized_;
  std::unordered_map<CanonicalForm, int> lengths_;
  std::vector<Cell> cells_;
  SimplicialGraph<VertexId> graph_;
  std::set<std::pair<VertexId, VertexId>> zigzag_;
};

inline BallComplex build_ball(DihedralIndex n, int radius, bool systolize,
                              std::size_t max_cells = default_max_cells()) {
  return BallComplex(n, BallOptions{radius, systolize, max_cells});
}

namespace detail {

// Largest clique within `candidates` (Bron-Kerbosch with pivoting).
template <class Key>
std::size_t clique_number(const SimplicialGraph<Key>& g, std::vector<std::size_t> candidates) {
  std::size_t best = 0;
  auto expand = [&](auto&& self, std::size_t size, std::vector<std::size_t> p, std::vector<std::size_t> x) -> void {
    if (p.empty() && x.empty()) {
      best = std::max(best, size);
      return;
    }
    if (size + p.size() <= best) return;
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t pivot_deg = 0;
    for (const auto* set : {&p, &x}) {
      for (std::size_t u : *set) {
        std::size_t deg = 0;
        for (std::size_t w : p) deg += g.adjacent(u, w) ? 1 : 0;
        if (deg >= pivot_deg) {
          pivot_deg = deg;
          pivot = u;
        }
      }
    }
    std::vector<std::size_t> todo;
    for (std::size_t v : p) {
      if (!g.adjacent(pivot, v)) todo.push_back(v);
    }
    for (std::size_t v : todo) {
      std::vector<std::size_t> np, nx;
      for (std::size_t w : p) {
        if (g.adjacent(v, w)) np.push_back(w);
      }
      for (std::size_t w : x) {
        if (g.adjacent(v, w)) nx.push_back(w);
      }
      self(self, size + 1, std::move(np), std::move(nx));
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  expand(expand, 0, std::move(candidates), {});
  return best;
}

}  // namespace detail

/// Size of a largest clique through an exact-region vertex, minus one. The
/// exact region meets every vertex orbit once the radius reaches n.
inline int max_simplex_dimension(const BallComplex& ball) {
  const auto& g = ball.graph();
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!ball.in_exact_region(g.key(v))) continue;
    std::vector<std::size_t> nbrs(g.neighbor_indices(v));
    best = std::max(best, 1 + detail::clique_number(g, std::move(nbrs)));
  }
  if (best == 0) throw std::invalid_argument("ball has an empty exact region");
  return static_cast<int>(best) - 1;
}

}  // namespace artinsys

template <>
struct std::hash<artinsys::VertexId> {
  std::size_t operator()(const artinsys::VertexId& v) const noexcept {
    std::size_t h = std::hash<artinsys::CanonicalForm>{}(v.element);
    return h ^ (static_cast<std::size_t>(v.index) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(v.kind));
  }
};

#endif  // ARTINSYS_DIHEDRAL_COMPLEX_HPP
