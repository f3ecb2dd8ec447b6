#ifndef ARTINSYS_LEMMA_SUITE_HPP
#define ARTINSYS_LEMMA_SUITE_HPP

// Exhaustive desk-scale checks of the structural facts about X, one record
// per (fact, n). Every check is a pure function of n and the options, so the
// suite output does not depend on the worker count.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "artinsys/dihedral_complex.hpp"
#include "artinsys/dihedral_words.hpp"
#include "artinsys/link_analysis.hpp"
#include "artinsys/parallel.hpp"

namespace artinsys {

struct LemmaResult {
  std::string lemma;
  int n = 0;
  bool pass = true;
  std::size_t checked = 0;
  std::string detail;
  std::vector<std::string> witness;

  void fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

struct LemmaSuiteOptions {
  bool systolize = true;
  unsigned workers = 1;
  std::size_t max_cells = default_max_cells();
  /// Radius of the balls used for precell intersections; 0 picks 2n for
  /// n <= 4 and n + 2 above.
  int intersection_radius = 0;
};

inline int default_intersection_radius(int n) { return n <= 4 ? 2 * n : n + 2; }

/// Lemma ids in report order.
inline const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"words",           "cell-embedded", "connected-intersection",
                                            "disjoint",        "zigzag-scheme", "technical-lemma",
                                            "real-link",       "interior-link", "distance",
                                            "dimension"};
  return ids;
}

/// Whether a lemma id applies to n (n = 2 has no interior vertices).
inline bool lemma_applies(const std::string& id, int n) {
  if (n >= 3) return true;
  return id != "zigzag-scheme" && id != "technical-lemma" && id != "interior-link";
}

namespace detail {

inline std::vector<std::string> keys_of(const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.key());
  return out;
}

}  // namespace detail

// ---- words ---------------------------------------------------------------

inline LemmaResult check_words(DihedralIndex n) {
  LemmaResult res{"words", n};
  auto [upper, lower] = relator_halves(n);
  std::vector<std::string> relator_class{upper, lower};
  std::sort(relator_class.begin(), relator_class.end());
  for (int len = 0; len <= n; ++len) {
    auto classes = positive_equal_classes(len, n);
    std::vector<std::vector<std::string>> merged;
    for (auto& c : classes) {
      res.checked += c.size();
      if (c.size() > 1) merged.push_back(c);
    }
    bool ok = len < n ? merged.empty() : merged == std::vector<std::vector<std::string>>{relator_class};
    if (!ok) {
      res.fail("unexpected equal positive words at length " + std::to_string(len));
      if (!merged.empty()) res.witness = merged.front();
    }
  }
  int probe_length = std::min(n + 2, 10);
  auto probe = monoid_injectivity_probe(probe_length, n);
  if (!probe.ok()) {
    res.fail("group and monoid equality disagree up to length " + std::to_string(probe_length));
    res.witness = {probe.discrepancies.front().first, probe.discrepancies.front().second};
  }
  return res;
}

// ---- precell intersections ----------------------------------------------

struct PrecellBall {
  DihedralIndex n;
  int radius;
  std::vector<Cell> cells;
  std::vector<std::vector<CanonicalForm>> cycles;

  PrecellBall(DihedralIndex index, int r, std::size_t max_cells) : n(index), radius(r) {
    CellTemplate tmpl(n);
    auto lengths = ball_elements(tmpl.group(), r, max_cells);
    for (const auto& [g, len] : lengths) cells.push_back(Cell{g});
    std::sort(cells.begin(), cells.end());
    cycles.reserve(cells.size());
    for (const auto& c : cells) cycles.push_back(tmpl.boundary_cycle(c));
  }
};

inline LemmaResult check_cell_embedded(const PrecellBall& ball) {
  LemmaResult res{"cell-embedded", ball.n};
  for (std::size_t k = 0; k < ball.cells.size(); ++k) {
    std::set<CanonicalForm> distinct(ball.cycles[k].begin(), ball.cycles[k].end());
    ++res.checked;
    if (distinct.size() != ball.cycles[k].size()) {
      res.fail("boundary of a precell revisits a vertex");
      res.witness = {ball.cells[k].left_tip.key()};
    }
  }
  res.detail = res.pass ? "radius " + std::to_string(ball.radius) + ", every precell boundary is embedded" : res.detail;
  return res;
}

namespace detail {

// Partners of each cell whose intersection with it is a path with at least
// one edge, split by the half of the cell containing that path.
struct HalfPartners {
  std::vector<std::vector<std::size_t>> upper;
  std::vector<std::vector<std::size_t>> lower;
};

inline bool within_upper(const std::vector<int>& positions, int n) {
  return std::all_of(positions.begin(), positions.end(), [n](int p) { return p <= n; });
}

inline bool within_lower(const std::vector<int>& positions, int n) {
  return std::all_of(positions.begin(), positions.end(), [n](int p) { return p == 0 || p >= n; });
}

}  // namespace detail

/// Checks every pair of precells in the ball that shares a vertex; fills
/// `partners` for the triple check.
inline LemmaResult check_connected_intersection(const PrecellBall& ball, detail::HalfPartners* partners = nullptr) {
  LemmaResult res{"connected-intersection", ball.n};
  const int n = ball.n;
  const std::size_t count = ball.cells.size();
  std::unordered_map<CanonicalForm, std::vector<std::size_t>> owners;
  for (std::size_t k = 0; k < count; ++k) {
    for (const auto& v : ball.cycles[k]) owners[v].push_back(k);
  }
  if (partners) {
    partners->upper.assign(count, {});
    partners->lower.assign(count, {});
  }
  auto describe = [&](std::size_t a, std::size_t b, const std::string& what) {
    res.fail(what);
    if (res.witness.empty()) res.witness = {ball.cells[a].left_tip.key(), ball.cells[b].left_tip.key()};
  };
  for (std::size_t a = 0; a < count; ++a) {
    std::set<std::size_t> others;
    for (const auto& v : ball.cycles[a]) {
      for (std::size_t b : owners[v]) {
        if (b > a) others.insert(b);
      }
    }
    for (std::size_t b : others) {
      ++res.checked;
      auto inter = precell_intersection(ball.cycles[a], ball.cycles[b]);
      using Shape = PrecellIntersection::Shape;
      if (inter.shape != Shape::SingleVertex && inter.shape != Shape::Path) {
        describe(a, b, "intersection is not connected");
        continue;
      }
      bool half_ok = true;
      for (const auto* pos : {&inter.positions_first, &inter.positions_second}) {
        bool in_half = detail::within_upper(*pos, n) || detail::within_lower(*pos, n);
        if (!in_half || static_cast<int>(pos->size()) > n) half_ok = false;
      }
      if (!half_ok) {
        describe(a, b, "intersection is not properly contained in one half");
        continue;
      }
      if (inter.edge_count == 0) continue;
      auto tip_kind = [n](int p) { return p == 0 ? 0 : (p == n ? 1 : -1); };
      const std::size_t last = inter.vertices.size() - 1;
      bool tips_ok = false;
      for (auto [e1, e2] : {std::pair<std::size_t, std::size_t>{0, last}, {last, 0}}) {
        int t1 = tip_kind(inter.positions_first[e1]);
        int t2 = tip_kind(inter.positions_second[e2]);
        if (t1 >= 0 && t2 >= 0 && t1 != t2) tips_ok = true;
      }
      if (!tips_ok) {
        describe(a, b, "path endpoints are not a left and a right tip");
        continue;
      }
      if (partners) {
        (detail::within_upper(inter.positions_first, n) ? partners->upper : partners->lower)[a].push_back(b);
        (detail::within_upper(inter.positions_second, n) ? partners->upper : partners->lower)[b].push_back(a);
      }
    }
  }
  return res;
}

/// Cells meeting a middle cell along paths in opposite halves share at most
/// one vertex.
inline LemmaResult check_disjoint(const PrecellBall& ball, const detail::HalfPartners& partners) {
  LemmaResult res{"disjoint", ball.n};
  for (std::size_t mid = 0; mid < ball.cells.size(); ++mid) {
    for (std::size_t a : partners.upper[mid]) {
      std::set<CanonicalForm> va(ball.cycles[a].begin(), ball.cycles[a].end());
      for (std::size_t c : partners.lower[mid]) {
        if (a == c) continue;
        ++res.checked;
        std::size_t shared = 0;
        for (const auto& v : ball.cycles[c]) shared += va.count(v);
        if (shared > 1) {
          res.fail("outer cells share " + std::to_string(shared) + " vertices");
          if (res.witness.empty()) {
            res.witness = {ball.cells[a].left_tip.key(), ball.cells[mid].left_tip.key(), ball.cells[c].left_tip.key()};
          }
        }
      }
    }
  }
  return res;
}

// ---- zigzag scheme ---------------------------------------------------------

inline LemmaResult check_zigzag_scheme(const BallComplex& ball) {
  LemmaResult res{"zigzag-scheme", ball.n()};
  const auto& tmpl = ball.cell_template();
  const auto& g = ball.graph();
  for (const auto& [x, y] : ball.zigzag_edges()) {
    ++res.checked;
    Cell cx{x.element}, cy{y.element};
    auto inter = precell_intersection(cx, cy, tmpl);
    auto cls = classify_pair(cx, cy, tmpl);
    if (inter.edge_count < 2 || !cls || cls->cls.i > ball.n() - 2) {
      res.fail("zigzag edge between cells sharing fewer than two edges");
      if (res.witness.empty()) res.witness = {x.key(), y.key()};
      continue;
    }
    bool apex = std::any_of(inter.vertices.begin(), inter.vertices.end(), [&](const CanonicalForm& v) {
      VertexId z = VertexId::real(v);
      return g.adjacent(z, x) && g.adjacent(z, y);
    });
    if (!apex) {
      res.fail("zigzag edge spans no triangle with the cell intersection");
      if (res.witness.empty()) res.witness = {x.key(), y.key()};
    }
  }
  return res;
}

// ---- technical lemma table -------------------------------------------------

/// Indices k of interior vertices of the cell with left tip `tip` adjacent to v.
inline std::set<int> interior_neighbors_in_cell(const BallComplex& ball, const VertexId& v, const CanonicalForm& tip) {
  std::set<int> out;
  for (const auto& w : ball.graph().neighbors(v)) {
    if (!w.is_real() && w.element == tip) out.insert(w.index);
  }
  return out;
}

inline LemmaResult check_technical_lemma(const BallComplex& ball) {
  LemmaResult res{"technical-lemma", ball.n()};
  const int n = ball.n();
  const auto& tmpl = ball.cell_template();
  const auto& group = ball.group();
  for (bool upper : {true, false}) {
    auto tip = [&](int j) {
      return group.inverse(tmpl.element(upper ? CellVertexRole::u(j) : CellVertexRole::d(j)));
    };
    const std::string g = upper ? "u" : "d";
    for (int i = 1; i <= n - 2; ++i) {
      for (int j = i + 1; j <= n - 1; ++j) {
        ++res.checked;
        auto name = [&](int jj, int k) { return g + std::to_string(jj) + "^-1 c" + std::to_string(k); };
        VertexId xi = VertexId::interior(tip(i), i);
        auto seen = interior_neighbors_in_cell(ball, xi, tip(j));
        std::set<int> expected = j <= n - 2 ? std::set<int>{j - 1, j} : std::set<int>{j - 1};
        if (seen != expected) {
          res.fail("interior neighbours of " + name(i, i) + " in " + g + std::to_string(j) + "^-1 cell differ");
          if (res.witness.empty()) res.witness = {xi.key()};
        }
        if (j <= n - 2) {
          VertexId xj = VertexId::interior(tip(j), j);
          auto back = interior_neighbors_in_cell(ball, xj, tip(i));
          if (back != std::set<int>{i, i + 1}) {
            res.fail("interior neighbours of " + name(j, j) + " in " + g + std::to_string(i) + "^-1 cell differ");
            if (res.witness.empty()) res.witness = {xj.key()};
          }
        }
        if (i >= 2 && !ball.graph().adjacent(VertexId::interior(tip(j), j - 1), VertexId::interior(tip(i), i - 1))) {
          res.fail(name(j, j - 1) + " and " + name(i, i - 1) + " are not adjacent");
          if (res.witness.empty()) {
            res.witness = {VertexId::interior(tip(j), j - 1).key(), VertexId::interior(tip(i), i - 1).key()};
          }
        }
      }
    }
  }
  return res;
}

// ---- links -----------------------------------------------------------------

/// The degenerate model-graph partition of the 6-cycle link when n = 2.
inline ModelGraphPartition<VertexId> n2_link_partition() {
  DihedralGroup group(DihedralIndex(2));
  auto r = [&](std::string_view w) { return VertexId::real(group.element(w)); };
  ModelGraphPartition<VertexId> p;
  p.c_l = r("AB");
  p.c_r = r("ab");
  p.u_l = {r("B")};
  p.u_r = {r("a")};
  p.d_l = {r("A")};
  p.d_r = {r("b")};
  return p;
}

inline bool is_cycle_graph(const SimplicialGraph<VertexId>& g) {
  if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count()) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  auto vs = g.vertices();
  for (const auto& v : vs) {
    if (link_distance(g, vs.front(), v) == kInfiniteDistance) return false;
  }
  return true;
}

namespace detail {

inline void check_partitioned_link(LemmaResult& res, const SimplicialGraph<VertexId>& link,
                                   const NamedPartition& part, const std::string& label, int n) {
  ++res.checked;
  if (auto w = find_full_short_cycle(link)) {
    res.fail(label + " link has a full " + std::to_string(w->length()) + "-cycle");
    if (res.witness.empty()) res.witness = keys_of(w->vertices);
  }
  if (link.vertex_count() != static_cast<std::size_t>(4 * n - 2)) {
    res.fail(label + " link has " + std::to_string(link.vertex_count()) + " vertices");
  }
  if (part.all_vertices() != link.vertices()) {
    res.fail(label + " partition does not match the link vertices");
    return;
  }
  auto model = check_model_graph(link, part.partition);
  if (!model.pass) res.fail(label + " link is not a model graph (condition " + std::to_string(model.failed_condition) + ": " + model.detail + ")");
}

}  // namespace detail

inline LemmaResult check_real_link(const BallComplex& ball) {
  LemmaResult res{"real-link", ball.n()};
  const int n = ball.n();
  auto link = link_of(VertexId::real(ball.group().identity()), ball);
  if (n == 2) {
    ++res.checked;
    if (auto w = find_full_short_cycle(link)) {
      res.fail("identity link has a full short cycle");
      res.witness = detail::keys_of(w->vertices);
    }
    if (!is_cycle_graph(link) || link.vertex_count() != 6) res.fail("identity link is not a 6-cycle");
    auto model = check_model_graph(link, n2_link_partition());
    if (!model.pass) res.fail("degenerate partition rejected: " + model.detail);
    return res;
  }
  detail::check_partitioned_link(res, link, real_link_partition(ball.n(), ball.cell_template()), "identity", n);
  return res;
}

inline LemmaResult check_interior_links(const BallComplex& ball) {
  LemmaResult res{"interior-link", ball.n()};
  const int n = ball.n();
  for (int i = 1; i <= n - 2; ++i) {
    auto link = link_of(VertexId::interior(ball.group().identity(), i), ball);
    detail::check_partitioned_link(res, link, interior_link_partition(ball.n(), i, ball.cell_template()),
                                   "c" + std::to_string(i), n);
  }
  return res;
}

/// The four real neighbours of the identity named by edge direction:
/// a+ = a^-1, a- = a, b+ = b^-1, b- = b.
struct SignedGenerators {
  VertexId a_plus, a_minus, b_plus, b_minus;
};

inline SignedGenerators signed_generators(const DihedralGroup& group) {
  return {VertexId::real(group.element("A")), VertexId::real(group.element("a")), VertexId::real(group.element("B")),
          VertexId::real(group.element("b"))};
}

inline LemmaResult check_distances(const BallComplex& ball) {
  LemmaResult res{"distance", ball.n()};
  const int n = ball.n();
  const auto& tmpl = ball.cell_template();
  const auto& group = ball.group();
  auto link = link_of(VertexId::real(group.identity()), ball);
  auto s = signed_generators(group);

  // identification of the signed generators with cell vertices
  CanonicalForm r_inv = group.inverse(tmpl.element(CellVertexRole::right()));
  std::vector<std::pair<VertexId, CanonicalForm>> names{
      {s.a_minus, tmpl.element(CellVertexRole::u(1))},
      {s.b_minus, tmpl.element(CellVertexRole::d(1))},
      {s.b_plus, group.multiply(r_inv, tmpl.element(CellVertexRole::u(n - 1)))},
      {s.a_plus, group.multiply(r_inv, tmpl.element(CellVertexRole::d(n - 1)))}};
  for (const auto& [v, e] : names) {
    ++res.checked;
    if (v.element != e) res.fail("signed generator " + v.key() + " is not the expected cell vertex");
  }
  std::vector<VertexId> reals;
  for (const auto& v : link.vertices()) {
    if (v.is_real()) reals.push_back(v);
  }
  std::vector<VertexId> expected{s.a_plus, s.a_minus, s.b_plus, s.b_minus};
  std::sort(expected.begin(), expected.end());
  if (n >= 3 && reals != expected) {
    res.fail("identity link does not have exactly the four signed generators as real vertices");
  }

  struct Want {
    VertexId x, y;
    int d;
  };
  std::vector<Want> table;
  if (n >= 3) {
    table = {{s.a_plus, s.a_minus, 3}, {s.b_plus, s.b_minus, 3}, {s.a_plus, s.b_plus, 2},
             {s.a_plus, s.b_minus, 2}, {s.a_minus, s.b_plus, 2}, {s.a_minus, s.b_minus, 2}};
  } else {
    table = {{s.a_plus, s.b_minus, 1}, {s.a_minus, s.b_plus, 1}, {s.a_plus, s.b_plus, 2},
             {s.a_minus, s.b_minus, 2}, {s.a_plus, s.a_minus, 3}, {s.b_plus, s.b_minus, 3}};
  }
  for (const auto& w : table) {
    ++res.checked;
    int got = link_distance(link, w.x, w.y);
    if (got != w.d) {
      std::ostringstream msg;
      msg << "d(" << w.x.key() << ", " << w.y.key() << ") = "
          << (got == kInfiniteDistance ? std::string("inf") : std::to_string(got)) << ", expected " << w.d;
      res.fail(msg.str());
      if (res.witness.empty()) res.witness = {w.x.key(), w.y.key()};
    }
  }
  return res;
}

inline LemmaResult check_dimension(const BallComplex& ball) {
  LemmaResult res{"dimension", ball.n()};
  int dim = max_simplex_dimension(ball);
  res.checked = 1;
  res.detail = "max simplex dimension " + std::to_string(dim);
  if (dim != ball.n()) res.fail("max simplex dimension " + std::to_string(dim) + ", expected " + std::to_string(ball.n()));
  return res;
}

// ---- driver ----------------------------------------------------------------

/// Runs every applicable check for each n; results ordered by n, then by
/// lemma_ids().
inline std::vector<LemmaResult> run_lemma_suite(const std::vector<int>& ns, const LemmaSuiteOptions& options) {
  struct Task {
    int n;
    std::string group;  // a lemma id, or "precells" for the three intersection facts
  };
  std::vector<Task> tasks;
  for (int n : ns) {
    (void)DihedralIndex(n);  // rejects n < 2 before any work starts
    tasks.push_back({n, "words"});
    tasks.push_back({n, "precells"});
    for (const auto& id : lemma_ids()) {
      if (id == "words" || id == "cell-embedded" || id == "connected-intersection" || id == "disjoint") continue;
      if (lemma_applies(id, n)) tasks.push_back({n, id});
    }
  }

  std::vector<std::shared_ptr<const BallComplex>> balls(ns.size());
  parallel_for(ns.size(), options.workers, [&](std::size_t k) {
    balls[k] = std::make_shared<const BallComplex>(DihedralIndex(ns[k]),
                                                   BallOptions{ns[k], options.systolize, options.max_cells});
  });
  std::map<int, std::shared_ptr<const BallComplex>> ball_of;
  for (std::size_t k = 0; k < ns.size(); ++k) ball_of[ns[k]] = balls[k];

  std::vector<std::vector<LemmaResult>> slots(tasks.size());
  parallel_for(tasks.size(), options.workers, [&](std::size_t k) {
    const Task& t = tasks[k];
    DihedralIndex n(t.n);
    const BallComplex& ball = *ball_of.at(t.n);
    if (t.group == "words") {
      slots[k].push_back(check_words(n));
    } else if (t.group == "precells") {
      int radius = options.intersection_radius > 0 ? options.intersection_radius : default_intersection_radius(t.n);
      PrecellBall pb(n, radius, options.max_cells);
      detail::HalfPartners partners;
      slots[k].push_back(check_cell_embedded(pb));
      slots[k].push_back(check_connected_intersection(pb, &partners));
      slots[k].push_back(check_disjoint(pb, partners));
    } else if (t.group == "zigzag-scheme") {
      slots[k].push_back(check_zigzag_scheme(ball));
    } else if (t.group == "technical-lemma") {
      slots[k].push_back(check_technical_lemma(ball));
    } else if (t.group == "real-link") {
      slots[k].push_back(check_real_link(ball));
    } else if (t.group == "interior-link") {
      slots[k].push_back(check_interior_links(ball));
    } else if (t.group == "distance") {
      slots[k].push_back(check_distances(ball));
    } else if (t.group == "dimension") {
      slots[k].push_back(check_dimension(ball));
    }
  });

  std::vector<LemmaResult> out;
  for (auto& s : slots) {
    for (auto& r : s) out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const LemmaResult& x, const LemmaResult& y) {
    auto rank = [](const std::string& id) {
      const auto& ids = lemma_ids();
      return std::find(ids.begin(), ids.end(), id) - ids.begin();
    };
    return std::make_pair(x.n, rank(x.lemma)) < std::make_pair(y.n, rank(y.lemma));
  });
  return out;
}

}  // namespace artinsys

#endif  // ARTINSYS_LEMMA_SUITE_HPP
