#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "artinsys/dihedral_complex.hpp"
#include "artinsys/lemma_suite.hpp"
#include "artinsys/link_analysis.hpp"
#include "oracles.hpp"

using namespace artinsys;

namespace {

SimplicialGraph<int> cycle_graph(int len) {
  SimplicialGraph<int> g;
  for (int k = 0; k < len; ++k) g.add_edge(k, (k + 1) % len);
  return g;
}

SimplicialGraph<int> random_graph(std::mt19937_64& rng, int n, double p) {
  SimplicialGraph<int> g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

template <class Key>
std::set<std::vector<Key>> library_cycles(const SimplicialGraph<Key>& g) {
  std::set<std::vector<Key>> out;
  for (const auto& w : all_full_short_cycles(g)) out.insert(w.vertices);
  return out;
}

template <class Key>
void expect_matches_oracle(const SimplicialGraph<Key>& g, bool by_subsets) {
  auto want = oracle::induced_short_cycles(g, by_subsets);
  EXPECT_EQ(library_cycles(g), want);
  auto found = find_full_short_cycle(g);
  EXPECT_EQ(found.has_value(), !want.empty());
  if (found) EXPECT_EQ(found->vertices, *want.begin());
}

// Shared balls, built once per process.
const BallComplex& ball_for(int n) {
  static std::map<int, std::unique_ptr<BallComplex>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<BallComplex>(build_ball(DihedralIndex(n), n, true));
  return *slot;
}

SimplicialGraph<VertexId> identity_link(int n) {
  const auto& ball = ball_for(n);
  return link_of(VertexId::real(ball.group().identity()), ball);
}

SimplicialGraph<VertexId> interior_link(int n, int i) {
  const auto& ball = ball_for(n);
  return link_of(VertexId::interior(ball.group().identity(), i), ball);
}

VertexId by_name(const NamedPartition& p, const std::string& name) {
  for (const auto& [v, s] : p.names) {
    if (s == name) return v;
  }
  throw std::out_of_range("no vertex named " + name);
}

}  // namespace

TEST(FullShortCycle, PlainFiveCycle) {
  auto g = cycle_graph(5);
  auto w = find_full_short_cycle(g);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->vertices, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(is_6_large(g));
  EXPECT_TRUE(is_6_large(cycle_graph(6)));
  EXPECT_TRUE(is_6_large(cycle_graph(3)));
}

TEST(FullShortCycle, ChordLeavesInducedSquare) {
  SimplicialGraph<int> g;
  for (int k = 1; k <= 5; ++k) g.add_edge(k, k % 5 + 1);
  g.add_edge(1, 3);
  auto w = find_full_short_cycle(g);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->vertices, (std::vector<int>{1, 3, 4, 5}));
}

TEST(FullShortCycle, MatchesSubsetOracleOnSmallRandomGraphs) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 200; ++t) {
    int n = 4 + static_cast<int>(rng() % 11);
    double p = 0.15 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    expect_matches_oracle(random_graph(rng, n, p), true);
  }
}

TEST(FullShortCycle, MatchesWalkOracleOnLargerGraphs) {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 12; ++t) {
    int n = 40 + static_cast<int>(rng() % 161);  // up to 200 vertices
    double avg_degree = 2.0 + static_cast<double>(rng() % 5);
    expect_matches_oracle(random_graph(rng, n, avg_degree / n), false);
  }
}

TEST(FullShortCycle, MatchesOraclesOnDihedralLinks) {
  for (int n = 3; n <= 6; ++n) {
    expect_matches_oracle(identity_link(n), false);
    for (int i = 1; i <= n - 2; ++i) expect_matches_oracle(interior_link(n, i), false);
  }
  // unsystolized links do contain short cycles
  for (int n = 3; n <= 5; ++n) {
    auto ball = build_ball(DihedralIndex(n), n, false);
    auto link = link_of(VertexId::real(ball.group().identity()), ball);
    expect_matches_oracle(link, true);
    EXPECT_FALSE(is_6_large(link));
  }
}

TEST(FullShortCycle, RealLinkOfDA4IsSixLarge) { EXPECT_TRUE(is_6_large(identity_link(4))); }

TEST(Prism, SubdividedTriangleTimesInterval) {
  // simplices [v0..vi, wi..w2]: v_i ~ w_j iff i <= j
  SimplicialGraph<std::string> g;
  std::vector<std::string> v{"v0", "v1", "v2"}, w{"w0", "w1", "w2"};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      g.add_edge(v[i], v[j]);
      g.add_edge(w[i], w[j]);
    }
    for (int j = i; j < 3; ++j) g.add_edge(v[i], w[j]);
  }
  auto order = recognize_prism(g, std::span<const std::string>(v), std::span<const std::string>(w));
  ASSERT_TRUE(order);
  EXPECT_EQ(order->ordering, v);
  EXPECT_EQ(order->neighbor_chains[0], w);
  EXPECT_EQ(order->neighbor_chains[2], (std::vector<std::string>{"w2"}));

  // insertion order does not matter
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    auto vs = v, ws = w;
    std::shuffle(vs.begin(), vs.end(), rng);
    std::shuffle(ws.begin(), ws.end(), rng);
    SimplicialGraph<std::string> h;
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& x : vs) h.add_vertex(x);
    for (auto& x : ws) h.add_vertex(x);
    for (auto& [x, y] : edges) h.add_edge(x, y);
    EXPECT_EQ(recognize_prism(h, std::span<const std::string>(vs), std::span<const std::string>(ws)), order);
  }
}

TEST(Prism, TrivialAndFailing) {
  SimplicialGraph<int> e;
  e.add_edge(1, 2);
  std::vector<int> a{1}, b{2};
  EXPECT_TRUE(recognize_prism(e, std::span<const int>(a), std::span<const int>(b)));

  SimplicialGraph<int> k;
  k.add_edge(1, 2);
  k.add_edge(3, 4);
  for (int x : {1, 2}) {
    for (int y : {3, 4}) k.add_edge(x, y);
  }
  std::vector<int> l{1, 2}, r{3, 4};
  auto res = recognize_prism_detailed(k, std::span<const int>(l), std::span<const int>(r));
  EXPECT_FALSE(res.order);
  EXPECT_NE(res.failure.find("strict"), std::string::npos);

  std::vector<int> overlap{1, 3};
  EXPECT_THROW(recognize_prism(k, std::span<const int>(l), std::span<const int>(overlap)), std::invalid_argument);
  std::vector<int> three{1, 2, 3}, four{4};
  EXPECT_FALSE(recognize_prism(k, std::span<const int>(three), std::span<const int>(four)));
}

TEST(ModelGraph, HexagonWithSingletonParts) {
  auto g = cycle_graph(6);
  // c_l=0, u_l=1, u_r=2, c_r=3, d_r=4, d_l=5
  ModelGraphPartition<int> p{0, 3, {1}, {2}, {5}, {4}};
  auto check = check_model_graph(g, p);
  EXPECT_TRUE(check.pass) << check.detail;
}

TEST(ModelGraph, RejectsNonPartition) {
  auto g = cycle_graph(6);
  ModelGraphPartition<int> missing{0, 3, {1}, {2}, {5}, {}};
  EXPECT_THROW(check_model_graph(g, missing), std::invalid_argument);
  ModelGraphPartition<int> overlap{0, 3, {1}, {2}, {5}, {5}};
  EXPECT_THROW(check_model_graph(g, overlap), std::invalid_argument);
  ModelGraphPartition<int> stray{0, 3, {1}, {2}, {5}, {9}};
  EXPECT_THROW(check_model_graph(g, stray), std::invalid_argument);
}

TEST(ModelGraph, DihedralLinksPass) {
  for (int n = 3; n <= 7; ++n) {
    const auto& ball = ball_for(n);
    auto real = real_link_partition(DihedralIndex(n), ball.cell_template());
    auto check = check_model_graph(identity_link(n), real.partition);
    EXPECT_TRUE(check.pass) << n << ": " << check.detail;
    EXPECT_TRUE(is_6_large(identity_link(n)));
    for (int i = 1; i <= n - 2; ++i) {
      auto part = interior_link_partition(DihedralIndex(n), i, ball.cell_template());
      auto ic = check_model_graph(interior_link(n, i), part.partition);
      EXPECT_TRUE(ic.pass) << n << "," << i << ": " << ic.detail;
      EXPECT_TRUE(is_6_large(interior_link(n, i)));
    }
  }
}

TEST(ModelGraph, DeletingALowerPrismEdgeFails) {
  const int n = 4;
  auto part = real_link_partition(DihedralIndex(n));
  auto g = identity_link(n);
  // drop one D_l -- D_r edge
  SimplicialGraph<VertexId> h;
  for (const auto& v : g.vertices()) h.add_vertex(v);
  std::set<VertexId> dl(part.partition.d_l.begin(), part.partition.d_l.end());
  std::set<VertexId> dr(part.partition.d_r.begin(), part.partition.d_r.end());
  bool dropped = false;
  for (const auto& [x, y] : g.edges()) {
    bool cross = (dl.count(x) && dr.count(y)) || (dl.count(y) && dr.count(x));
    if (cross && !dropped) {
      dropped = true;
      continue;
    }
    h.add_edge(x, y);
  }
  ASSERT_TRUE(dropped);
  auto check = check_model_graph(h, part.partition);
  EXPECT_FALSE(check.pass);
  EXPECT_EQ(check.failed_condition, 4);
}

TEST(ModelGraph, EveryRecognizedModelGraphIsSixLarge) {
  // random subsets of prism-structured graphs: whenever the checker accepts, no short cycle exists
  std::mt19937_64 rng(211);
  std::size_t accepted = 0;
  for (int t = 0; t < 400; ++t) {
    const int k = 1 + static_cast<int>(rng() % 3);
    // vertices: 0 = c_l, 1 = c_r, then U_l, U_r, D_l, D_r blocks of size k
    SimplicialGraph<int> g;
    auto block = [&](int b, int j) { return 2 + b * k + j; };
    for (int v = 0; v < 2 + 4 * k; ++v) g.add_vertex(v);
    std::bernoulli_distribution coin(0.8);
    for (int b = 0; b < 4; ++b) {
      for (int j = 0; j < k; ++j) {
        g.add_edge(b % 2 == 0 ? 0 : 1, block(b, j));
        for (int jj = j + 1; jj < k; ++jj) g.add_edge(block(b, j), block(b, jj));
      }
    }
    for (int pair : {0, 2}) {
      for (int j = 0; j < k; ++j) {
        for (int jj = 0; jj < k; ++jj) {
          if (j <= jj || coin(rng)) g.add_edge(block(pair, j), block(pair + 1, jj));
        }
      }
    }
    ModelGraphPartition<int> p;
    p.c_l = 0;
    p.c_r = 1;
    for (int j = 0; j < k; ++j) {
      p.u_l.push_back(block(0, j));
      p.u_r.push_back(block(1, j));
      p.d_l.push_back(block(2, j));
      p.d_r.push_back(block(3, j));
    }
    if (!check_model_graph(g, p).pass) continue;
    ++accepted;
    EXPECT_TRUE(is_6_large(g));
    EXPECT_TRUE(oracle::induced_short_cycles(g, true).empty());
  }
  EXPECT_GT(accepted, 20u);
}

TEST(Partition, RealLinkExamples) {
  auto p3 = real_link_partition(DihedralIndex(3));
  for (const auto* s : {&p3.partition.u_l, &p3.partition.u_r, &p3.partition.d_l, &p3.partition.d_r}) {
    EXPECT_EQ(s->size(), 2u);
  }
  EXPECT_EQ(p3.all_vertices().size(), 10u);

  CellTemplate t4{DihedralIndex(4)};
  auto p4 = real_link_partition(DihedralIndex(4), t4);
  const auto& G = t4.group();
  auto d1 = VertexId::real(t4.element(CellVertexRole::d(1)));
  auto ain = VertexId::real(G.multiply(G.inverse(t4.element(CellVertexRole::right())), t4.element(CellVertexRole::d(3))));
  EXPECT_TRUE(std::count(p4.partition.d_r.begin(), p4.partition.d_r.end(), d1));
  EXPECT_TRUE(std::count(p4.partition.d_l.begin(), p4.partition.d_l.end(), ain));

  for (int n = 3; n <= 7; ++n) EXPECT_EQ(real_link_partition(DihedralIndex(n)).all_vertices(), identity_link(n).vertices());
  EXPECT_THROW(real_link_partition(DihedralIndex(2)), std::invalid_argument);
}

TEST(Partition, InteriorLinkExamples) {
  auto p = interior_link_partition(DihedralIndex(4), 1);
  std::set<VertexId> want{by_name(p, "u1"), by_name(p, "p2 c1"), by_name(p, "p3 c2")};
  EXPECT_EQ(std::set<VertexId>(p.partition.u_l.begin(), p.partition.u_l.end()), want);
  for (int n = 3; n <= 7; ++n) {
    for (int i = 1; i <= n - 2; ++i) {
      auto q = interior_link_partition(DihedralIndex(n), i);
      for (const auto* s : {&q.partition.u_l, &q.partition.u_r, &q.partition.d_l, &q.partition.d_r}) {
        EXPECT_EQ(s->size(), static_cast<std::size_t>(n - 1));
      }
      EXPECT_EQ(q.all_vertices(), interior_link(n, i).vertices()) << n << "," << i;
      // exactly one vertex of U_r comes from the cell p_0 Pi
      auto p0 = std::count_if(q.partition.u_r.begin(), q.partition.u_r.end(),
                              [&](const VertexId& v) { return q.names.at(v).rfind("p0 ", 0) == 0; });
      EXPECT_EQ(p0, 1);
    }
  }
  EXPECT_THROW(interior_link_partition(DihedralIndex(4), 0), std::invalid_argument);
  EXPECT_THROW(interior_link_partition(DihedralIndex(4), 3), std::invalid_argument);
}

TEST(Partition, InteriorPrismAdjacencyPredicates) {
  for (int n = 3; n <= 7; ++n) {
    for (int i = 1; i <= n - 2; ++i) {
      auto q = interior_link_partition(DihedralIndex(n), i);
      auto g = interior_link(n, i);
      auto pc = [&](int j, int k) { return by_name(q, "p" + std::to_string(j) + " c" + std::to_string(k)); };
      auto adjacent_in_ul = [&](const VertexId& x) {
        std::set<VertexId> out;
        for (const auto& v : q.partition.u_l) {
          if (g.adjacent(v, x)) out.insert(v);
        }
        return out;
      };
      const VertexId ui = by_name(q, "u" + std::to_string(i));
      std::set<VertexId> base{ui};
      for (int k = 1; k <= i - 1; ++k) base.insert(pc(k, k));
      // p_j c_j for i < j <= n-2
      for (int j = i + 1; j <= n - 2; ++j) {
        auto want = base;
        for (int k = j; k <= n - 1; ++k) want.insert(pc(k, k - 1));
        EXPECT_EQ(adjacent_in_ul(pc(j, j)), want) << n << "," << i << "," << j;
      }
      // d_{i+1}
      {
        auto want = base;
        want.insert(pc(n - 1, n - 2));
        EXPECT_EQ(adjacent_in_ul(by_name(q, "d" + std::to_string(i + 1))), want);
      }
      // p_0 c_1
      EXPECT_EQ(adjacent_in_ul(pc(0, 1)), base);
      // p_j c_{j+1} for 1 <= j <= i-1
      for (int j = 1; j <= i - 1; ++j) {
        std::set<VertexId> want;
        for (int k = j; k <= i - 1; ++k) want.insert(pc(k, k));
        EXPECT_EQ(adjacent_in_ul(pc(j, j + 1)), want);
      }
      // the recovered order on U_r, largest neighbour set first
      auto order = recognize_prism(g, std::span<const VertexId>(q.partition.u_r), std::span<const VertexId>(q.partition.u_l));
      ASSERT_TRUE(order);
      std::vector<VertexId> want;
      for (int j = i + 1; j <= n - 2; ++j) want.push_back(pc(j, j));
      want.push_back(by_name(q, "d" + std::to_string(i + 1)));
      for (int j = 0; j <= i - 1; ++j) want.push_back(pc(j, j + 1));
      EXPECT_EQ(order->ordering, want) << n << "," << i;
    }
  }
}

TEST(Distance, RealLinkTable) {
  for (int n = 3; n <= 7; ++n) {
    auto g = identity_link(n);
    auto s = signed_generators(ball_for(n).group());
    EXPECT_EQ(link_distance(g, s.a_plus, s.a_minus), 3);
    EXPECT_EQ(link_distance(g, s.b_plus, s.b_minus), 3);
    for (const auto& x : {s.a_plus, s.a_minus}) {
      for (const auto& y : {s.b_plus, s.b_minus}) EXPECT_EQ(link_distance(g, x, y), 2) << n;
    }
  }
  auto g2 = identity_link(2);
  auto s2 = signed_generators(ball_for(2).group());
  EXPECT_EQ(link_distance(g2, s2.a_plus, s2.b_minus), 1);
  EXPECT_EQ(link_distance(g2, s2.a_minus, s2.b_plus), 1);
  EXPECT_EQ(link_distance(g2, s2.a_plus, s2.b_plus), 2);
  EXPECT_EQ(link_distance(g2, s2.a_minus, s2.b_minus), 2);
  EXPECT_EQ(link_distance(g2, s2.a_plus, s2.a_minus), 3);
}

TEST(Distance, Disconnected) {
  SimplicialGraph<int> g;
  g.add_edge(1, 2);
  g.add_vertex(3);
  EXPECT_EQ(link_distance(g, 1, 3), kInfiniteDistance);
  EXPECT_EQ(link_distance(g, 1, 1), 0);
}

TEST(Isomorphism, DetectsRelabelAndDifference) {
  auto g = identity_link(4);
  int next = 0;
  std::map<VertexId, int> ids;
  std::vector<VertexId> vs = g.vertices();
  std::mt19937_64 rng(3);
  std::shuffle(vs.begin(), vs.end(), rng);
  for (const auto& v : vs) ids[v] = next++;
  auto h = g.relabel([&](const VertexId& v) { return ids.at(v); });
  auto iso = find_isomorphism(g, h);
  ASSERT_TRUE(iso);
  for (const auto& [x, y] : g.edges()) EXPECT_TRUE(h.adjacent(iso->at(x), iso->at(y)));
  EXPECT_FALSE(are_isomorphic(g, identity_link(5)));
  EXPECT_TRUE(are_isomorphic(cycle_graph(6), cycle_graph(6)));
  SimplicialGraph<int> two_triangles;
  for (int base : {0, 3}) {
    two_triangles.add_edge(base, base + 1);
    two_triangles.add_edge(base + 1, base + 2);
    two_triangles.add_edge(base + 2, base);
  }
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), two_triangles));
}
