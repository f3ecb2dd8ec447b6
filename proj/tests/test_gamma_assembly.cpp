#include <gtest/gtest.h>

#include <random>

#include "artinsys/gamma_assembly.hpp"
#include "artinsys/random_gamma.hpp"
#include "oracles.hpp"

using namespace artinsys;

namespace {

LabeledDefiningGraph make(std::vector<std::string> gens, std::vector<DefiningEdge> edges) {
  LabeledDefiningGraph g;
  for (const auto& s : gens) g.add_generator(s);
  for (const auto& e : edges) g.add_edge(e.u, e.v, e.m);
  return g;
}

std::string parse_error_location(const std::string& text) {
  try {
    parse_defining_graph_text(text);
  } catch (const ParseError& e) {
    return e.location();
  }
  return "<accepted>";
}

std::vector<std::string> block_vertices(const AssembledLink& link, const BlockRef& b) {
  std::vector<std::string> out;
  for (const auto& [key, block] : link.block_local) {
    if (block == b) out.push_back(key);
  }
  for (const auto& s : {b.a, b.b}) {
    out.push_back(link.real_vertices.at(s).first);
    out.push_back(link.real_vertices.at(s).second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const DihedralLinks& links_for(int m) {
  static std::map<int, DihedralLinks> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, dihedral_links(DihedralIndex(m), true)).first;
  return it->second;
}

}  // namespace

TEST(Parse, Valid) {
  auto g = parse_defining_graph_text(R"({"generators":["a","b"],"edges":[{"u":"a","v":"b","m":3}]})");
  EXPECT_EQ(g.generators(), (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.label("b", "a"), 3);
  EXPECT_FALSE(g.label("a", "a"));
}

TEST(Parse, Rejections) {
  EXPECT_EQ(parse_error_location(R"({"generators":["a","b"],"edges":[{"u":"a","v":"b","m":1}]})"), "/edges/0/m");
  EXPECT_EQ(parse_error_location(R"({"generators":["a","b"],"edges":[{"u":"a","v":"a","m":3}]})"), "/edges/0");
  EXPECT_EQ(parse_error_location(R"({"generators":["a","b"],"edges":[{"u":"a","v":"b","m":3},{"u":"b","v":"a","m":4}]})"),
            "/edges/1");
  EXPECT_EQ(parse_error_location(R"({"generators":["a","b"],"edges":[{"u":"a","v":"c","m":3}]})"), "/edges/0/v");
  EXPECT_EQ(parse_error_location(R"({"generators":["a","b"],"edges":[{"u":"a","v":"b","m":3.5}]})"), "/edges/0/m");
  EXPECT_EQ(parse_error_location(R"({"generators":["a","a"],"edges":[]})"), "/generators/1");
  EXPECT_EQ(parse_error_location(R"({"generators":["a b"],"edges":[]})"), "/generators/0");
  EXPECT_EQ(parse_error_location(R"({"generators":"ab","edges":[]})"), "/generators");
  EXPECT_EQ(parse_error_location(R"({"generators":["a"]})"), "/edges");
  EXPECT_EQ(parse_error_location(R"({"generators":["a"], "edges": [)"), "");
  EXPECT_EQ(parse_error_location("[]"), "");
}

TEST(AlmostLarge, TriangleWithATwo) {
  auto g = make({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}, {"a", "c", 3}});
  auto r = check_almost_large(g);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.kind, "triangle");
  EXPECT_EQ(r.vertices, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(r.labels, (std::vector<int>{2, 3, 3}));
}

TEST(AlmostLarge, SquareWithThreeTwos) {
  auto g = make({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"a", "d", 5}});
  auto r = check_almost_large(g);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.kind, "square");
  EXPECT_EQ(r.vertices, (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_EQ(r.labels, (std::vector<int>{2, 2, 2, 5}));
}

TEST(AlmostLarge, Passing) {
  EXPECT_TRUE(check_almost_large(make({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 3}, {"c", "d", 2}, {"a", "d", 3}})).pass);
  EXPECT_TRUE(check_almost_large(make({"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 3}})).pass);
  EXPECT_TRUE(check_almost_large(make({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 2}})).pass);
}

TEST(AlmostLarge, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const int k = 3 + static_cast<int>(rng() % 4);
    LabeledDefiningGraph g;
    for (int s = 0; s < k; ++s) g.add_generator("g" + std::to_string(s));
    std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
    for (int s = 0; s < k; ++s) {
      for (int u = s + 1; u < k; ++u) {
        if (rng() % 3 == 0) continue;
        m[s][u] = m[u][s] = 2 + static_cast<int>(rng() % 3);
        g.add_edge("g" + std::to_string(s), "g" + std::to_string(u), m[s][u]);
      }
    }
    // every vertex sequence of length 3 or 4
    bool bad = false;
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        for (int c = 0; c < k; ++c) {
          if (a == b || b == c || a == c || !m[a][b] || !m[b][c]) continue;
          if (m[c][a] && (m[a][b] == 2 || m[b][c] == 2 || m[c][a] == 2)) bad = true;
          for (int d = 0; d < k; ++d) {
            if (d == a || d == b || d == c || !m[c][d] || !m[d][a]) continue;
            if ((m[a][b] == 2) + (m[b][c] == 2) + (m[c][d] == 2) + (m[d][a] == 2) >= 3) bad = true;
          }
        }
      }
    }
    EXPECT_EQ(check_almost_large(g).pass, !bad);
  }
}

TEST(Assembly, SingleEdgeIsTheDihedralLink) {
  for (int m : {2, 3, 5, 6}) {
    auto link = assemble_real_link(make({"s", "t"}, {{"s", "t", m}}));
    EXPECT_TRUE(are_isomorphic(link.graph, links_for(m).real)) << m;
    EXPECT_EQ(link.graph.vertex_count(), static_cast<std::size_t>(m == 2 ? 6 : 4 * m - 2));
  }
}

TEST(Assembly, PathOfTwoBlocks) {
  auto link = assemble_real_link(make({"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 3}}));
  EXPECT_EQ(link.graph.vertex_count(), 18u);
  auto x = block_vertices(link, link.blocks[0]);
  auto y = block_vertices(link, link.blocks[1]);
  EXPECT_EQ(x.size(), 10u);
  EXPECT_EQ(y.size(), 10u);
  std::vector<std::string> shared;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(shared));
  EXPECT_EQ(shared, (std::vector<std::string>{"b+", "b-"}));
}

TEST(Assembly, CommutingBlockIsAHexagon) {
  auto link = assemble_real_link(make({"s", "t"}, {{"s", "t", 2}}));
  EXPECT_EQ(link.graph.vertex_count(), 6u);
  EXPECT_EQ(link.graph.edge_count(), 6u);
  EXPECT_EQ(link.block_local.size(), 2u);
  for (const auto& v : link.graph.vertices()) EXPECT_EQ(link.graph.degree(link.graph.at(v)), 2u);
  EXPECT_EQ(link_distance(link.graph, std::string("s+"), std::string("t-")), 1);
  EXPECT_EQ(link_distance(link.graph, std::string("s-"), std::string("t+")), 1);
}

TEST(Assembly, BlocksGlueSoundly) {
  auto g = make({"a", "b", "c", "d"}, {{"a", "b", 3}, {"b", "c", 4}, {"c", "d", 2}, {"a", "d", 5}, {"a", "c", 3}});
  auto link = assemble_real_link(g);
  for (const auto& b : link.blocks) {
    auto vs = block_vertices(link, b);
    auto sub = link.graph.full_subgraph(std::span<const std::string>(vs));
    EXPECT_TRUE(are_isomorphic(sub, links_for(b.m).real)) << b.a << b.b;
  }
  for (std::size_t i = 0; i < link.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < link.blocks.size(); ++j) {
      const auto& p = link.blocks[i];
      const auto& q = link.blocks[j];
      auto x = block_vertices(link, p);
      auto y = block_vertices(link, q);
      std::vector<std::string> shared;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(shared));
      std::vector<std::string> want;
      for (const auto& s : {p.a, p.b}) {
        if (s == q.a || s == q.b) {
          want.push_back(s + "+");
          want.push_back(s + "-");
        }
      }
      std::sort(want.begin(), want.end());
      EXPECT_EQ(shared, want);
    }
  }
  // every non-signed vertex lies in exactly one block
  for (const auto& v : link.graph.vertices()) {
    bool is_signed = v.back() == '+' || v.back() == '-';
    EXPECT_EQ(link.block_local.count(v), is_signed ? 0u : 1u) << v;
  }
}

TEST(Assembly, SegmentLengths) {
  for (int m : {3, 4, 6}) {
    auto link = assemble_real_link(make({"s", "t"}, {{"s", "t", m}}));
    std::vector<std::string> sig{"s+", "s-", "t+", "t-"};
    for (const auto& x : sig) {
      for (const auto& y : sig) {
        if (x == y) continue;
        int d = link_distance(link.graph, x, y);
        EXPECT_GE(d, 2);
        if (x[0] == y[0]) EXPECT_GE(d, 3);
      }
    }
  }
}

TEST(Assembly, OrientationIndependence) {
  auto g = make({"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 5}, {"a", "c", 4}});
  auto fwd = assemble_real_link(g, {true, false});
  auto rev = assemble_real_link(g, {true, true});
  // canonical relabelling: a block-local vertex v of a reversed block is the image of v under the generator swap
  std::map<std::string, std::string> to_forward;
  for (const auto& b : rev.blocks) {
    const auto& dl = links_for(b.m);
    for (const auto& v : dl.real.vertices()) {
      auto key = block_local_key(b, v);
      if (!rev.block_local.count(key)) continue;
      to_forward[key] = block_local_key(b, swap_generators(v, dl.ball->group()));
    }
  }
  auto relabelled = rev.graph.relabel([&](const std::string& k) {
    auto it = to_forward.find(k);
    return it == to_forward.end() ? k : it->second;
  });
  EXPECT_EQ(relabelled, fwd.graph);
  EXPECT_TRUE(are_isomorphic(fwd.graph, rev.graph));
}

TEST(Certify, Examples) {
  auto pentagon = make({"a", "b", "c", "d", "e"},
                       {{"a", "b", 3}, {"b", "c", 3}, {"c", "d", 3}, {"d", "e", 3}, {"a", "e", 3}});
  auto r = certify_systolic_links(pentagon);
  EXPECT_TRUE(r.verdict());
  EXPECT_EQ(r.to_json().dump(), R"({"gamma_check":{"pass":true,"square_reading":"non-induced"},"real_link":{"six_large":true},"interior_links":[{"m":3,"i":1,"six_large":true}],"verdict":"pass"})");

  auto tri = certify_systolic_links(make({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}, {"a", "c", 3}}));
  EXPECT_FALSE(tri.verdict());
  EXPECT_FALSE(tri.gamma_check.pass);
  EXPECT_EQ(tri.gamma_check.kind, "triangle");
}

TEST(Certify, UnsystolizedHeptagonEdgeGivesFiveCycle) {
  auto g = make({"s", "t"}, {{"s", "t", 7}});
  CertifyOptions options;
  options.systolize = false;
  auto r = certify_systolic_links(g, options);
  EXPECT_FALSE(r.verdict());
  ASSERT_TRUE(r.real_link_witness);
  const auto& w = *r.real_link_witness;
  ASSERT_EQ(w.size(), 5u);
  // least induced short cycle according to an independent search
  auto link = assemble_real_link(g, {false, false});
  auto all = oracle::induced_short_cycles(link.graph, false);
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(w, *all.begin());
  // two signed vertices and three interior vertices of the block
  int interior = 0, signed_vertices = 0;
  for (const auto& v : w) {
    if (v.find("|c/") != std::string::npos) ++interior;
    if (v.back() == '+' || v.back() == '-') ++signed_vertices;
  }
  EXPECT_EQ(interior, 3);
  EXPECT_EQ(signed_vertices, 2);
}

TEST(Certify, RandomAlmostLargeGraphsPass) {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 20; ++t) {
    auto g = random_almost_large_graph(rng);
    auto r = certify_systolic_links(g);
    EXPECT_TRUE(r.verdict()) << defining_graph_to_json(g).dump();
  }
}

TEST(Certify, WorkerCountDoesNotChangeReport) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 5; ++t) {
    auto g = random_almost_large_graph(rng);
    CertifyOptions one, many;
    many.workers = 4;
    EXPECT_EQ(certify_systolic_links(g, one).to_json().dump(), certify_systolic_links(g, many).to_json().dump());
  }
}

TEST(Certify, SearchBudget) {
  CertifyOptions options;
  options.max_search_vertices = 5;
  EXPECT_THROW(certify_systolic_links(make({"s", "t"}, {{"s", "t", 4}}), options), BudgetExceeded);
}
