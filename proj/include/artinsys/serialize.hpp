#ifndef ARTINSYS_SERIALIZE_HPP
#define ARTINSYS_SERIALIZE_HPP

// JSON and DOT renderings. Vertices and edges are emitted in ascending
// string-key order so that equal inputs give byte-identical files.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "artinsys/dihedral_complex.hpp"
#include "artinsys/gamma_assembly.hpp"
#include "artinsys/lemma_suite.hpp"
#include "artinsys/link_analysis.hpp"

namespace artinsys {

using ordered_json = nlohmann::ordered_json;

inline ordered_json vertex_record(const VertexId& v) {
  ordered_json rec;
  rec["key"] = v.key();
  rec["kind"] = v.is_real() ? "real" : "interior";
  if (v.is_real()) {
    rec["element"] = v.element.key();
    rec["cell"] = nullptr;
    rec["i"] = nullptr;
  } else {
    rec["element"] = nullptr;
    rec["cell"] = v.element.key();
    rec["i"] = v.index;
  }
  return rec;
}

namespace detail {

template <class Key, class KeyFn>
std::vector<std::pair<std::string, Key>> sorted_by_text(const std::vector<Key>& keys, KeyFn&& text) {
  std::vector<std::pair<std::string, Key>> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.emplace_back(text(k), k);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

template <class Key, class KeyFn>
std::vector<std::pair<std::string, std::string>> sorted_edges(const SimplicialGraph<Key>& g, KeyFn&& text) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [x, y] : g.edges()) {
    std::string sx = text(x), sy = text(y);
    if (sy < sx) std::swap(sx, sy);
    out.emplace_back(std::move(sx), std::move(sy));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline ordered_json ball_to_json(const BallComplex& ball) {
  const auto& g = ball.graph();
  ordered_json doc;
  doc["n"] = ball.n().value();
  doc["radius"] = ball.radius();
  doc["systolize"] = ball.systolized();
  doc["exact_link_margin"] = ball.link_margin();
  doc["counts"] = {{"cells", ball.cells().size()},
                   {"vertices", g.vertex_count()},
                   {"edges", g.edge_count()},
                   {"zigzag_edges", ball.zigzag_edges().size()}};
  ordered_json vertices = ordered_json::array();
  for (const auto& [text, v] : detail::sorted_by_text(g.vertices(), [](const VertexId& v) { return v.key(); })) {
    vertices.push_back(vertex_record(v));
  }
  doc["vertices"] = std::move(vertices);
  std::vector<std::tuple<std::string, std::string, bool>> edges;
  for (const auto& [x, y] : g.edges()) {
    std::string sx = x.key(), sy = y.key();
    if (sy < sx) std::swap(sx, sy);
    edges.emplace_back(std::move(sx), std::move(sy), ball.is_zigzag(x, y));
  }
  std::sort(edges.begin(), edges.end());
  ordered_json edge_list = ordered_json::array();
  for (const auto& [u, v, zig] : edges) {
    edge_list.push_back({{"u", u}, {"v", v}, {"kind", zig ? "zigzag" : "cell"}});
  }
  doc["edges"] = std::move(edge_list);
  return doc;
}

/// Real vertices filled, interior vertices hollow, zigzag edges dashed.
inline std::string ball_to_dot(const BallComplex& ball) {
  const auto& g = ball.graph();
  std::ostringstream out;
  out << "graph X {\n";
  out << "  graph [label=" << detail::dot_quote("n=" + std::to_string(ball.n().value()) + " radius=" +
                                                  std::to_string(ball.radius()) +
                                                  (ball.systolized() ? "" : " unsystolized"))
      << "];\n";
  for (const auto& [text, v] : detail::sorted_by_text(g.vertices(), [](const VertexId& v) { return v.key(); })) {
    out << "  " << detail::dot_quote(text)
        << (v.is_real() ? " [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n"
                        : " [shape=circle, style=solid, color=steelblue];\n");
  }
  std::vector<std::tuple<std::string, std::string, bool>> edges;
  for (const auto& [x, y] : g.edges()) {
    std::string sx = x.key(), sy = y.key();
    if (sy < sx) std::swap(sx, sy);
    edges.emplace_back(std::move(sx), std::move(sy), ball.is_zigzag(x, y));
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v, zig] : edges) {
    out << "  " << detail::dot_quote(u) << " -- " << detail::dot_quote(v) << (zig ? " [style=dashed];\n" : ";\n");
  }
  out << "}\n";
  return out.str();
}

/// A vertex link with its partition (when one is known) and its cycle check.
inline ordered_json link_to_json(const SimplicialGraph<VertexId>& link, const VertexId& center,
                                 const NamedPartition* partition) {
  std::map<VertexId, std::string> part_of;
  if (partition) {
    const auto& p = partition->partition;
    part_of[p.c_l] = "c_l";
    part_of[p.c_r] = "c_r";
    for (const auto& [name, set] : {std::pair{"U_l", &p.u_l}, {"U_r", &p.u_r}, {"D_l", &p.d_l}, {"D_r", &p.d_r}}) {
      for (const auto& v : *set) part_of[v] = name;
    }
  }
  ordered_json doc;
  doc["center"] = vertex_record(center);
  ordered_json vertices = ordered_json::array();
  for (const auto& [text, v] : detail::sorted_by_text(link.vertices(), [](const VertexId& v) { return v.key(); })) {
    ordered_json rec = vertex_record(v);
    if (partition) {
      auto name = partition->names.find(v);
      rec["name"] = name == partition->names.end() ? ordered_json(nullptr) : ordered_json(name->second);
      auto part = part_of.find(v);
      rec["part"] = part == part_of.end() ? ordered_json(nullptr) : ordered_json(part->second);
    }
    vertices.push_back(std::move(rec));
  }
  doc["vertices"] = std::move(vertices);
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : detail::sorted_edges(link, [](const VertexId& x) { return x.key(); })) {
    edges.push_back({u, v});
  }
  doc["edges"] = std::move(edges);
  auto witness = find_full_short_cycle(link);
  doc["six_large"] = !witness.has_value();
  if (witness) {
    ordered_json w = ordered_json::array();
    for (const auto& v : witness->vertices) w.push_back(v.key());
    doc["witness"] = std::move(w);
  }
  if (partition) {
    auto check = check_model_graph(link, partition->partition);
    doc["model_graph"] = {{"pass", check.pass}, {"failed_condition", check.failed_condition}, {"detail", check.detail}};
  }
  return doc;
}

inline std::string link_to_dot(const SimplicialGraph<VertexId>& link, const NamedPartition* partition) {
  std::ostringstream out;
  out << "graph link {\n";
  for (const auto& [text, v] : detail::sorted_by_text(link.vertices(), [](const VertexId& v) { return v.key(); })) {
    out << "  " << detail::dot_quote(text) << " [";
    if (partition) {
      auto it = partition->names.find(v);
      if (it != partition->names.end()) out << "xlabel=" << detail::dot_quote(it->second) << ", ";
    }
    out << (v.is_real() ? "shape=circle, style=filled, fillcolor=black, fontcolor=white" : "shape=circle, color=steelblue")
        << "];\n";
  }
  for (const auto& [u, v] : detail::sorted_edges(link, [](const VertexId& x) { return x.key(); })) {
    out << "  " << detail::dot_quote(u) << " -- " << detail::dot_quote(v) << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline ordered_json assembled_link_to_json(const AssembledLink& link) {
  ordered_json doc;
  ordered_json blocks = ordered_json::array();
  for (const auto& b : link.blocks) blocks.push_back({{"a", b.a}, {"b", b.b}, {"m", b.m}});
  doc["blocks"] = std::move(blocks);
  ordered_json vertices = ordered_json::array();
  for (const auto& key : link.graph.vertices()) {
    ordered_json rec;
    rec["key"] = key;
    auto it = link.block_local.find(key);
    if (it == link.block_local.end()) {
      rec["kind"] = "signed";
    } else {
      rec["kind"] = "block";
      rec["block"] = {it->second.a, it->second.b};
    }
    vertices.push_back(std::move(rec));
  }
  doc["vertices"] = std::move(vertices);
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : link.graph.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc;
}

inline std::string assembled_link_to_dot(const AssembledLink& link) {
  std::ostringstream out;
  out << "graph link {\n";
  for (const auto& key : link.graph.vertices()) {
    bool local = link.block_local.count(key) != 0;
    out << "  " << detail::dot_quote(key)
        << (local ? " [shape=circle, color=steelblue];\n"
                  : " [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n");
  }
  for (const auto& [u, v] : link.graph.edges()) {
    out << "  " << detail::dot_quote(u) << " -- " << detail::dot_quote(v) << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline ordered_json lemma_report_to_json(const std::vector<LemmaResult>& results, const std::vector<int>& ns,
                                         bool systolize) {
  ordered_json doc;
  doc["n"] = ns;
  doc["systolize"] = systolize;
  ordered_json items = ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    ordered_json item;
    item["lemma"] = r.lemma;
    item["n"] = r.n;
    item["pass"] = r.pass;
    item["checked"] = r.checked;
    item["detail"] = r.detail;
    if (!r.witness.empty()) item["witness"] = r.witness;
    items.push_back(std::move(item));
    all = all && r.pass;
  }
  doc["results"] = std::move(items);
  doc["verdict"] = all ? "pass" : "fail";
  return doc;
}

}  // namespace artinsys

#endif  // ARTINSYS_SERIALIZE_HPP
