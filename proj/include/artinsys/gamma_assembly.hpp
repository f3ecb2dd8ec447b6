#ifndef ARTINSYS_GAMMA_ASSEMBLY_HPP
#define ARTINSYS_GAMMA_ASSEMBLY_HPP

// Link of a real vertex of X_Gamma, glued from one dihedral real link per
// edge of Gamma, and the link-level certificate for a defining graph.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "artinsys/dihedral_complex.hpp"
#include "artinsys/errors.hpp"
#include "artinsys/link_analysis.hpp"
#include "artinsys/parallel.hpp"
#include "artinsys/simplicial_graph.hpp"

namespace artinsys {

struct DefiningEdge {
  std::string u;
  std::string v;
  int m = 2;

  auto operator<=>(const DefiningEdge&) const = default;
};

/// Finite simple graph with edges labelled m >= 2. Generators are kept
/// sorted; each edge is stored with u < v.
class LabeledDefiningGraph {
 public:
  LabeledDefiningGraph() = default;

  void add_generator(const std::string& name) {
    if (!valid_name(name)) throw std::invalid_argument("invalid generator name '" + name + "'");
    if (!generators_.insert(name).second) throw std::invalid_argument("duplicate generator '" + name + "'");
  }

  void add_edge(std::string u, std::string v, int m) {
    if (!generators_.count(u) || !generators_.count(v)) throw std::invalid_argument("edge references an unknown generator");
    if (u == v) throw std::invalid_argument("self-loop at '" + u + "'");
    if (m < 2) throw std::invalid_argument("edge label must be at least 2");
    if (v < u) std::swap(u, v);
    if (!labels_.emplace(std::make_pair(u, v), m).second) {
      throw std::invalid_argument("duplicate edge " + u + "-" + v);
    }
  }

  std::vector<std::string> generators() const { return {generators_.begin(), generators_.end()}; }

  std::vector<DefiningEdge> edges() const {
    std::vector<DefiningEdge> out;
    for (const auto& [uv, m] : labels_) out.push_back({uv.first, uv.second, m});
    return out;
  }

  std::optional<int> label(const std::string& u, const std::string& v) const {
    auto it = labels_.find(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    if (it == labels_.end()) return std::nullopt;
    return it->second;
  }

  bool has_generator(const std::string& s) const { return generators_.count(s) != 0; }

  /// Names are non-empty and drawn from [A-Za-z0-9_.-].
  static bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '.' ||
             c == '-';
    });
  }

 private:
  std::set<std::string> generators_;
  std::map<std::pair<std::string, std::string>, int> labels_;
};

/// Reads {"generators": [...], "edges": [{"u": .., "v": .., "m": ..}]}.
/// Errors carry a JSON pointer to the offending value.
inline LabeledDefiningGraph parse_defining_graph(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("", "document must be an object");
  if (!doc.contains("generators")) throw ParseError("/generators", "missing");
  const auto& gens = doc.at("generators");
  if (!gens.is_array()) throw ParseError("/generators", "must be an array");
  LabeledDefiningGraph g;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string at = "/generators/" + std::to_string(k);
    if (!gens[k].is_string()) throw ParseError(at, "generator names must be strings");
    const auto name = gens[k].get<std::string>();
    if (!LabeledDefiningGraph::valid_name(name)) throw ParseError(at, "invalid generator name '" + name + "'");
    if (g.has_generator(name)) throw ParseError(at, "duplicate generator '" + name + "'");
    g.add_generator(name);
  }
  if (!doc.contains("edges")) throw ParseError("/edges", "missing");
  const auto& edges = doc.at("edges");
  if (!edges.is_array()) throw ParseError("/edges", "must be an array");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string at = "/edges/" + std::to_string(k);
    const auto& e = edges[k];
    if (!e.is_object()) throw ParseError(at, "edge must be an object");
    std::string ends[2];
    const char* fields[2] = {"u", "v"};
    for (int f = 0; f < 2; ++f) {
      if (!e.contains(fields[f])) throw ParseError(at + "/" + fields[f], "missing");
      if (!e.at(fields[f]).is_string()) throw ParseError(at + "/" + fields[f], "must be a generator name");
      ends[f] = e.at(fields[f]).get<std::string>();
      if (!g.has_generator(ends[f])) throw ParseError(at + "/" + fields[f], "unknown generator '" + ends[f] + "'");
    }
    if (!e.contains("m")) throw ParseError(at + "/m", "missing");
    if (!e.at("m").is_number_integer()) throw ParseError(at + "/m", "label must be an integer");
    const auto m = e.at("m").get<long long>();
    if (m < 2) throw ParseError(at + "/m", "label must be at least 2, got " + std::to_string(m));
    if (m > 1000) throw ParseError(at + "/m", "label too large");
    if (ends[0] == ends[1]) throw ParseError(at, "self-loop at '" + ends[0] + "'");
    if (g.label(ends[0], ends[1])) throw ParseError(at, "duplicate edge " + ends[0] + "-" + ends[1]);
    g.add_edge(ends[0], ends[1], static_cast<int>(m));
  }
  return g;
}

inline LabeledDefiningGraph parse_defining_graph_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_defining_graph(doc);
}

// ---- almost large type -------------------------------------------------------

struct AlmostLargeCheck {
  bool pass = true;
  std::string kind;  // "triangle" or "square" when failing
  std::vector<std::string> vertices;
  std::vector<int> labels;  // label of vertices[k] -- vertices[k+1], cyclically
};

/// No triangle with an edge labelled 2 and no simple 4-cycle (chords
/// allowed) with at least three edges labelled 2. Reports the first
/// offending cycle in lexicographic order, triangles before squares.
inline AlmostLargeCheck check_almost_large(const LabeledDefiningGraph& g) {
  AlmostLargeCheck out;
  const auto gens = g.generators();
  const std::size_t n = gens.size();
  auto m = [&](std::size_t x, std::size_t y) { return g.label(gens[x], gens[y]); };
  auto report = [&](std::string kind, std::vector<std::size_t> cyc) {
    out.pass = false;
    out.kind = std::move(kind);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      out.vertices.push_back(gens[cyc[k]]);
      out.labels.push_back(*m(cyc[k], cyc[(k + 1) % cyc.size()]));
    }
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        auto ab = m(a, b), bc = m(b, c), ca = m(c, a);
        if (ab && bc && ca && (*ab == 2 || *bc == 2 || *ca == 2)) {
          report("triangle", {a, b, c});
          return out;
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = a + 1; c < n; ++c) {
        for (std::size_t d = b + 1; d < n; ++d) {
          if (c == b || d == c) continue;
          auto ab = m(a, b), bc = m(b, c), cd = m(c, d), da = m(d, a);
          if (!ab || !bc || !cd || !da) continue;
          int twos = (*ab == 2) + (*bc == 2) + (*cd == 2) + (*da == 2);
          if (twos >= 3) {
            report("square", {a, b, c, d});
            return out;
          }
        }
      }
    }
  }
  return out;
}

// ---- generator swap ----------------------------------------------------------

/// The automorphism of DA_n exchanging a and b.
inline CanonicalForm swap_generators(const CanonicalForm& f, const DihedralGroup& group) {
  std::string w = group.to_word(f).to_string();
  for (char& c : w) {
    switch (c) {
      case 'a': c = 'b'; break;
      case 'b': c = 'a'; break;
      case 'A': c = 'B'; break;
      case 'B': c = 'A'; break;
      default: break;
    }
  }
  return group.element(w);
}

/// Induced map on vertices of X: it fixes l, r and each c_i of a cell while
/// exchanging the two halves.
inline VertexId swap_generators(const VertexId& v, const DihedralGroup& group) {
  CanonicalForm e = swap_generators(v.element, group);
  return v.is_real() ? VertexId::real(std::move(e)) : VertexId::interior(std::move(e), v.index);
}

// ---- dihedral links ------------------------------------------------------------

struct DihedralLinks {
  std::shared_ptr<const BallComplex> ball;
  SimplicialGraph<VertexId> real;
  std::vector<SimplicialGraph<VertexId>> interior;  // index i-1 holds the link of c_i
};

inline DihedralLinks dihedral_links(DihedralIndex m, bool systolize, std::size_t max_cells = default_max_cells()) {
  DihedralLinks out;
  out.ball = std::make_shared<const BallComplex>(m, BallOptions{m, systolize, max_cells});
  const auto id = out.ball->group().identity();
  out.real = link_of(VertexId::real(id), *out.ball);
  for (int i = 1; i <= m - 2; ++i) out.interior.push_back(link_of(VertexId::interior(id, i), *out.ball));
  return out;
}

// ---- assembly --------------------------------------------------------------------

/// One edge of Gamma with the generator playing a.
struct BlockRef {
  std::string a;
  std::string b;
  int m = 2;

  auto operator<=>(const BlockRef&) const = default;
};

struct AssembledLink {
  SimplicialGraph<std::string> graph;
  /// generator -> {s+ key, s- key}
  std::map<std::string, std::pair<std::string, std::string>> real_vertices;
  /// block-local vertex key -> its block
  std::map<std::string, BlockRef> block_local;
  std::vector<BlockRef> blocks;
};

inline std::string signed_vertex_key(const std::string& generator, bool plus) { return generator + (plus ? "+" : "-"); }

/// Block-local keys depend on the unordered edge, not on its orientation.
inline std::string block_local_key(const BlockRef& block, const VertexId& v) {
  const auto& lo = std::min(block.a, block.b);
  const auto& hi = std::max(block.a, block.b);
  return lo + "~" + hi + "|" + v.key();
}

struct AssemblyOptions {
  bool systolize = true;
  /// Let the lexicographically larger endpoint play a (orientation tests).
  bool reverse_orientation = false;
  std::size_t max_cells = default_max_cells();
};

/// Glues one dihedral real link per edge: a^-1, a, b^-1, b become s+, s-,
/// t+, t- for the generators s, t playing a, b; everything else stays local
/// to its block. `links` may supply prebuilt dihedral links by label.
inline AssembledLink assemble_real_link(const LabeledDefiningGraph& g, const AssemblyOptions& options = {},
                                        const std::map<int, DihedralLinks>* links = nullptr) {
  AssembledLink out;
  for (const auto& s : g.generators()) {
    out.real_vertices[s] = {signed_vertex_key(s, true), signed_vertex_key(s, false)};
    out.graph.add_vertex(signed_vertex_key(s, true));
    out.graph.add_vertex(signed_vertex_key(s, false));
  }
  std::map<int, DihedralLinks> local;
  for (const auto& e : g.edges()) {
    BlockRef block = options.reverse_orientation ? BlockRef{e.v, e.u, e.m} : BlockRef{e.u, e.v, e.m};
    out.blocks.push_back(block);
    const DihedralLinks* dl = nullptr;
    if (links && links->count(e.m)) {
      dl = &links->at(e.m);
    } else {
      auto it = local.find(e.m);
      if (it == local.end()) {
        it = local.emplace(e.m, dihedral_links(DihedralIndex(e.m), options.systolize, options.max_cells)).first;
      }
      dl = &it->second;
    }
    const DihedralGroup& group = dl->ball->group();
    const std::map<CanonicalForm, std::string> dictionary{
        {group.element("A"), signed_vertex_key(block.a, true)},
        {group.element("a"), signed_vertex_key(block.a, false)},
        {group.element("B"), signed_vertex_key(block.b, true)},
        {group.element("b"), signed_vertex_key(block.b, false)}};
    auto name = [&](const VertexId& v) {
      if (v.is_real()) {
        auto it = dictionary.find(v.element);
        if (it != dictionary.end()) return it->second;
      }
      std::string key = block_local_key(block, v);
      out.block_local.emplace(key, block);
      return key;
    };
    for (const auto& v : dl->real.vertices()) out.graph.add_vertex(name(v));
    for (const auto& [x, y] : dl->real.edges()) out.graph.add_edge(name(x), name(y));
  }
  return out;
}

// ---- certificate -----------------------------------------------------------------

struct InteriorLinkResult {
  int m = 0;
  int i = 0;
  bool six_large = true;
  std::optional<std::vector<std::string>> witness;
};

struct SystolicityReport {
  AlmostLargeCheck gamma_check;
  bool real_link_six_large = true;
  std::optional<std::vector<std::string>> real_link_witness;
  std::vector<InteriorLinkResult> interior_links;

  bool verdict() const {
    return gamma_check.pass && real_link_six_large &&
           std::all_of(interior_links.begin(), interior_links.end(), [](const auto& r) { return r.six_large; });
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json gc;
    gc["pass"] = gamma_check.pass;
    gc["square_reading"] = "non-induced";
    if (!gamma_check.pass) {
      gc["witness"] = {{"kind", gamma_check.kind}, {"vertices", gamma_check.vertices}, {"labels", gamma_check.labels}};
    }
    nlohmann::ordered_json real;
    real["six_large"] = real_link_six_large;
    if (real_link_witness) real["witness"] = *real_link_witness;
    nlohmann::ordered_json interiors = nlohmann::ordered_json::array();
    for (const auto& r : interior_links) {
      nlohmann::ordered_json item;
      item["m"] = r.m;
      item["i"] = r.i;
      item["six_large"] = r.six_large;
      if (r.witness) item["witness"] = *r.witness;
      interiors.push_back(std::move(item));
    }
    nlohmann::ordered_json doc;
    doc["gamma_check"] = std::move(gc);
    doc["real_link"] = std::move(real);
    doc["interior_links"] = std::move(interiors);
    doc["verdict"] = verdict() ? "pass" : "fail";
    return doc;
  }
};

struct CertifyOptions {
  bool systolize = true;
  unsigned workers = 1;
  std::size_t max_cells = default_max_cells();
  /// Largest graph handed to the exhaustive cycle search.
  std::size_t max_search_vertices = 100000;
};

/// Almost-large check, 6-largeness of the assembled real link, and of the
/// link of every interior vertex c_i of DA_m for each label m >= 3.
inline SystolicityReport certify_systolic_links(const LabeledDefiningGraph& g, const CertifyOptions& options = {}) {
  SystolicityReport report;
  report.gamma_check = check_almost_large(g);

  std::vector<int> labels;
  for (const auto& e : g.edges()) labels.push_back(e.m);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::vector<DihedralLinks> built(labels.size());
  parallel_for(labels.size(), options.workers, [&](std::size_t k) {
    built[k] = dihedral_links(DihedralIndex(labels[k]), options.systolize, options.max_cells);
  });
  std::map<int, DihedralLinks> links;
  for (std::size_t k = 0; k < labels.size(); ++k) links.emplace(labels[k], std::move(built[k]));

  AssemblyOptions assembly{options.systolize, false, options.max_cells};
  AssembledLink real = assemble_real_link(g, assembly, &links);
  if (real.graph.vertex_count() > options.max_search_vertices) {
    throw BudgetExceeded("cycle search (vertices)", real.graph.vertex_count(), options.max_search_vertices);
  }

  for (int m : labels) {
    for (int i = 1; i <= m - 2; ++i) report.interior_links.push_back({m, i, true, std::nullopt});
  }
  // slot 0 is the real link, the rest follow interior_links
  std::vector<std::optional<std::vector<std::string>>> witnesses(1 + report.interior_links.size());
  parallel_for(witnesses.size(), options.workers, [&](std::size_t k) {
    if (k == 0) {
      if (auto w = find_full_short_cycle(real.graph)) witnesses[0] = w->vertices;
      return;
    }
    const auto& item = report.interior_links[k - 1];
    if (auto w = find_full_short_cycle(links.at(item.m).interior[static_cast<std::size_t>(item.i - 1)])) {
      std::vector<std::string> keys;
      for (const auto& v : w->vertices) keys.push_back(v.key());
      witnesses[k] = std::move(keys);
    }
  });
  report.real_link_witness = witnesses[0];
  report.real_link_six_large = !witnesses[0].has_value();
  for (std::size_t k = 0; k < report.interior_links.size(); ++k) {
    report.interior_links[k].witness = witnesses[k + 1];
    report.interior_links[k].six_large = !witnesses[k + 1].has_value();
  }
  return report;
}

}  // namespace artinsys

#endif  // ARTINSYS_GAMMA_ASSEMBLY_HPP
