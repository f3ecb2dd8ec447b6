// artinsys: build balls of the dihedral complex, run the lemma suite,
// assemble and certify links for labelled defining graphs.
//
// Exit codes: 0 success / verdict pass, 1 a check failed, 2 usage or input
// error, 3 resource budget exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "artinsys.hpp"

namespace {

using namespace artinsys;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "3", "3..6" or "2,4,7"
std::vector<int> parse_n_range(const std::string& text) {
  std::vector<int> out;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw InputError("bad --n value '" + text + "'");
    if (v < 2) throw InputError("--n values must be at least 2");
    return v;
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    int lo = to_int(text.substr(0, dots));
    int hi = to_int(text.substr(dots + 2));
    if (hi < lo) throw InputError("empty --n range '" + text + "'");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int(item));
  if (out.empty()) throw InputError("empty --n");
  return out;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

// ---- build-ball ----------------------------------------------------------------

struct BuildBallArgs {
  int n = 3;
  int radius = 0;
  bool no_systolize = false;
  std::string format = "json";
  std::string out;
  std::size_t max_cells = default_max_cells();
};

int run_build_ball(const BuildBallArgs& a) {
  BallComplex ball = build_ball(DihedralIndex(a.n), a.radius, !a.no_systolize, a.max_cells);
  emit(a.out, a.format == "dot" ? ball_to_dot(ball) : dump(ball_to_json(ball)));
  std::ostream& log = a.out.empty() ? std::cerr : std::cout;
  log << "n=" << a.n << " radius=" << a.radius << (ball.systolized() ? "" : " (unsystolized)")
      << " cells=" << ball.cells().size() << " vertices=" << ball.graph().vertex_count()
      << " edges=" << ball.graph().edge_count() << " zigzag_edges=" << ball.zigzag_edges().size() << "\n";
  if (a.radius >= a.n) {
    log << "max_simplex_dimension=" << max_simplex_dimension(ball) << "\n";
  } else {
    log << "max_simplex_dimension: radius below n, no complete vertex link in the ball\n";
  }
  if (a.n == 2) {
    log << "note: for n=2 the complex is the equilateral triangulation of the plane; every vertex link is a 6-cycle\n";
  }
  return 0;
}

// ---- verify-lemmas ---------------------------------------------------------------

struct VerifyArgs {
  std::string n = "3..6";
  bool no_systolize = false;
  bool expect_failure = false;
  unsigned workers = 1;
  int intersection_radius = 0;
  std::string out;
  std::size_t max_cells = default_max_cells();
};

int run_verify(const VerifyArgs& a) {
  const auto ns = parse_n_range(a.n);
  LemmaSuiteOptions options;
  options.systolize = !a.no_systolize;
  options.workers = a.workers;
  options.max_cells = a.max_cells;
  options.intersection_radius = a.intersection_radius;
  const auto results = run_lemma_suite(ns, options);
  emit(a.out, dump(lemma_report_to_json(results, ns, options.systolize)));
  bool all = true;
  for (const auto& r : results) {
    std::cerr << (r.pass ? "pass " : "FAIL ") << r.lemma << " n=" << r.n << " checked=" << r.checked;
    if (!r.pass) std::cerr << " : " << r.detail;
    std::cerr << "\n";
    all = all && r.pass;
  }
  if (a.expect_failure) {
    std::cerr << (all ? "expected a failing check, none found\n" : "failure observed as expected\n");
    return all ? kExitFail : 0;
  }
  return all ? 0 : kExitFail;
}

// ---- assemble-link / certify ------------------------------------------------------

LabeledDefiningGraph load_gamma(const std::string& path) { return parse_defining_graph_text(read_file(path)); }

struct AssembleArgs {
  std::string gamma;
  bool no_systolize = false;
  bool reverse = false;
  std::string format = "json";
  std::string out;
  std::size_t max_cells = default_max_cells();
};

int run_assemble(const AssembleArgs& a) {
  const auto g = load_gamma(a.gamma);
  AssemblyOptions options{!a.no_systolize, a.reverse, a.max_cells};
  const auto link = assemble_real_link(g, options);
  emit(a.out, a.format == "dot" ? assembled_link_to_dot(link) : dump(assembled_link_to_json(link)));
  std::cerr << "vertices=" << link.graph.vertex_count() << " edges=" << link.graph.edge_count()
            << " blocks=" << link.blocks.size() << "\n";
  return 0;
}

struct CertifyArgs {
  std::string gamma;
  bool no_systolize = false;
  unsigned workers = 1;
  std::size_t max_search_vertices = 100000;
  std::string out;
  std::size_t max_cells = default_max_cells();
};

int run_certify(const CertifyArgs& a) {
  const auto g = load_gamma(a.gamma);
  CertifyOptions options;
  options.systolize = !a.no_systolize;
  options.workers = a.workers;
  options.max_cells = a.max_cells;
  options.max_search_vertices = a.max_search_vertices;
  const auto report = certify_systolic_links(g, options);
  emit(a.out, dump(report.to_json()));
  std::cerr << "verdict: " << (report.verdict() ? "pass" : "fail") << "\n";
  return report.verdict() ? 0 : kExitFail;
}

// ---- export ----------------------------------------------------------------------

struct ExportArgs {
  int n = 3;
  std::string vertex = "identity";
  bool no_systolize = false;
  std::string format = "json";
  std::string out;
  std::size_t max_cells = default_max_cells();
};

int run_export(const ExportArgs& a) {
  DihedralIndex n(a.n);
  BallComplex ball = build_ball(n, a.n, !a.no_systolize, a.max_cells);
  const auto id = ball.group().identity();
  VertexId center = VertexId::real(id);
  std::optional<NamedPartition> partition;
  if (a.vertex == "identity") {
    if (a.n >= 3) {
      partition = real_link_partition(n, ball.cell_template());
    } else {
      partition = NamedPartition{n2_link_partition(), {}};
    }
  } else if (a.vertex.size() > 1 && a.vertex[0] == 'c') {
    int i = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(a.vertex.substr(1), &used);
      if (used + 1 != a.vertex.size()) i = 0;
    } catch (const std::exception&) {
      i = 0;
    }
    if (i < 1 || i > a.n - 2) throw InputError("--vertex c<i> needs 1 <= i <= n-2");
    center = VertexId::interior(id, i);
    partition = interior_link_partition(n, i, ball.cell_template());
  } else {
    throw InputError("--vertex must be 'identity' or c<i>");
  }
  const auto link = link_of(center, ball);
  if (a.format == "dot") {
    emit(a.out, link_to_dot(link, &*partition));
  } else {
    ordered_json doc;
    doc["n"] = a.n;
    doc["systolize"] = !a.no_systolize;
    const auto body = link_to_json(link, center, &*partition);
    for (const auto& [k, v] : body.items()) doc[k] = v;
    emit(a.out, dump(doc));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Systolic complexes for dihedral Artin groups and link certificates for labelled defining graphs"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "dot"};

  BuildBallArgs bb;
  auto* build = app.add_subcommand("build-ball", "Build a ball of the complex for DA_n and export it");
  build->add_option("--n", bb.n, "Dihedral index")->required()->check(CLI::Range(2, 64));
  build->add_option("--radius", bb.radius, "Word-length radius of cell left tips")->required()->check(CLI::NonNegativeNumber);
  build->add_flag("--no-systolize", bb.no_systolize, "Omit zigzag edges");
  build->add_option("--format", bb.format)->check(CLI::IsMember(formats))->capture_default_str();
  build->add_option("--out", bb.out, "Output file (default stdout)");
  build->add_option("--max-cells", bb.max_cells, "Cell budget")->check(CLI::PositiveNumber)->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-lemmas", "Run the lemma suite over a range of n");
  verify->add_option("--n", va.n, "n, a..b or a,b,c")->capture_default_str();
  verify->add_flag("--no-systolize", va.no_systolize, "Check the unsystolized complex");
  verify->add_flag("--expect-failure", va.expect_failure, "Exit 0 only if some check fails");
  verify->add_option("--workers", va.workers, "Worker threads (0 = hardware)")->capture_default_str();
  verify->add_option("--intersection-radius", va.intersection_radius, "Ball radius for precell checks (0 = default)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--out", va.out, "Output file (default stdout)");
  verify->add_option("--max-cells", va.max_cells, "Cell budget")->check(CLI::PositiveNumber)->capture_default_str();

  AssembleArgs aa;
  auto* assemble = app.add_subcommand("assemble-link", "Assemble the link of a real vertex for a defining graph");
  assemble->add_option("--gamma", aa.gamma, "Defining graph JSON")->required();
  assemble->add_flag("--no-systolize", aa.no_systolize, "Use unsystolized blocks");
  assemble->add_flag("--reverse-orientation", aa.reverse, "Let the larger endpoint of each edge play a");
  assemble->add_option("--format", aa.format)->check(CLI::IsMember(formats))->capture_default_str();
  assemble->add_option("--out", aa.out, "Output file (default stdout)");
  assemble->add_option("--max-cells", aa.max_cells, "Cell budget")->check(CLI::PositiveNumber)->capture_default_str();

  CertifyArgs ca;
  auto* certify = app.add_subcommand("certify", "Certify the link conditions for a defining graph");
  certify->add_option("--gamma", ca.gamma, "Defining graph JSON")->required();
  certify->add_flag("--no-systolize", ca.no_systolize, "Use unsystolized blocks");
  certify->add_option("--workers", ca.workers, "Worker threads (0 = hardware)")->capture_default_str();
  certify->add_option("--max-search-vertices", ca.max_search_vertices, "Cycle search budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  certify->add_option("--out", ca.out, "Output file (default stdout)");
  certify->add_option("--max-cells", ca.max_cells, "Cell budget")->check(CLI::PositiveNumber)->capture_default_str();

  ExportArgs ea;
  auto* exp = app.add_subcommand("export", "Export a vertex link of the complex for DA_n with its partition");
  exp->add_option("--n", ea.n, "Dihedral index")->required()->check(CLI::Range(2, 64));
  exp->add_option("--vertex", ea.vertex, "identity or c<i>")->capture_default_str();
  exp->add_flag("--no-systolize", ea.no_systolize, "Omit zigzag edges");
  exp->add_option("--format", ea.format)->check(CLI::IsMember(formats))->capture_default_str();
  exp->add_option("--out", ea.out, "Output file (default stdout)");
  exp->add_option("--max-cells", ea.max_cells, "Cell budget")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*build) return run_build_ball(bb);
    if (*verify) return run_verify(va);
    if (*assemble) return run_assemble(aa);
    if (*certify) return run_certify(ca);
    if (*exp) return run_export(ea);
  } catch (const ParseError& e) {
    if (e.location().empty()) {
      std::cerr << "error: invalid input: " << e.message() << "\n";
    } else {
      std::cerr << "error: invalid input at " << e.location() << ": " << e.message() << "\n";
    }
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
