// walklab: exact periodicity analysis of Grover walks on regular graphs.
//
// Exit codes: 0 success, 1 input error, 2 `period` found the walk not periodic.

#include "walklab/builder.hpp"
#include "walklab/feasibility.hpp"
#include "walklab/graph_io.hpp"
#include "walklab/linalg.hpp"
#include "walklab/periodicity.hpp"
#include "walklab/quadrangles.hpp"
#include "walklab/selfcheck.hpp"
#include "walklab/structure.hpp"
#include "walklab/tables.hpp"
#include "walklab/walk.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using namespace walklab;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotPeriodic = 2;

struct GraphSource {
  std::string expr;
  std::string file;
};

struct Timer {
  bool enabled = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  void report(const char* what) const {
    if (!enabled) return;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::cerr << "[" << what << "] " << dt.count() << " s\n";
  }
};

void add_graph_source(CLI::App* sub, GraphSource& src) {
  auto* input = sub->add_option_group("input", "graph to analyse");
  input->add_option("--expr", src.expr, "builder expression, e.g. \"tensorj(cycle(6),2)\"");
  input->add_option("--file", src.file, "graph6 or edge-list file");
  input->require_option(1);
}

Graph load(const GraphSource& src) {
  if (!src.expr.empty()) return build_graph(src.expr);
  if (!src.file.empty()) return load_graph_file(src.file);
  throw ParseError("one of --expr or --file is required");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void check_oracle(const Graph& g, const PeriodicityVerdict& v) {
  if (2 * g.edge_count() > kOracleMaxArcs) return;
  if (const auto* p = std::get_if<Periodic>(&v)) {
    const auto tau = period_oracle(g, p->period);
    if (!tau || *tau != p->period) throw std::logic_error("period oracle disagrees with the sieve");
  }
}

int cmd_analyze(const GraphSource& src, const std::string& format, long rmax, bool no_oracle, const Timer& timer) {
  const Graph g = load(src);
  const Index k = require_connected_regular(g);
  const auto split = is_bipartite(g);
  const SpectrumExtraction extracted = extract_spectrum(charpoly(g.adjacency()));
  const auto* spectrum = std::get_if<Spectrum>(&extracted);
  const bool walk_regular = walk_regularity_check(g, rmax);
  timer.report("structure");

  std::optional<bool> hoffman;
  std::optional<QuadrangleReport> quad;
  if (spectrum) {
    hoffman = hoffman_check(g);
    quad = quadrangle_report(*spectrum, g.order(), k, g);
  }
  const QuadrangleCount counted = count_quadrangles(g);
  timer.report("spectral checks");

  PeriodicityOptions opts;
  opts.cross_check = !no_oracle;
  const PeriodicityVerdict verdict = decide_periodic(g, opts);
  if (!no_oracle) check_oracle(g, verdict);
  timer.report("periodicity");

  const std::string spectrum_text =
      spectrum ? spectrum->to_string() : "unresolved, residual " + std::get<Unresolved>(extracted).residual.to_string();

  if (format == "json") {
    nlohmann::ordered_json j;
    j["vertices"] = g.order();
    j["edges"] = g.edge_count();
    j["degree"] = k;
    j["connected"] = true;
    j["bipartite"] = split.has_value();
    j["spectrum"] = spectrum_text;
    j["walk_regular"] = walk_regular;
    if (hoffman) j["hoffman"] = *hoffman;
    j["quadrangles"] = counted.total;
    if (quad) {
      j["q_spectral"] = to_string(quad->q_spectral);
      j["q_x_spectral"] = to_string(quad->qx_spectral);
    }
    j["periodicity"] = nlohmann::ordered_json::parse(to_json(verdict));
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "vertices     " << g.order() << "\n"
            << "edges        " << g.edge_count() << "\n"
            << "degree       " << k << "\n"
            << "bipartite    " << yes_no(split.has_value());
  if (split) std::cout << " (" << split->part1.size() << "+" << split->part2.size() << ")";
  std::cout << "\n"
            << "spectrum     " << spectrum_text << "\n"
            << "walk-regular " << yes_no(walk_regular) << "\n"
            << "hoffman      " << (hoffman ? (*hoffman ? "OK" : "FAILED") : "n/a") << "\n"
            << "quadrangles  q=" << counted.total;
  if (quad) std::cout << " (spectral q=" << to_string(quad->q_spectral) << ", q_x=" << to_string(quad->qx_spectral) << ")";
  std::cout << "\n"
            << "periodicity  " << to_string(verdict) << "\n";
  return kExitOk;
}

int cmd_period(const GraphSource& src, const std::string& format, bool no_oracle, const Timer& timer) {
  const Graph g = load(src);
  PeriodicityOptions opts;
  opts.cross_check = !no_oracle;
  const PeriodicityVerdict verdict = decide_periodic(g, opts);
  if (!no_oracle) check_oracle(g, verdict);
  timer.report("periodicity");
  std::cout << (format == "json" ? to_json(verdict) : to_string(verdict)) << "\n";
  return is_periodic(verdict) ? kExitOk : kExitNotPeriodic;
}

int cmd_construct(const std::string& expr, const std::string& out, const std::string& graph_format) {
  const Graph g = build_graph(expr);
  const std::string text = graph_format == "edgelist" ? write_edge_list(g) : write_graph6(g) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + out);
  f << text;
  return kExitOk;
}

int cmd_quadrangles(const GraphSource& src, const std::string& format) {
  const Graph g = load(src);
  const QuadrangleCount c = count_quadrangles(g);
  const bool constant =
      std::adjacent_find(c.per_vertex.begin(), c.per_vertex.end(), std::not_equal_to<>()) == c.per_vertex.end();
  std::optional<QuadrangleReport> quad;
  if (const auto k = regularity(g)) {
    const auto extracted = extract_spectrum(charpoly(g.adjacency()));
    if (const auto* s = std::get_if<Spectrum>(&extracted)) quad = quadrangle_report(*s, g.order(), *k);
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["q"] = c.total;
    j["per_vertex"] = c.per_vertex;
    j["per_vertex_constant"] = constant;
    if (quad) {
      j["q_spectral"] = to_string(quad->q_spectral);
      j["q_x_spectral"] = to_string(quad->qx_spectral);
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "q            " << c.total << "\n";
  if (constant && !c.per_vertex.empty())
    std::cout << "q_x          " << c.per_vertex.front() << " at every vertex\n";
  else
    std::cout << "q_x          not constant\n";
  if (quad) std::cout << "spectral     q=" << to_string(quad->q_spectral) << " q_x=" << to_string(quad->qx_spectral) << "\n";
  return kExitOk;
}

int cmd_rows(const std::vector<TableRow>& rows, const std::string& format) {
  std::cout << render_tables(rows, *parse_format(format));
  return kExitOk;
}

int cmd_selfcheck(std::uint64_t seed, const std::string& fault) {
  SelfcheckOptions opts;
  opts.seed = seed;
  opts.corrupt_cyclotomic = fault == "cyclotomic";
  bool all = true;
  for (const auto& r : run_selfcheck(opts)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
    all = all && r.passed;
  }
  return all ? kExitOk : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact periodicity analysis of Grover walks on regular graphs"};
  app.name("walklab");
  app.require_subcommand(1);

  bool verbose = false;
  std::uint64_t seed = 0;
  app.add_flag("--verbose", verbose, "print timings on stderr");
  app.add_option("--seed", seed, "seed for randomized checks (output does not depend on it)");

  const std::vector<std::string> report_formats{"text", "json"};
  const std::vector<std::string> table_formats{"text", "csv", "json"};
  const std::vector<std::string> class_names{"half", "sqrt2", "sqrt3"};

  GraphSource src;
  std::string format = "text";
  bool no_oracle = false;
  long rmax = 0;

  auto* analyze = app.add_subcommand("analyze", "spectrum, structure checks and periodicity of a graph");
  add_graph_source(analyze, src);
  analyze->add_option("--format", format)->check(CLI::IsMember(report_formats));
  analyze->add_option("--rmax", rmax, "walk-regularity depth (default 2n)");
  analyze->add_flag("--no-oracle", no_oracle, "skip the direct U cross-checks");

  auto* period = app.add_subcommand("period", "decide periodicity; exit 2 when not periodic");
  add_graph_source(period, src);
  period->add_option("--format", format)->check(CLI::IsMember(report_formats));
  period->add_flag("--no-oracle", no_oracle, "skip the direct U cross-checks");

  std::string out_path;
  std::string graph_format = "graph6";
  auto* construct = app.add_subcommand("construct", "build a graph and write it as graph6 or an edge list");
  construct->add_option("--expr", src.expr, "builder expression")->required();
  construct->add_option("-o,--out", out_path, "output path (default stdout)");
  construct->add_option("--graph-format", graph_format)->check(CLI::IsMember({"graph6", "edgelist"}));

  std::string class_name_opt;
  long k_single = 0;
  long k_min = 2;
  long k_max = 10;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "feasible five-eigenvalue spectra for one theta class");
  enumerate_cmd->add_option("--class", class_name_opt)->required()->check(CLI::IsMember(class_names));
  auto* k_opt = enumerate_cmd->add_option("--k", k_single, "single even degree");
  enumerate_cmd->add_option("--kmin", k_min)->excludes(k_opt);
  enumerate_cmd->add_option("--kmax", k_max)->excludes(k_opt);
  enumerate_cmd->add_option("--format", format)->check(CLI::IsMember(table_formats));

  auto* tables = app.add_subcommand("tables", "regenerate the feasibility tables for every class");
  tables->add_option("--kmax", k_max, "largest degree (default 10)");
  tables->add_option("--class", class_name_opt, "restrict to one class")->check(CLI::IsMember(class_names));
  tables->add_option("--format", format)->check(CLI::IsMember(table_formats));

  auto* quadrangles = app.add_subcommand("quadrangles", "count 4-cycles and compare with the spectral formula");
  add_graph_source(quadrangles, src);
  quadrangles->add_option("--format", format)->check(CLI::IsMember(report_formats));

  std::string fault;
  auto* selfcheck = app.add_subcommand("selfcheck", "run the invariant suite");
  selfcheck->add_option("--inject-fault", fault, "corrupt a component to test the suite")
      ->check(CLI::IsMember({"cyclotomic"}));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  Timer timer;
  timer.enabled = verbose;
  try {
    if (*analyze) return cmd_analyze(src, format, rmax, no_oracle, timer);
    if (*period) return cmd_period(src, format, no_oracle, timer);
    if (*construct) return cmd_construct(src.expr, out_path, graph_format);
    if (*quadrangles) return cmd_quadrangles(src, format);
    if (*selfcheck) return cmd_selfcheck(seed, fault);
    if (*enumerate_cmd) {
      const ThetaClass c = *parse_class(class_name_opt);
      const auto rows = *k_opt ? build_rows(c, k_single, k_single) : build_rows(c, k_min, k_max);
      return cmd_rows(rows, format);
    }
    if (*tables) {
      std::vector<ThetaClass> classes{ThetaClass::Half, ThetaClass::Sqrt2, ThetaClass::Sqrt3};
      if (!class_name_opt.empty()) classes = {*parse_class(class_name_opt)};
      const auto rows = build_tables(k_max, classes);
      timer.report("tables");
      return cmd_rows(rows, format);
    }
  } catch (const walklab::Error& e) {
    std::cerr << "walklab: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "walklab: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
