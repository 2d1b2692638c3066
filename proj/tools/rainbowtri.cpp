// rainbowtri: compute and verify rainbow numbers of matchings in plane
// triangulations and planar Turan numbers of matchings.
//
// Subcommands: gen, rb, ar, turan, construct, decompose, verify.
// Results go to an append-only JSON-lines log plus witness sidecar files
// (graph6 and coloring format). Exit codes: 0 ok, 2 usage error,
// 3 budget-bracketed result, 4 internal invariant violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbowtri/rainbowtri.hpp"
#include "rainbowtri/report.hpp"
#include "rainbowtri/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace rainbowtri;

namespace {

struct RunConfig {
  int n = 0;
  int t = 0;
  double budget_secs = -1.0;  // <= 0 means unlimited
  int workers = 1;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  std::string graph_file;
  std::string kind = "turan";
  std::string suite;

  Budget budget() const {
    return budget_secs > 0 ? Budget::seconds(budget_secs) : Budget::unlimited();
  }

  fs::path out() const {
    const char* env = std::getenv("RAINBOWTRI_OUT");
    fs::path dir = env && *env ? fs::path(env) : fs::path(out_dir);
    fs::create_directories(dir);
    return dir;
  }

  json to_params() const {
    json p;
    if (n > 0) p["n"] = n;
    if (t > 0) p["t"] = t;
    p["budget_secs"] = budget_secs > 0 ? json(budget_secs) : json(nullptr);
    p["workers"] = workers;
    p["seed"] = seed;
    p["out_dir"] = out().string();
    if (!graph_file.empty()) p["graph"] = graph_file;
    if (!suite.empty()) p["suite"] = suite;
    return p;
  }
};

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw domain_error("cannot write " + path.string());
  out << content;
}

Graph load_graph(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw domain_error("cannot open graph file: " + file);
  std::string line;
  if (!std::getline(in, line)) throw domain_error("empty graph file: " + file);
  return parse_graph6(line);
}

std::string coloring_text(const Graph& g, const EdgeColoring& c) {
  std::ostringstream os;
  write_coloring(os, g, c);
  return os.str();
}

int finish(const RunConfig& cfg, SearchReport& report) {
  report.params = cfg.to_params();
  append_report_line(cfg.out() / "reports.jsonl", report);
  std::cout << report.to_json().dump() << '\n';
  return report.exhausted ? 0 : 3;
}

int cmd_gen(const RunConfig& cfg) {
  SearchReport report;
  report.command = "gen";
  SearchStats stats;
  {
    StatsTimer timer(stats);
    std::ostringstream os;
    int count = 0;
    generate_triangulations(cfg.n, [&](const Graph& g) {
      os << emit_graph6(g) << '\n';
      ++count;
    });
    fs::path file = cfg.out() / ("triangulations_n" + std::to_string(cfg.n) + ".g6");
    write_text_file(file, os.str());
    report.values["count"] = count;
    report.witness_files = {file.string()};
  }
  report.wall_ms = stats.wall_ms;
  return finish(cfg, report);
}

int cmd_rb(const RunConfig& cfg) {
  SearchReport report;
  report.command = "rb";
  RbResult res = rainbow_number_class(cfg.n, cfg.t, cfg.budget(), cfg.workers);
  report.values["rb"] = res.value;
  report.values["lower"] = res.lower;
  report.values["upper"] = res.upper;
  report.values["qualifying_triangulations"] = res.qualifying;
  report.exhausted = res.exact;
  report.wall_ms = res.stats.wall_ms;
  report.nodes = res.stats.nodes;

  std::string stem = "rb_n" + std::to_string(cfg.n) + "_t" + std::to_string(cfg.t);
  fs::path gfile = cfg.out() / (stem + "_extremal.g6");
  fs::path cfile = cfg.out() / (stem + "_coloring.txt");
  write_text_file(gfile, emit_graph6(res.extremal) + "\n");
  write_text_file(cfile, coloring_text(res.extremal, res.extremal_coloring));
  report.witness_files = {gfile.string(), cfile.string()};
  return finish(cfg, report);
}

int cmd_ar(const RunConfig& cfg) {
  SearchReport report;
  report.command = "ar";
  Graph g = load_graph(cfg.graph_file);
  ARCertificate cert = anti_ramsey_value(g, cfg.t, cfg.budget());
  report.values["ar"] = cert.value;
  report.values["upper"] = cert.upper_bound;
  report.exhausted = cert.exhausted;
  report.wall_ms = cert.stats.wall_ms;
  report.nodes = cert.stats.nodes;

  if (cert.witness) {
    std::string stem = fs::path(cfg.graph_file).stem().string();
    fs::path cfile = cfg.out() / ("ar_" + stem + "_t" + std::to_string(cfg.t) + "_coloring.txt");
    write_text_file(cfile, coloring_text(g, *cert.witness));
    report.witness_files = {cfile.string()};
  }
  return finish(cfg, report);
}

int cmd_turan(const RunConfig& cfg) {
  SearchReport report;
  report.command = "turan";
  TuranCertificate cert = planar_turan_matching(cfg.n, cfg.t, cfg.budget(), cfg.workers);
  report.values["ex_p"] = cert.value;
  report.values["lower"] = cert.lower;
  report.values["upper"] = cert.upper;
  report.exhausted = cert.exhausted;
  report.wall_ms = cert.stats.wall_ms;
  report.nodes = cert.stats.nodes;

  std::string stem = "turan_n" + std::to_string(cfg.n) + "_t" + std::to_string(cfg.t);
  fs::path wfile = cfg.out() / (stem + "_witness.g6");
  write_text_file(wfile, emit_graph6(cert.witness) + "\n");
  report.witness_files = {wfile.string()};
  return finish(cfg, report);
}

int cmd_construct(const RunConfig& cfg) {
  SearchReport report;
  report.command = "construct";
  report.values["kind"] = cfg.kind;
  std::string stem_dims = "_n" + std::to_string(cfg.n) + "_t" + std::to_string(cfg.t);
  if (cfg.kind == "turan") {
    ExtremalConstruction c = build_turan_extremal(cfg.n, cfg.t);
    fs::path gfile = cfg.out() / ("turan_extremal" + stem_dims + ".g6");
    write_text_file(gfile, emit_graph6(c.graph) + "\n");
    report.values["edges"] = c.graph.size();
    report.witness_files = {gfile.string()};
  } else if (cfg.kind == "rb-lower") {
    LowerBoundColoring lbc = build_rb_lower_coloring(cfg.n, cfg.t);
    fs::path gfile = cfg.out() / ("rb_lower" + stem_dims + "_host.g6");
    fs::path cfile = cfg.out() / ("rb_lower" + stem_dims + "_coloring.txt");
    write_text_file(gfile, emit_graph6(lbc.host) + "\n");
    write_text_file(cfile, coloring_text(lbc.host, lbc.coloring));
    report.values["colors"] = lbc.coloring.num_colors;
    report.values["host_edges"] = lbc.host.size();
    report.witness_files = {gfile.string(), cfile.string()};
  } else {
    throw domain_error("unknown construction kind '" + cfg.kind + "' (turan or rb-lower)");
  }
  return finish(cfg, report);
}

int cmd_decompose(const RunConfig& cfg) {
  SearchReport report;
  report.command = "decompose";
  Graph g = load_graph(cfg.graph_file);
  SearchStats stats;
  GEDecomposition ge;
  {
    StatsTimer timer(stats);
    ge = gallai_edmonds(g);
  }
  report.values["d"] = ge.matching_size;
  report.values["s"] = ge.s;
  report.values["s_size"] = ge.s.size();
  report.values["q"] = ge.odd_count();
  report.values["odd_components"] = ge.odd_components;
  report.values["even_components"] = ge.even_components;
  report.wall_ms = stats.wall_ms;
  return finish(cfg, report);
}

int cmd_verify(const RunConfig& cfg) {
  SearchReport report;
  report.command = "verify";
  SearchStats stats;
  VerifyResult res;
  {
    StatsTimer timer(stats);
    res = run_verify_suite(cfg.suite, cfg.seed, cfg.budget(), cfg.workers);
  }
  for (const std::string& line : res.lines) std::cout << line << '\n';
  report.values["suite"] = cfg.suite;
  report.values["pass"] = res.pass;
  report.values["checks"] = res.lines;
  report.wall_ms = stats.wall_ms;
  report.params = cfg.to_params();
  append_report_line(cfg.out() / "reports.jsonl", report);
  std::cout << (res.pass ? "PASS" : "FAIL") << " suite " << cfg.suite << '\n';
  return res.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow numbers of matchings in plane triangulations"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget-secs", cfg.budget_secs, "soft wall-clock limit per run")
        ->check(CLI::PositiveNumber);
    sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out-dir", cfg.out_dir,
                    "output directory (env RAINBOWTRI_OUT overrides)");
    sub->add_option("--seed", cfg.seed, "seed recorded in reports; drives property suites");
  };

  CLI::App* gen = app.add_subcommand("gen", "stream all plane triangulations of order n");
  gen->add_option("--n", cfg.n, "order")->required();
  add_common(gen);

  CLI::App* rb = app.add_subcommand("rb", "exact rainbow number rb(T_n, M_t)");
  rb->add_option("--n", cfg.n, "order")->required();
  rb->add_option("--t", cfg.t, "matching size")->required();
  add_common(rb);

  CLI::App* ar = app.add_subcommand("ar", "exact anti-Ramsey value ar(G, M_t)");
  ar->add_option("--graph", cfg.graph_file, "graph6 file")->required();
  ar->add_option("--t", cfg.t, "matching size")->required();
  add_common(ar);

  CLI::App* turan = app.add_subcommand("turan", "exact planar Turan number ex_P(n, M_t)");
  turan->add_option("--n", cfg.n, "order")->required();
  turan->add_option("--t", cfg.t, "matching size")->required();
  add_common(turan);

  CLI::App* construct = app.add_subcommand("construct", "build extremal objects");
  construct->add_option("--n", cfg.n, "order")->required();
  construct->add_option("--t", cfg.t, "matching size")->required();
  construct->add_option("--kind", cfg.kind, "turan | rb-lower");
  add_common(construct);

  CLI::App* decompose = app.add_subcommand("decompose", "Gallai-Edmonds decomposition");
  decompose->add_option("--graph", cfg.graph_file, "graph6 file")->required();
  add_common(decompose);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite, "suite name")->required();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(cfg);
    if (rb->parsed()) return cmd_rb(cfg);
    if (ar->parsed()) return cmd_ar(cfg);
    if (turan->parsed()) return cmd_turan(cfg);
    if (construct->parsed()) return cmd_construct(cfg);
    if (decompose->parsed()) return cmd_decompose(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const invariant_violation& e) {
    std::cerr << "internal invariant violation: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 2;
}
