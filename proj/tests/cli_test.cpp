#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rainbowtri/coloring.hpp"
#include "rainbowtri/graph6.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace rainbowtri;

namespace {

struct CliRun {
  int exit_code;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = std::string(RAINBOWTRI_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("rainbowtri_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

json last_report(const fs::path& dir) {
  std::ifstream in(dir / "reports.jsonl");
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return json::parse(last);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, GenWritesCanonicalGraph6) {
  fs::path dir = fresh_dir("gen");
  CliRun r = run_cli("gen --n 4 --out-dir " + dir.string());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(slurp(dir / "triangulations_n4.g6"), "C~\n");
  json rep = last_report(dir);
  EXPECT_EQ(rep["command"], "gen");
  EXPECT_EQ(rep["values"]["count"], 1);
  EXPECT_EQ(rep["exhausted"], true);
}

TEST(Cli, GenCountsForN6) {
  fs::path dir = fresh_dir("gen6");
  CliRun r = run_cli("gen --n 6 --out-dir " + dir.string());
  EXPECT_EQ(r.exit_code, 0);
  std::istringstream lines(slurp(dir / "triangulations_n6.g6"));
  std::string line;
  int count = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++count;
  EXPECT_EQ(count, 2);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("gen --n 2").exit_code, 2);      // below domain
  EXPECT_EQ(run_cli("gen").exit_code, 2);            // missing --n
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);     // unknown subcommand
  EXPECT_EQ(run_cli("verify --suite bogus").exit_code, 2);
}

TEST(Cli, RbReportsKnownValueWithWitnesses) {
  fs::path dir = fresh_dir("rb");
  CliRun r = run_cli("rb --n 4 --t 2 --out-dir " + dir.string());
  EXPECT_EQ(r.exit_code, 0) << r.output;
  json rep = last_report(dir);
  EXPECT_EQ(rep["values"]["rb"], 4);
  EXPECT_EQ(rep["exhausted"], true);

  Graph extremal = parse_graph6(slurp(dir / "rb_n4_t2_extremal.g6"));
  EXPECT_EQ(extremal.order(), 4);
  std::ifstream cf(dir / "rb_n4_t2_coloring.txt");
  EdgeColoring c = read_coloring(cf, extremal);
  EXPECT_EQ(c.num_colors, 3);
}

TEST(Cli, RerunsProduceByteEqualWitnesses) {
  fs::path dir1 = fresh_dir("rb_a");
  fs::path dir2 = fresh_dir("rb_b");
  ASSERT_EQ(run_cli("rb --n 6 --t 3 --out-dir " + dir1.string()).exit_code, 0);
  ASSERT_EQ(run_cli("rb --n 6 --t 3 --out-dir " + dir2.string()).exit_code, 0);
  EXPECT_EQ(slurp(dir1 / "rb_n6_t3_extremal.g6"), slurp(dir2 / "rb_n6_t3_extremal.g6"));
  EXPECT_EQ(slurp(dir1 / "rb_n6_t3_coloring.txt"), slurp(dir2 / "rb_n6_t3_coloring.txt"));
}

TEST(Cli, ArOnAGraphFile) {
  fs::path dir = fresh_dir("ar");
  std::ofstream(dir / "k4.g6") << "C~\n";
  CliRun r = run_cli("ar --graph " + (dir / "k4.g6").string() + " --t 2 --out-dir " +
                     dir.string());
  EXPECT_EQ(r.exit_code, 0) << r.output;
  json rep = last_report(dir);
  EXPECT_EQ(rep["values"]["ar"], 3);
}

TEST(Cli, TuranReportsKnownValue) {
  fs::path dir = fresh_dir("turan");
  CliRun r = run_cli("turan --n 8 --t 4 --out-dir " + dir.string());
  EXPECT_EQ(r.exit_code, 0) << r.output;
  json rep = last_report(dir);
  EXPECT_EQ(rep["values"]["ex_p"], 15);
  Graph witness = parse_graph6(slurp(dir / "turan_n8_t4_witness.g6"));
  EXPECT_EQ(witness.size(), 15);
}

TEST(Cli, ConstructTuranExtremal) {
  fs::path dir = fresh_dir("construct");
  CliRun r = run_cli("construct --n 9 --t 4 --kind turan --out-dir " + dir.string());
  EXPECT_EQ(r.exit_code, 0) << r.output;
  Graph g = parse_graph6(slurp(dir / "turan_extremal_n9_t4.g6"));
  EXPECT_EQ(g.size(), 17);
}

TEST(Cli, ConstructRbLowerColoring) {
  fs::path dir = fresh_dir("construct_rb");
  CliRun r = run_cli("construct --n 11 --t 5 --kind rb-lower --out-dir " + dir.string());
  EXPECT_EQ(r.exit_code, 0) << r.output;
  json rep = last_report(dir);
  EXPECT_EQ(rep["values"]["colors"], 22);
  Graph host = parse_graph6(slurp(dir / "rb_lower_n11_t5_host.g6"));
  std::ifstream cf(dir / "rb_lower_n11_t5_coloring.txt");
  EdgeColoring c = read_coloring(cf, host);
  EXPECT_EQ(c.num_colors, 22);
}

TEST(Cli, DecomposeStar) {
  fs::path dir = fresh_dir("decompose");
  // K_{1,3}: center 0
  Graph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  std::ofstream(dir / "star.g6") << emit_graph6(star) << "\n";
  CliRun r = run_cli("decompose --graph " + (dir / "star.g6").string() + " --out-dir " +
                     dir.string());
  EXPECT_EQ(r.exit_code, 0) << r.output;
  json rep = last_report(dir);
  EXPECT_EQ(rep["values"]["d"], 1);
  EXPECT_EQ(rep["values"]["s_size"], 1);
  EXPECT_EQ(rep["values"]["q"], 3);
}

TEST(Cli, EnvVarOverridesOutDir) {
  fs::path flag_dir = fresh_dir("env_flag");
  fs::path env_dir = fresh_dir("env_real");
  std::string cmd = "RAINBOWTRI_OUT=" + env_dir.string() + " " + RAINBOWTRI_BIN +
                    " gen --n 4 --out-dir " + flag_dir.string() + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) {
  }
  int status = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 0);
  EXPECT_TRUE(fs::exists(env_dir / "triangulations_n4.g6"));
  EXPECT_FALSE(fs::exists(flag_dir / "triangulations_n4.g6"));
}

TEST(Cli, BudgetExpiryExitsThree) {
  fs::path dir = fresh_dir("budget");
  CliRun r = run_cli("rb --n 8 --t 3 --budget-secs 0.0001 --out-dir " + dir.string());
  EXPECT_EQ(r.exit_code, 3) << r.output;
  json rep = last_report(dir);
  EXPECT_EQ(rep["exhausted"], false);
  EXPECT_LE(rep["values"]["lower"].get<long long>(), rep["values"]["upper"].get<long long>());
}

TEST(Cli, VerifySuitesPass) {
  fs::path dir = fresh_dir("verify");
  for (const std::string suite :
       {"lower-bound-colorings", "matching-oracle", "core-invariants", "constructions",
        "small-turan", "small-rb"}) {
    CliRun r = run_cli("verify --suite " + suite + " --seed 1 --out-dir " + dir.string());
    EXPECT_EQ(r.exit_code, 0) << suite << ": " << r.output;
    EXPECT_NE(r.output.find("PASS suite " + suite), std::string::npos) << r.output;
  }
}
