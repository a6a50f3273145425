#include "aastokes_tools/config.hpp"
#include "aastokes_tools/study.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace aastokes::tools {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "aastokes_tools_test";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(AASTOKES_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Config, ParsesKeyValueFile) {
  const auto path = scratch("a.cfg");
  write_file(path, "# study\nproblem = pressure\nM = 1, 3\nh = 0.2,0.1   # two grids\npoint = 0,1.6,0\nde.n = 400\n");
  const StudyConfig cfg = load_config(path).resolved();
  EXPECT_EQ(cfg.problem, Problem::pressure);
  EXPECT_EQ(cfg.M, (std::vector<int>{1, 3}));
  EXPECT_EQ(cfg.h, (std::vector<double>{0.2, 0.1}));
  EXPECT_EQ(cfg.tau, (std::vector<double>{0.05, 0.025}));
  EXPECT_DOUBLE_EQ(cfg.shape(), 5.0);
  EXPECT_DOUBLE_EQ(cfg.point[1], 1.6);
  EXPECT_EQ(cfg.de.n, 400);
}

TEST(Config, DefaultsPerProblem) {
  StudyConfig cfg;
  EXPECT_DOUBLE_EQ(cfg.resolved().shape(), 4.0);
  cfg.problem = Problem::grad_pressure;
  EXPECT_DOUBLE_EQ(cfg.resolved().shape(), 5.0);
  cfg.D = 3.0;
  EXPECT_DOUBLE_EQ(cfg.resolved().shape(), 3.0);
  EXPECT_EQ(StudyConfig{}.resolved().h.size(), 5u);
}

TEST(Config, RejectsInvalidSettings) {
  StudyConfig cfg;
  EXPECT_THROW(apply_setting(cfg, "colour", "red"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "problem", "navier-stokes"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "h", "0.1,abc"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "point", "1,2"), ConfigError);
  StudyConfig c1;
  c1.M.clear();
  EXPECT_THROW(c1.resolved(), ConfigError);
  StudyConfig c2;
  c2.h = {0.1, 0.2};
  EXPECT_THROW(c2.resolved(), ConfigError);
  StudyConfig c3;
  c3.tau = {0.1};
  EXPECT_THROW(c3.resolved(), ConfigError);
  StudyConfig c4;
  c4.M = {11};
  EXPECT_THROW(c4.resolved(), ConfigError);
  EXPECT_THROW(load_config(scratch("missing.cfg")), IoError);
}

TEST(Study, RatesAndCsvRoundTrip) {
  StudyConfig cfg;
  cfg.M = {1, 2};
  cfg.h = {0.2, 0.1, 0.05};
  const auto table = run_study(cfg.resolved());
  ASSERT_EQ(table.rows.size(), 6u);
  EXPECT_FALSE(table.rows[0].rate);
  EXPECT_FALSE(table.rows[3].rate);
  EXPECT_NEAR(*table.rows[2].rate, 2.0, 0.1);
  EXPECT_NEAR(*table.rows[5].rate, 4.0, 0.1);
  std::stringstream csv;
  write_csv(table, csv);
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "M,h,tau,error,rate");
  double prev = 0;
  int n = 0;
  while (std::getline(csv, line)) {
    std::stringstream ls(line);
    std::string m, h, tau, err, rate;
    std::getline(ls, m, ',');
    std::getline(ls, h, ',');
    std::getline(ls, tau, ',');
    std::getline(ls, err, ',');
    std::getline(ls, rate, ',');
    EXPECT_TRUE(tau.empty());
    const double e = std::stod(err);
    if (n % 3 == 0) EXPECT_TRUE(rate.empty());
    else EXPECT_NEAR(std::stod(rate), std::log2(prev / e), 5e-4);
    prev = e;
    ++n;
  }
  EXPECT_EQ(n, 6);
  const std::string text = format_text(table);
  EXPECT_NE(text.find("M=2 err"), std::string::npos);
}

TEST(Study, HeatSourceCarriesTau) {
  StudyConfig cfg;
  cfg.problem = Problem::heat_source;
  cfg.M = {1};
  cfg.h = {0.2, 0.1};
  cfg.mori.n = 300;
  cfg.mori.kappa = 0.02;
  const auto table = run_study(cfg.resolved());
  ASSERT_TRUE(table.rows[1].tau);
  EXPECT_DOUBLE_EQ(*table.rows[1].tau, 0.025);
  EXPECT_NEAR(*table.rows[1].rate, 2.0, 0.1);
  cfg.time = 0.51;
  EXPECT_THROW(run_study(cfg.resolved()), ConfigError);
}

TEST(Cli, ExitCodesAndDeterminism) {
  const auto cfg = scratch("cli.cfg");
  write_file(cfg, "problem = heat-homog\nM = 1,2\nh = 0.2,0.1\n");
  const auto a = scratch("a.csv"), b = scratch("b.csv");
  EXPECT_EQ(run_cli("study --config " + cfg.string() + " --out " + a.string()), 0);
  EXPECT_EQ(run_cli("study --config " + cfg.string() + " --out " + b.string()), 0);
  EXPECT_EQ(read_file(a), read_file(b));
  EXPECT_FALSE(read_file(a).empty());

  const auto none = scratch("none.csv");
  fs::remove(none);
  EXPECT_EQ(run_cli("study --config " + cfg.string() + " --M '' --out " + none.string()), 2);
  EXPECT_FALSE(fs::exists(none));
  EXPECT_EQ(run_cli("study --problem nope"), 2);
  EXPECT_EQ(run_cli("study --config " + scratch("absent.cfg").string()), 4);
  EXPECT_EQ(run_cli("study --config " + cfg.string() + " --out /nonexistent-dir/x.csv"), 4);
  EXPECT_EQ(run_cli("frobnicate"), 2);
}

TEST(Cli, SolveWritesGridDumps) {
  const auto cfg = scratch("solve.cfg");
  write_file(cfg, "data = zero\nM = 1\nh = 0.5\nradius = 1.0\nwindow = 1\n");
  const auto dir = scratch("solve_out");
  fs::remove_all(dir);
  ASSERT_EQ(run_cli("solve --config " + cfg.string() + " --times 0.125,0.25 --out " + dir.string()), 0);
  const std::string text = read_file(dir / "solution_t0.25.csv");
  std::stringstream ss(text);
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "i,j,k,x,y,z,u1,u2,u3,P,dPx,dPy,dPz");
  int rows = 0;
  while (std::getline(ss, line)) {
    ++rows;
    const auto tail = line.substr(line.find(',', line.find(',', line.find(',', line.find(',', line.find(',', line.find(',') + 1) + 1) + 1) + 1) + 1));
    EXPECT_EQ(tail, ",0,0,0,0,0,0,0");
  }
  EXPECT_EQ(rows, 27);
  EXPECT_TRUE(fs::exists(dir / "solution_t0.125.csv"));
  EXPECT_EQ(run_cli("solve --config " + cfg.string() + " --times 0.3 --out " + dir.string()), 2);
}

} // namespace
} // namespace aastokes::tools
