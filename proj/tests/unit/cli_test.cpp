// Copyright 2026 The hilfer-cauchy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "checks.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "data.hpp"

namespace hilfer::cli {
namespace {

namespace fs = std::filesystem;
constexpr double kPi = 3.14159265358979323846;

const char* kBase =
    "# comment line\n"
    "n = 2\n"
    "alpha = 0.8   # trailing comment\n"
    "beta = 1\n"
    "x_min = -2\nx_max = 2\nx_steps = 5\n"
    "y_min = 0.1\ny_max = 1\ny_steps = 3\n";

std::string error_of(const std::string& text, Command c = Command::solve) {
  try {
    parse_config(text, c);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

fs::path temp_dir() {
  const fs::path p = fs::temp_directory_path() / ("hilfer_cli_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HILFER_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::vector<std::vector<double>> parse_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,y,value,err");
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> r;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) r.push_back(std::stod(cell));
    rows.push_back(r);
  }
  return rows;
}

TEST(ParseConfig, AcceptsBaseConfig) {
  const RunConfig c = parse_config(kBase, Command::solve);
  EXPECT_EQ(c.n, 2);
  EXPECT_DOUBLE_EQ(c.alpha, 0.8);
  EXPECT_EQ(c.grid.x_steps, 5);
  EXPECT_EQ(c.data0, "gaussian");
}

TEST(ParseConfig, RejectsAlphaOutOfRange) {
  EXPECT_NE(error_of("alpha = 2.0\n").find("alpha must lie in (0,2)"), std::string::npos);
}

TEST(ParseConfig, RejectsGrowthAboveSigmaWithBothNumbers) {
  const std::string msg = error_of(std::string(kBase) + "growth_N = 50\n");
  EXPECT_NE(msg.find("requires N < sigma"), std::string::npos) << msg;
  EXPECT_NE(msg.find("50"), std::string::npos) << msg;
  EXPECT_NE(msg.find("sigma = "), std::string::npos) << msg;
}

TEST(ParseConfig, SyntaxErrorsCarryLineNumbers) {
  EXPECT_NE(error_of("n = 2\nbogus = 1\n").find("line 2: unknown key 'bogus'"), std::string::npos);
  EXPECT_NE(error_of("n = 2\nn = 3\n").find("line 2: duplicate key"), std::string::npos);
  EXPECT_NE(error_of("\n\nalpha 0.5\n").find("line 3"), std::string::npos);
  EXPECT_NE(error_of("alpha = abc\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("x_steps = 1.5\n").find("integer"), std::string::npos);
}

TEST(ParseConfig, RejectsBadGridAndTolerance) {
  EXPECT_FALSE(error_of("y_min = 0\n").empty());
  EXPECT_FALSE(error_of("tol = -1\n").empty());
  EXPECT_FALSE(error_of("data0 = /no/such/file.txt\n").empty());
  EXPECT_FALSE(error_of("x_min = -1\n", Command::selfsim).empty());
}

TEST(ParseConfig, RoundTrip) {
  std::vector<std::pair<std::string, Command>> cases = {
      {kBase, Command::solve},
      {std::string(kBase) + "b = -0.35\ngrowth_M = 2\ngrowth_N = 0.01\ntol = 1e-9\n", Command::solve},
      {"n = 3\nalpha = 1.5\nbeta = 0.25\nkernel_index = 1\n", Command::eval_kernel},
      {"m = 0.5\nk = 0.25\nalpha2 = 2.5\nbranch = 3\nx_min = 0.1\nterms = 17\n", Command::selfsim},
      {"", Command::verify},
  };
  for (const auto& [text, cmd] : cases) {
    const RunConfig a = parse_config(text, cmd);
    const RunConfig b = parse_config(to_config_text(a), cmd);
    EXPECT_EQ(a, b) << text;
    EXPECT_EQ(to_config_text(a), to_config_text(b));
  }
}

TEST(Data, Presets) {
  EXPECT_DOUBLE_EQ(make_data("gaussian").f(1.0), std::exp(-1.0));
  EXPECT_DOUBLE_EQ(make_data("bump").sup, std::exp(-1.0));
  EXPECT_EQ(make_data("bump").f(1.5), 0.0);
  EXPECT_DOUBLE_EQ(make_data("poly-decay").f(2.0), 0.2);
  EXPECT_EQ(make_data("zero").f(3.0), 0.0);
  EXPECT_EQ(preset_names().size(), 4u);
}

TEST(Data, TableFileInterpolates) {
  const fs::path p = temp_dir() / "table.txt";
  std::ofstream(p) << "# x value\n-1 0\n0 2\n1 0\n";
  const DataSource d = make_data(p.string());
  EXPECT_DOUBLE_EQ(d.f(-0.5), 1.0);
  EXPECT_DOUBLE_EQ(d.f(0.25), 1.5);
  EXPECT_EQ(d.f(2.0), 0.0);
  EXPECT_DOUBLE_EQ(d.sup, 2.0);
  std::ofstream(p) << "0 1\n0 2\n";
  EXPECT_ANY_THROW(make_data(p.string()));
}

TEST(Run, SolveShapeAndDeterminism) {
  const RunConfig c = parse_config(kBase, Command::solve);
  std::ostringstream a;
  std::ostringstream b;
  nlohmann::json sa;
  nlohmann::json sb;
  EXPECT_EQ(run_solve(c, a, sa), kOk);
  RunConfig threaded = c;
  threaded.threads = 3;
  EXPECT_EQ(run_solve(threaded, b, sb), kOk);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(parse_csv(a.str()).size(), 15u);
  EXPECT_EQ(sa["failures"], 0);
  EXPECT_EQ(parse_config(sa["config"].get<std::string>(), Command::solve), c);
  EXPECT_EQ(a.str().find('\r'), std::string::npos);
}

TEST(Run, EvalKernelMatchesHeatKernel) {
  const RunConfig c = parse_config(
      "n = 1\nalpha = 1\nbeta = 1\nx_min = -3\nx_max = 3\nx_steps = 13\n"
      "y_min = 0.05\ny_max = 2\ny_steps = 4\ntol = 1e-12\n",
      Command::eval_kernel);
  std::ostringstream out;
  ASSERT_EQ(run_eval_kernel(c, out), kOk);
  const auto rows = parse_csv(out.str());
  ASSERT_EQ(rows.size(), 52u);
  for (const auto& r : rows) {
    const double heat = std::exp(-r[0] * r[0] / (4 * r[1])) / (2 * std::sqrt(kPi * r[1]));
    EXPECT_NEAR(r[2], heat, 1e-8);
  }
}

TEST(Run, SelfsimBothForms) {
  const std::string grid = "x_min = 0.2\nx_max = 1\nx_steps = 3\ny_min = 0.5\ny_max = 1\ny_steps = 2\n";
  std::ostringstream series;
  std::ostringstream wright;
  const RunConfig s = parse_config("alpha1 = 0.7\nalpha2 = 2.6\nd = -1\nterms = 60\n" + grid,
                                   Command::selfsim);
  EXPECT_EQ(run_selfsim(s, series), kOk);
  EXPECT_EQ(parse_csv(series.str()).size(), 6u);
  const RunConfig w =
      parse_config("alpha1 = 0.7\nalpha2 = 2.6\nd = -1\nselfsim_form = wright\n" + grid,
                   Command::selfsim);
  EXPECT_EQ(run_selfsim(w, wright), kOk);
  for (const auto& r : parse_csv(wright.str())) EXPECT_TRUE(std::isfinite(r[2]));
}

TEST(Checks, HeatReductionAndJson) {
  const auto rs = checks::heat_reduction(1e-8);
  ASSERT_EQ(rs.size(), 2u);
  for (const auto& r : rs) {
    EXPECT_TRUE(r.pass) << r.check << " " << r.measured;
    const nlohmann::json j = r.to_json();
    for (const char* key : {"check", "parameters", "measured", "threshold", "pass"}) {
      EXPECT_TRUE(j.contains(key)) << key;
    }
  }
}

TEST(Checks, FixtureParsingRejectsShortRows) {
  EXPECT_ANY_THROW(checks::wright_fixtures("0.5 0.5 1\n"));
}

TEST(Binary, ExitCodes) {
  const fs::path dir = temp_dir();
  EXPECT_EQ(run_cli("--no-such-flag"), kUsage);
  EXPECT_EQ(run_cli("solve"), kUsage);
  const fs::path bad = dir / "bad.conf";
  std::ofstream(bad) << "alpha = 2.0\n";
  EXPECT_EQ(run_cli("solve --config " + bad.string()), kUsage);
  EXPECT_EQ(run_cli("solve --config " + (dir / "missing.conf").string()), kUsage);
  const fs::path good = dir / "good.conf";
  std::ofstream(good) << kBase << "output = " << (dir / "out.csv").string() << "\n";
  EXPECT_EQ(run_cli("solve --config " + good.string()), kOk);
  EXPECT_TRUE(fs::exists(dir / "out.csv"));
  EXPECT_TRUE(fs::exists(dir / "out.csv.json"));
}

TEST(Binary, ShippedConfigsRun) {
  EXPECT_EQ(run_cli("eval-kernel --config " HILFER_CONFIG_DIR "/heat_kernel.conf"), kOk);
  EXPECT_EQ(run_cli("solve --config " HILFER_CONFIG_DIR "/solve_caputo.conf"), kOk);
  EXPECT_EQ(run_cli("selfsim --config " HILFER_CONFIG_DIR "/selfsim_generic.conf"), kOk);
}

TEST(Binary, VerifyDefaultsPassAndEchoRoundTrips) {
  const fs::path dir = temp_dir();
  const fs::path conf = dir / "verify.conf";
  const fs::path report = dir / "report.json";
  std::ofstream(conf) << "report = " << report.string() << "\n";
  ASSERT_EQ(run_cli("verify --config " + conf.string()), kOk);
  std::ifstream in(report);
  const nlohmann::json j = nlohmann::json::parse(in);
  EXPECT_TRUE(j["pass"].get<bool>());
  ASSERT_GT(j["checks"].size(), 10u);
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
  const RunConfig echoed = parse_config(j["config"].get<std::string>(), Command::verify);
  EXPECT_EQ(echoed, parse_config("report = " + report.string() + "\n", Command::verify));
}

}  // namespace
}  // namespace hilfer::cli
