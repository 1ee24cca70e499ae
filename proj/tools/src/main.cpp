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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace hilfer::cli;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Writes to `path`, or stdout when empty.
template <class F>
int with_output(const std::string& path, F&& body) {
  if (path.empty()) return body(std::cout);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output '" + path + "'");
  const int rc = body(out);
  out.close();
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
  return rc;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) {
    std::cerr << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

int dispatch(Command cmd, const std::string& config_path) {
  RunConfig cfg;
  cfg.command = cmd;
  if (!config_path.empty()) {
    cfg = parse_config(read_file(config_path), cmd);
  } else {
    validate(cfg);
  }
  switch (cmd) {
    case Command::eval_kernel:
      return with_output(cfg.output, [&](std::ostream& os) { return run_eval_kernel(cfg, os); });
    case Command::solve: {
      nlohmann::json summary;
      const int rc =
          with_output(cfg.output, [&](std::ostream& os) { return run_solve(cfg, os, summary); });
      std::string path = cfg.report;
      if (path.empty() && !cfg.output.empty()) path = cfg.output + ".json";
      write_json(path, summary);
      return rc;
    }
    case Command::selfsim:
      return with_output(cfg.output, [&](std::ostream& os) { return run_selfsim(cfg, os); });
    case Command::verify: {
      nlohmann::json report;
      const int rc = run_verify(cfg, report);
      if (cfg.report.empty()) {
        std::cout << report.dump(2) << "\n";
      } else {
        write_json(cfg.report, report);
      }
      return rc;
    }
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilfer time-fractional Cauchy problem solver"};
  app.require_subcommand(1);
  std::string eval_cfg, solve_cfg, selfsim_cfg, verify_cfg;
  auto* ek = app.add_subcommand("eval-kernel", "tabulate the fundamental kernel on a grid");
  ek->add_option("--config", eval_cfg, "config file")->required();
  auto* sv = app.add_subcommand("solve", "solve the Cauchy problem on a grid");
  sv->add_option("--config", solve_cfg, "config file")->required();
  auto* ss = app.add_subcommand("selfsim", "evaluate self-similar solutions on a grid");
  ss->add_option("--config", selfsim_cfg, "config file")->required();
  auto* vf = app.add_subcommand("verify", "run the identity suite");
  vf->add_option("--config", verify_cfg, "config file (built-in defaults otherwise)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*ek) return dispatch(Command::eval_kernel, eval_cfg);
    if (*sv) return dispatch(Command::solve, solve_cfg);
    if (*ss) return dispatch(Command::selfsim, selfsim_cfg);
    return dispatch(Command::verify, verify_cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  }
}
