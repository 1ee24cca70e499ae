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

// Line-oriented `key = value` run configuration.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "hilfer/cauchy.hpp"

namespace hilfer::cli {

enum class Command { eval_kernel, solve, selfsim, verify };

const char* command_name(Command c);

struct RunConfig {
  Command command = Command::verify;

  // Cauchy problem
  int n = 2;
  double alpha = 0.8;
  double beta = 1.0;

  // degenerate equation
  double m = 0.0;
  double k = 0.0;
  double alpha1 = 0.5;
  double beta1 = 1.0;
  double alpha2 = 2.5;
  double beta2 = 1.0;
  int d = 1;
  int branch = 1;
  int terms = 40;
  double c0 = 1.0;
  std::string selfsim_form = "series";  // series | wright

  // kernel exponent: explicit b, else kernel_exponent(eq, kernel_index)
  std::optional<double> b;
  int kernel_index = 0;

  Grid grid;
  double tol = 1e-10;
  std::string data0 = "gaussian";
  std::string data1 = "zero";
  std::optional<double> growth_M;
  std::optional<double> growth_N;
  int threads = 1;
  std::string output;
  std::string report;

  bool operator==(const RunConfig&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses and validates. Messages carry the line number for syntax errors.
RunConfig parse_config(const std::string& text, Command command);

// Re-parsable echo of every field.
std::string to_config_text(const RunConfig& cfg);

// Checks that depend on the command (grid sign for selfsim, certificate).
void validate(const RunConfig& cfg);

EquationSpec equation(const RunConfig& cfg);
GeneralEquationSpec general_equation(const RunConfig& cfg);

}  // namespace hilfer::cli
