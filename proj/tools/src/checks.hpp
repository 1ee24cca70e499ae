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

// Numerical identity checks shared by `hilfer verify` and the acceptance
// runner. Each returns measured values against a fixed threshold.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hilfer/cauchy.hpp"
#include "json.hpp"

namespace hilfer::checks {

struct CheckResult {
  std::string check;
  nlohmann::json parameters = nlohmann::json::object();
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string note;

  nlohmann::json to_json() const;
};

// max over z in [0, z_max] of |phi(-1/2, 1/2; -z) - e^{-z^2/4}/sqrt(pi)|
CheckResult wright_gaussian(int points = 51, double z_max = 5.0, double threshold = 1e-10);

// Relative error against fixture text (see tests/fixtures); one result per family.
CheckResult wright_fixtures(const std::string& text, double threshold = 1e-12);
CheckResult gen_wright_fixtures(const std::string& text, double threshold = 1e-12);
CheckResult mittag_leffler_fixtures(const std::string& text, double threshold = 1e-12);

struct Eq18Sweep {
  std::vector<int> ns = {2, 3};
  std::vector<double> alphas = {0.5, 0.8, 1.5};
  std::vector<double> betas = {0.0, 0.5, 1.0};
  std::vector<double> ys = {0.5, 1.0};
  double threshold = 1e-6;
};

// |lhs - rhs| / max(1, |rhs|) over every admissible (k, b_j), j <= k, plus the
// calibrated sign against the heat anchor.
std::vector<CheckResult> eq18_sweep(const Eq18Sweep& sweep);

// One-sided jumps of d^s Gamma_b across 0 against the closed form.
std::vector<CheckResult> derivative_jumps(const EquationSpec& eq, double b,
                                      const std::vector<int>& orders, double dy,
                                      double rel_threshold = 1e-5,
                                      double off_threshold = 1e-7);

// Traces for constant data: diagonal equals 1, off-diagonal j > k decays like
// y^(j-k).
std::vector<CheckResult> constant_data_traces(const EquationSpec& eq,
                                              const std::vector<double>& y_seq);

struct TraceCheck {
  std::vector<double> probes;
  std::vector<double> y_seq = {1e-1, 1e-2, 1e-3};
  double threshold = 1e-3;  // sup deviation at the last y
};

// Gaussian data for every phi_k: sup deviation at the smallest y below the
// threshold and decreasing along y_seq. With `require_small` false only the
// decrease is checked and the deviation is reported.
std::vector<CheckResult> gaussian_traces(const EquationSpec& eq, const TraceCheck& tc,
                                         bool require_small);

// Normalized residual of Gamma_b(x, y) at the given points (x != 0).
CheckResult kernel_residual(const EquationSpec& eq, double b,
                            const std::vector<std::pair<double, double>>& points,
                            double threshold = 1e-4);

// Normalized residual of the Gaussian-data solution.
CheckResult solve_residual(const EquationSpec& eq,
                           const std::vector<std::pair<double, double>>& points,
                           double threshold = 1e-4);

// n = 1, alpha = 1: kernel and e^{-x^2} solution against the heat closed forms.
std::vector<CheckResult> heat_reduction(double threshold = 1e-8);

}  // namespace hilfer::checks
