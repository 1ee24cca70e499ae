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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "checks.hpp"
#include "data.hpp"
#include "hilfer/selfsim.hpp"

namespace hilfer::cli {

namespace {

void csv_header(std::ostream& os) { os << "x,y,value,err\n"; }

void csv_row(std::ostream& os, double x, double y, double v, double e) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", x, y, v, e);
  os << buf;
}

}  // namespace

int run_eval_kernel(const RunConfig& cfg, std::ostream& csv) {
  const EquationSpec eq = equation(cfg);
  const double b = cfg.b.value_or(kernel_exponent(eq, cfg.kernel_index));
  const KernelSpec ks(eq, b);
  csv_header(csv);
  int status = kOk;
  for (double y : cfg.grid.ys()) {
    for (double x : cfg.grid.xs()) {
      const KernelValue v = gamma_b(ks, x, y, cfg.tol);
      if (!std::isfinite(v.value)) status = kNumeric;
      csv_row(csv, x, y, v.value, v.err_bound);
    }
  }
  return status;
}

int run_solve(const RunConfig& cfg, std::ostream& csv, nlohmann::json& summary) {
  const EquationSpec eq = equation(cfg);
  const InitialData data = make_initial_data(cfg, eq);
  const SolutionField field = solve(eq, data, cfg.grid, cfg.tol, cfg.threads);
  csv_header(csv);
  double max_err = 0.0;
  nlohmann::json failed = nlohmann::json::array();
  for (std::size_t iy = 0; iy < field.ys.size(); ++iy) {
    for (std::size_t ix = 0; ix < field.xs.size(); ++ix) {
      const PointValue& p = field.at(ix, iy);
      csv_row(csv, field.xs[ix], field.ys[iy], p.value, p.err);
      if (p.ok) {
        max_err = std::max(max_err, p.err);
      } else if (failed.size() < 20) {
        failed.push_back({{"x", field.xs[ix]}, {"y", field.ys[iy]}, {"message", p.message}});
      }
    }
  }
  summary = {{"config", to_config_text(cfg)},
             {"points", field.points.size()},
             {"failures", field.failures()},
             {"max_err", max_err},
             {"tol", cfg.tol},
             {"failed_points", failed}};
  return field.failures() == 0 ? kOk : kNumeric;
}

int run_selfsim(const RunConfig& cfg, std::ostream& csv) {
  const GeneralEquationSpec g = general_equation(cfg);
  const double b = cfg.b.value_or(0.0);
  const SimilarityExponents e = similarity_exponents(g, b);
  csv_header(csv);
  int status = kOk;
  if (cfg.selfsim_form == "wright") {
    for (double y : cfg.grid.ys()) {
      for (double x : cfg.grid.xs()) {
        const SelfSimValue v = eval_case1(g, cfg.branch, b, x, y);
        if (!std::isfinite(v.value)) status = kNumeric;
        csv_row(csv, x, y, v.value, v.err);
      }
    }
    return status;
  }
  const CoefficientTable table = coefficients(g, e, cfg.branch, cfg.terms, cfg.c0);
  for (double y : cfg.grid.ys()) {
    for (double x : cfg.grid.xs()) {
      try {
        const SelfSimValue v = eval_selfsimilar(g, e, table, x, y);
        csv_row(csv, x, y, v.value, v.err);
      } catch (const std::domain_error&) {
        // beyond the validated radius of the truncated series
        csv_row(csv, x, y, std::nan(""), std::nan(""));
        status = kNumeric;
      }
    }
  }
  return status;
}

int run_verify(const RunConfig& cfg, nlohmann::json& report) {
  using namespace checks;
  const EquationSpec eq = equation(cfg);
  std::vector<CheckResult> all;
  auto add = [&](std::vector<CheckResult> v) {
    for (auto& r : v) all.push_back(std::move(r));
  };
  all.push_back(wright_gaussian());
  all.push_back(wright_fixtures(kWrightFixtures));
  all.push_back(gen_wright_fixtures(kGenWrightFixtures));
  all.push_back(mittag_leffler_fixtures(kMittagLefflerFixtures));
  add(eq18_sweep(Eq18Sweep{}));

  const EquationSpec eq2 = EquationSpec::make(2, eq.alpha, eq.beta);
  add(derivative_jumps(eq2, kernel_exponent(eq2, 0), {0, 1, 2, 3}, 1.0));

  add(constant_data_traces(eq, {1e-1, 1e-2, 1e-3}));
  TraceCheck tc;
  tc.probes = {-2.0, -1.0, 0.0, 0.5, 1.5, 2.0};
  add(gaussian_traces(eq, tc, false));

  const double b = cfg.b.value_or(kernel_exponent(eq, cfg.kernel_index));
  all.push_back(kernel_residual(eq, b, {{0.4, 0.6}, {-1.1, 1.3}}));
  all.push_back(solve_residual(eq, {{0.3, 0.5}}));
  add(heat_reduction());

  nlohmann::json list = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : all) {
    list.push_back(r.to_json());
    ok = ok && r.pass;
  }
  report = {{"config", to_config_text(cfg)}, {"checks", list}, {"pass", ok}};
  return ok ? kOk : kVerifyFailed;
}

}  // namespace hilfer::cli
