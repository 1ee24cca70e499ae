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

// Cauchy problem for D^{alpha,beta}_y u - (-1)^(n-1) d^{2n}_x u = 0 with data
// lim_{y->0} d^k/dy^k I^{(1-beta)(s-alpha)} u = phi_k, solved by
//   u(x,y) = sum_k Int phi_k(xi) Gamma_{b_k}(x - xi, y) dxi.

#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hilfer/fracops.hpp"
#include "hilfer/kernel.hpp"

namespace hilfer {

struct InitialData {
  std::vector<RealFunction> funcs;  // phi_0 .. phi_{s-1}
  double growth_M = 1.0;
  double growth_N = 0.0;
};

// Throws unless the data carries s_count functions and growth_N < sigma.
void validate_data(const EquationSpec& eq, const InitialData& data);

// b_k = -alpha/(2n) - (1-beta)(s-alpha) + k
double kernel_exponent(const EquationSpec& eq, int k);

struct Grid {
  double x_min = -1.0;
  double x_max = 1.0;
  int x_steps = 3;
  double y_min = 0.1;
  double y_max = 1.0;
  int y_steps = 3;

  void validate() const;
  bool operator==(const Grid&) const = default;
  std::vector<double> xs() const;
  std::vector<double> ys() const;
};

struct PointValue {
  double value = 0.0;
  double err = 0.0;
  bool ok = true;
  std::string message;
};

struct SolutionField {
  Grid grid;
  std::vector<double> xs;
  std::vector<double> ys;
  // row-major in y: index = iy * xs.size() + ix
  std::vector<PointValue> points;

  const PointValue& at(std::size_t ix, std::size_t iy) const {
    return points[iy * xs.size() + ix];
  }
  std::size_t failures() const;
};

// Evaluator of the convolution formula. Immutable after construction.
class CauchySolver {
 public:
  CauchySolver(const EquationSpec& eq, InitialData data, double tol = 1e-10);

  PointValue operator()(double x, double y) const;

  const EquationSpec& eq() const { return eq_; }
  const InitialData& data() const { return data_; }
  const KernelSpec& kernel(int k) const { return *kernels_[k]; }
  const KernelTable& table(int k) const { return *tables_[k]; }
  double tol() const { return tol_; }

  // Half-width of the xi window around x such that the discarded data-weighted
  // kernel mass is <= tail_tol.
  double window(int k, double x, double y, double tail_tol) const;

 private:
  EquationSpec eq_;
  InitialData data_;
  double tol_;
  std::vector<std::shared_ptr<const KernelSpec>> kernels_;
  std::vector<std::shared_ptr<const KernelTable>> tables_;

  // half-width in similarity units t = |x - xi| / y^delta; NaN if the growth
  // certificate cannot be honoured at this y
  double window_t(int k, double x, double y, double tail_tol) const;
};

// Evaluates every grid point; `threads` > 1 fans out over rows.
SolutionField solve(const EquationSpec& eq, const InitialData& data, const Grid& grid,
                    double tol, int threads = 1);
SolutionField solve(const CauchySolver& solver, const Grid& grid, int threads = 1);

struct Eq18Result {
  double lhs = 0.0;
  double rhs = 0.0;
  double lhs_err = 0.0;
};

// lhs: d^k/dy^k I^{(1-beta)(s-alpha)} Int Gamma_b(x - xi, y) dxi by quadrature;
// rhs: y^{delta+b+(1-beta)(s-alpha)-k} / Gamma(delta+b+(1-beta)(s-alpha)-k+1).
Eq18Result eq18_identity(const EquationSpec& eq, double b, int k, double y);

// Regularized trace d^k/dy^k I^{(1-beta)(s-alpha)} u(x, .) at y.
double regularized_trace(const CauchySolver& solver, int k, double x, double y);

struct TraceReport {
  int k = 0;
  std::vector<double> ys;
  std::vector<double> sup_dev;        // sup over probes |T_k(x,y) - phi_k(x)|
  std::vector<double> orders;         // log ratio of successive deviations
  double extrapolated_sup_dev = 0.0;  // after Richardson on the y sequence
};

std::vector<TraceReport> verify_initial_trace(const CauchySolver& solver,
                                              const std::vector<double>& x_probes,
                                              const std::vector<double>& y_seq);

}  // namespace hilfer
