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

// Numerical fractional operators: Riemann-Liouville integral by product
// integration, Hilfer derivative, spatial finite differences and the residual
// of D^{alpha,beta}_y u - (-1)^(n-1) d^{2n}_x u.

#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace hilfer {

using RealFunction = std::function<double(double)>;
using FieldFunction = std::function<double(double, double)>;

// s with s - 1 < alpha <= s.
int s_count_for(double alpha);

struct EquationSpec {
  int n = 2;
  double alpha = 0.5;
  double beta = 1.0;
  int s_count = 1;

  // Validates and fills s_count.
  static EquationSpec make(int n, double alpha, double beta);
  void validate() const;

  double delta() const { return alpha / (2.0 * n); }
  // (1 - beta)(s - alpha), order of the inner integral
  double inner_order() const { return (1.0 - beta) * (s_count - alpha); }
  double outer_order() const { return beta * (s_count - alpha); }
};

struct GeneralEquationSpec {
  double m = 0.0;
  double k = 0.0;
  double alpha1 = 0.5;
  double beta1 = 1.0;
  double alpha2 = 2.0;
  double beta2 = 1.0;
  int d = 1;
  int q = 1;
  int p = 2;

  // Validates; q and p are derived from alpha1 and alpha2.
  static GeneralEquationSpec make(double m, double k, double alpha1, double beta1,
                                  double alpha2, double beta2, int d);
  void validate() const;
};

struct HilferOrder {
  double alpha;
  double beta;
  int s;
};

// (1/Gamma(mu)) Int_0^y (y-z)^(mu-1) f(z) dz. f may behave like z^nu near 0
// with nu > -1 declared by the caller.
double rl_integral(const RealFunction& f, double mu, double y, double nu = 0.0);

// Weights and nodes of the rule used by rl_integral at (mu, y, nu).
struct ProductRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
ProductRule rl_rule(double mu, double y, double nu = 0.0);

// Relative finite-difference step for the s-th derivative at y.
double hilfer_fd_step(double y, int s);

// d^k/dy^k I^mu f at y (mu = 0 skips the integral, k = 0 the derivative).
// rel_step = 0 selects hilfer_fd_step.
double rl_derivative(const RealFunction& f, int k, double mu, double y, double nu = 0.0,
                     double rel_step = 0.0);

// Declared behaviour near y = 0: f ~ y^inner, and d^s I^{(1-beta)(s-alpha)} f
// ~ y^outer. A NaN outer is derived as inner + (1-beta)(s-alpha) - s.
struct HilferExponents {
  double inner = 0.0;
  double outer = std::numeric_limits<double>::quiet_NaN();
};

// I^{beta(s-alpha)} d^s/dy^s I^{(1-beta)(s-alpha)} f at y.
double hilfer_derivative(const RealFunction& f, const HilferOrder& order, double y,
                         const HilferExponents& ex = {});
double hilfer_derivative(const RealFunction& f, const EquationSpec& eq, double y,
                         const HilferExponents& ex = {});

// Gamma(c+1)/Gamma(c+1-alpha): D^alpha y^c = power_rule(c, alpha) y^(c-alpha).
// Zero when c+1-alpha is a pole.
double power_rule(double c, double alpha);

struct FdValue {
  double value;
  double err;
};

// Central difference of the given order (<= 8) with step h and `levels`
// Richardson refinements; err is the last refinement change.
FdValue x_derivative(const RealFunction& u, int order, double x, double h,
                     int levels = 1);

struct ResidualOptions {
  HilferExponents exponents;
  double h_x = 0.0;   // 0 selects a step from the similarity scale y^delta
  int levels = 2;
};

// Step used when h_x = 0; the stencil spans n of these on each side.
double default_x_step(const EquationSpec& eq, double y);

// (D_y u - (-1)^(n-1) d^{2n}_x u) / max(1, |D_y u|)
double pde_residual(const FieldFunction& u, const EquationSpec& eq, double x,
                    double y, const ResidualOptions& opts = {});

}  // namespace hilfer
