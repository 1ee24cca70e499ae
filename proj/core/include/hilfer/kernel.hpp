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

// Fundamental solution Gamma_b(x, y) of
//   D^{alpha,beta}_y u - (-1)^(n-1) d^{2n}_x u = 0
// as a sum of Wright functions over the roots lambda^{2n} = (-1)^(n-1),
// Re lambda > 0.

#pragma once

#include <array>
#include <vector>

#include "hilfer/fracops.hpp"
#include "hilfer/specfun.hpp"

namespace hilfer {

// lambda_k = exp(i (n-1-2k) pi / (2n)), k = 0..n-1.
std::vector<cplx> roots(int n);

enum class SignConvention {
  calibrated,  // global sign fixed so the kernel integrates to a positive mass
  literal      // the (-lambda_k) prefactors taken as written (sign = +1)
};

struct KernelValue {
  double value;
  double err_bound;
};

class KernelSpec {
 public:
  KernelSpec(const EquationSpec& eq, double b,
             SignConvention convention = SignConvention::calibrated);

  const EquationSpec& eq() const { return eq_; }
  double b() const { return b_; }
  double delta() const { return eq_.delta(); }
  const std::vector<cplx>& roots() const { return roots_; }
  int sign() const { return sign_; }
  const DecayBound& bound() const { return bound_; }

  // Integral of the literal kernel over x at y = 1 for the exponent used in
  // calibration, and the exponent itself; zero when not calibrated.
  double calibration_integral() const { return calibration_integral_; }
  double calibration_exponent() const { return calibration_b_; }

  // phi(-delta, b + 1 - order*delta; .)
  const WrightFunction& wright(int order) const;

 private:
  EquationSpec eq_;
  double b_;
  std::vector<cplx> roots_;
  int sign_ = 1;
  DecayBound bound_;
  double calibration_integral_ = 0.0;
  double calibration_b_ = 0.0;
  std::vector<WrightFunction> wright_;
};

// Sign of the literal n = 1, alpha = 1, b = -1/2 kernel relative to the heat
// kernel e^{-x^2/4y}/(2 sqrt(pi y)).
int heat_anchor_sign();

// Raw complex sum sum_k (-lambda_k) phi(-delta, b+1; -lambda_k t), t = |dx|/dy^delta.
cplx gamma_b_sum(const KernelSpec& ks, double dx, double dy);

KernelValue gamma_b(const KernelSpec& ks, double dx, double dy, double tol = 1e-12);

// d^order/dx^order Gamma_b on the branch selected by the sign of dx.
KernelValue gamma_b_dx(const KernelSpec& ks, int order, double dx, double dy,
                       double tol = 1e-12);

// Closed-form jump of d^s Gamma_b / dx^s across dx = 0:
//   sign * ((-1)^(n-1))^((s+1)/2n) dy^(b - delta s) / Gamma(b + 1 - delta s)
// for s = 2n-1 mod 2n, zero otherwise.
double lemma1_jump(const KernelSpec& ks, int s, double dy);

// Same jump from one-sided derivatives at +-eps, extrapolated to eps -> 0.
KernelValue one_sided_jump(const KernelSpec& ks, int s, double dy);

// Piecewise Chebyshev interpolant of K(t) = Gamma_b(t, 1) on [0, t_max], so
// that Gamma_b(dx, dy) = dy^b K(|dx| / dy^delta). Beyond t_max, K is bounded by
// the decay envelope and treated as zero.
class KernelTable {
 public:
  static constexpr int kDegree = 20;

  explicit KernelTable(const KernelSpec& ks, double rel_tol = 1e-14);

  double operator()(double t) const;
  double value(double dx, double dy) const;

  double b() const { return b_; }
  double delta() const { return delta_; }
  double t_max() const { return t_max_; }
  double max_abs() const { return max_abs_; }
  // absolute interpolation error estimate on K
  double interp_err() const { return interp_err_; }
  // bound on Int_t^inf |K| from the envelope, for t >= t0
  double tail_mass(double t) const;
  std::size_t panels() const { return edges_.size() - 1; }

 private:
  double b_;
  double delta_;
  double t_max_ = 0.0;
  double max_abs_ = 0.0;
  double interp_err_ = 0.0;
  DecayBound bound_;
  std::vector<double> edges_;
  std::vector<std::array<double, kDegree + 1>> coefs_;
};

// R with Int_{|x| > R} |Gamma_b(x, dy)| dx <= tail_tol under the decay envelope.
double truncation_radius(const KernelSpec& ks, double dy, double tail_tol);

}  // namespace hilfer
