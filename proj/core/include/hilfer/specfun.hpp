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

// Special functions with error-bounded summation: reciprocal gamma, the
// Wright function phi(-delta, eps; z), the generalized Wright function,
// Mittag-Leffler and the super-exponential decay envelope of phi.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hilfer {

using cplx = std::complex<double>;

enum class SeriesStatus { converged, bound_returned };

struct SeriesValue {
  cplx value{0.0, 0.0};
  double err_bound = 0.0;  // absolute
  std::size_t terms_used = 0;
  SeriesStatus status = SeriesStatus::converged;

  bool converged() const { return status == SeriesStatus::converged; }
};

// 1/Gamma(x); exactly zero at the poles 0, -1, -2, ...
double recip_gamma(double x);

struct SignedLogGamma {
  double log_abs;  // +inf at poles
  int sign;        // 0 at poles
};
SignedLogGamma log_gamma(double x);

// True when x is (within rounding) a non-positive integer.
bool is_gamma_pole(double x);

struct WrightParams {
  double delta;
  double eps;
};

struct GenWrightParams {
  double mu;
  double a;
  double nu;
  double b;
};

class DecayBound;

// Plain series summation with tail certificate and cancellation guard.
// Converged means err_bound <= tol * max(1, |value|).
SeriesValue wright_phi(const WrightParams& p, cplx z, double tol);
// Same; when the guard trips and the envelope applies at |z| it replaces the
// certified magnitude bound.
SeriesValue wright_phi(const WrightParams& p, cplx z, double tol,
                       const DecayBound& envelope);

SeriesValue gen_wright(const GenWrightParams& p, cplx z, double tol);

// Series for |z| <= ml_safe_radius. For alpha < 1, arguments where the series
// cannot meet tol go through the Laplace integral of the Mainardi function
// phi(-alpha, 1 - alpha; -r), which has no cancellation for real z < 0.
inline constexpr double ml_safe_radius = 30.0;
SeriesValue mittag_leffler(double alpha, cplx z, double tol);

// Saddle-point Hankel contour integral for phi(-delta, eps; z). Accurate to a
// few ulps relative to the largest integrand contribution when
// |arg(-z)| < (1 - delta) * pi / 2.
SeriesValue wright_phi_contour(const WrightParams& p, cplx z);

// True when the contour representation can be used for z.
bool wright_contour_applicable(double delta, cplx z);

// Hybrid evaluator with cached coefficients; picks series or contour by the
// expected cancellation of the series at z.
class WrightFunction {
 public:
  WrightFunction(double delta, double eps);

  SeriesValue operator()(cplx z) const;
  SeriesValue series(cplx z, double tol) const;

  double delta() const { return delta_; }
  double eps() const { return eps_; }

  // log of sum_k |z|^k |a_k|, the expected cancellation scale at z.
  double log_cancellation(cplx z) const;

 private:
  double delta_;
  double eps_;
  std::vector<double> coef_;      // 1/(k! Gamma(eps - delta k)), may underflow
  std::vector<double> log_coef_;  // log|coef|, -inf at poles
  std::vector<int> sign_coef_;
  std::vector<double> log_env_;   // log of bound on |1/(k! Gamma(.))|
};

// Closed-form decay constant sigma(n, alpha).
double decay_sigma(int n, double alpha);

// C t^p exp(-sigma t^q) with p = -2n(b+1/2)/(2n-alpha), q = 2n/(2n-alpha).
class DecayBound {
 public:
  DecayBound() = default;
  // Calibrates C at t0 = (ln 1e12 / sigma)^(1/q) / 2 and inflates by 2.
  DecayBound(int n, double alpha, double b);

  double operator()(double t) const;
  double log_value(double t) const;

  int n() const { return n_; }
  double alpha() const { return alpha_; }
  double sigma() const { return sigma_; }
  double C() const { return C_; }
  double exponent_b() const { return b_; }
  double power() const { return p_; }
  double rate_power() const { return q_; }
  double t0() const { return t0_; }

 private:
  double log_value_unit(double t) const;

  int n_ = 0;
  double alpha_ = 0.0;
  double b_ = 0.0;
  double sigma_ = 0.0;
  double C_ = 0.0;
  double p_ = 0.0;
  double q_ = 1.0;
  double t0_ = 0.0;
};

double decay_bound(int n, double alpha, double b, double t);

}  // namespace hilfer
