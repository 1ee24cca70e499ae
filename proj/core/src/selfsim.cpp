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

#include "hilfer/selfsim.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "numeric.hpp"

namespace hilfer {

using detail::kInf;

namespace {

struct Factor {
  long double log_abs = 0.0L;
  int sign = 1;  // 0 when a denominator pole makes the factor vanish
};

// log|Gamma(x)| in extended precision; sign 0 at poles.
long double lgamma_ext(long double x, int& sign) {
  if (x <= 0.0L && x == std::floor(x)) {
    sign = 0;
    return 0.0L;
  }
  int s = 1;
  const long double v = boost::math::lgamma(x, &s, boost::math::policies::policy<>());
  sign = s;
  return v;
}

struct StepArgs {
  long double A;
  long double B;
};

// Gamma arguments of step l, built from the equation parameters in extended
// precision so that the recurrence and the product see identical values.
StepArgs step_args(const GeneralEquationSpec& g, long double b, int j, int l) {
  const long double a1 = g.alpha1;
  const long double a2 = g.alpha2;
  const long double gam = (a2 - j) / (a2 + g.m);
  return {-(a1 + g.k) * (l - 1 + gam) + b + 1.0L, (g.m + a2) * l - j + 1.0L};
}

// d Gamma(A) Gamma(B) / (Gamma(A - alpha1) Gamma(B + alpha2)) for step l.
Factor recurrence_factor(const GeneralEquationSpec& g, const SimilarityExponents& e,
                         int j, int l) {
  const auto [A, B] = step_args(g, e.b, j, l);
  int s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  const long double n1 = lgamma_ext(A, s1);
  const long double n2 = lgamma_ext(B, s2);
  if (s1 == 0 || s2 == 0) {
    throw std::domain_error("coefficient undefined: numerator gamma pole at l = " +
                            std::to_string(l));
  }
  const long double d1 = lgamma_ext(A - g.alpha1, s3);
  const long double d2 = lgamma_ext(B + g.alpha2, s4);
  Factor f;
  if (s3 == 0 || s4 == 0) {
    f.sign = 0;
    return f;
  }
  f.log_abs = n1 + n2 - d1 - d2;
  f.sign = g.d * s1 * s2 * s3 * s4;
  return f;
}

void check_branch(const GeneralEquationSpec& g, int j) {
  if (j < 1 || j > g.p) {
    throw std::invalid_argument("branch index j must lie in [1, " + std::to_string(g.p) + "]");
  }
}

}  // namespace

SimilarityExponents similarity_exponents(const GeneralEquationSpec& g, double b) {
  g.validate();
  SimilarityExponents e;
  e.a = g.m + g.alpha2;
  e.y_exp = -g.alpha1 - g.k;
  e.b = b;
  for (int j = 1; j <= g.p; ++j) e.gamma.push_back((g.alpha2 - j) / e.a);
  return e;
}

double CoefficientTable::validated_radius() const {
  const std::size_t N = c.size() - 1;
  if (N == 0) return kInf;
  double best = kInf;
  for (std::size_t n = std::max<std::size_t>(1, (N + 1) / 2); n <= N; ++n) {
    if (sign[n] == 0 || sign[n - 1] == 0) continue;
    best = std::min(best, std::exp(log_abs[n - 1] - log_abs[n]));
  }
  return 0.5 * best;
}

CoefficientTable coefficients(const GeneralEquationSpec& g, const SimilarityExponents& e,
                              int j, int N, double c0) {
  check_branch(g, j);
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  CoefficientTable t;
  t.j = j;
  t.c0 = c0;
  t.c.assign(N + 1, 0.0);
  t.log_abs.assign(N + 1, -kInf);
  t.sign.assign(N + 1, 0);
  if (c0 != 0.0) {
    t.log_abs[0] = std::log(std::abs(c0));
    t.sign[0] = c0 > 0.0 ? 1 : -1;
  }
  t.c[0] = c0;
  for (int n = 1; n <= N; ++n) {
    const Factor f = recurrence_factor(g, e, j, n);
    t.sign[n] = t.sign[n - 1] * f.sign;
    if (t.sign[n] == 0) continue;
    // multiply while c_n stays a normal double, else continue in log space
    const long double prod = t.c[n - 1] * f.sign * std::exp(f.log_abs);
    if (std::isnormal(static_cast<double>(prod)) && std::isnormal(t.c[n - 1])) {
      t.c[n] = static_cast<double>(prod);
      t.log_abs[n] = static_cast<double>(std::log(std::abs(prod)));
    } else {
      t.log_abs[n] = static_cast<double>(t.log_abs[n - 1] + f.log_abs);
      t.c[n] = t.sign[n] * std::exp(t.log_abs[n]);
    }
  }
  return t;
}

double coefficient_product(const GeneralEquationSpec& g, const SimilarityExponents& e,
                           int j, int n, double c0) {
  check_branch(g, j);
  long double log_sum = 0.0L;
  int sign = c0 > 0.0 ? 1 : (c0 < 0.0 ? -1 : 0);
  for (int l = 1; l <= n; ++l) {
    const auto [A, B] = step_args(g, e.b, j, l);
    int s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    const long double n1 = lgamma_ext(A, s1);
    const long double n2 = lgamma_ext(B, s2);
    if (s1 == 0 || s2 == 0) {
      throw std::domain_error("coefficient undefined: numerator gamma pole at l = " +
                              std::to_string(l));
    }
    const long double d1 = lgamma_ext(A - g.alpha1, s3);
    const long double d2 = lgamma_ext(B + g.alpha2, s4);
    sign *= g.d * s1 * s2 * s3 * s4;
    if (sign == 0) return 0.0;
    log_sum += n1 + n2 - d1 - d2;
  }
  if (sign == 0) return 0.0;
  return static_cast<double>(sign * std::abs(static_cast<long double>(c0)) * std::exp(log_sum));
}

double similarity_variable(const SimilarityExponents& e, double x, double y) {
  if (!(x > 0.0 && y > 0.0)) throw std::invalid_argument("self-similar evaluation needs x, y > 0");
  return std::exp(e.a * std::log(x) + e.y_exp * std::log(y));
}

SelfSimValue eval_selfsimilar(const GeneralEquationSpec& g, const SimilarityExponents& e,
                              const CoefficientTable& table, double x, double y) {
  check_branch(g, table.j);
  const double t = similarity_variable(e, x, y);
  const double radius = table.validated_radius();
  if (t > radius) {
    throw std::domain_error("t = " + std::to_string(t) + " exceeds the validated radius " +
                            std::to_string(radius));
  }
  const double lt = std::log(t);
  detail::CompensatedSum acc;
  double abs_sum = 0.0;
  double last = 0.0;
  const double terms = static_cast<double>(table.c.size());
  for (std::size_t n = 0; n < table.c.size(); ++n) {
    if (table.sign[n] == 0) continue;
    const double term = table.sign[n] * std::exp(table.log_abs[n] + n * lt);
    acc.add(term);
    abs_sum += std::abs(term);
    last = std::abs(term);
  }
  const double pre = std::exp(e.b * std::log(y) + e.gamma[table.j - 1] * lt);
  SelfSimValue v;
  v.value = pre * acc.value();
  v.err = pre * (last + (terms + 4.0) * detail::kEpsMach * abs_sum);
  return v;
}

double case1_c0(const GeneralEquationSpec& g, int j, double b) {
  check_branch(g, j);
  return recip_gamma(-g.alpha1 * (1.0 - j / g.alpha2) + b + 1.0) *
         recip_gamma(g.alpha2 - j + 1.0);
}

SelfSimValue eval_case1(const GeneralEquationSpec& g, int j, double b, double x, double y) {
  check_branch(g, j);
  if (g.m != 0.0 || g.k != 0.0) throw std::invalid_argument("eval_case1 requires m = k = 0");
  const SimilarityExponents e = similarity_exponents(g, b);
  const double t = similarity_variable(e, x, y);
  const GenWrightParams p{-g.alpha1, -g.alpha1 + g.alpha1 * j / g.alpha2 + b + 1.0, g.alpha2,
                          g.alpha2 - j + 1.0};
  const SeriesValue w = gen_wright(p, cplx(g.d * t, 0.0), 1e-13);
  const double pre = std::pow(y, b) * std::pow(t, e.gamma[j - 1]);
  SelfSimValue v;
  v.value = pre * w.value.real();
  v.err = pre * w.err_bound;
  if (!w.converged()) v.err = kInf;
  return v;
}

double selfsim_residual(const GeneralEquationSpec& g, const SimilarityExponents& e,
                        const CoefficientTable& table, double x, double y) {
  check_branch(g, table.j);
  const double gam = e.gamma[table.j - 1];
  const double lx = std::log(x);
  const double ly = std::log(y);
  detail::CompensatedSum lhs;
  detail::CompensatedSum rhs;
  for (std::size_t n = 0; n < table.c.size(); ++n) {
    if (table.sign[n] == 0) continue;
    const double ex = e.a * (n + gam);
    const double ey = e.y_exp * (n + gam) + e.b;
    const double py = power_rule(ey, g.alpha1);
    const double px = power_rule(ex, g.alpha2);
    // x^m D_y and d y^k D_x applied to c_n x^ex y^ey
    if (py != 0.0) {
      lhs.add(table.sign[n] * py *
              std::exp(table.log_abs[n] + (ex + g.m) * lx + (ey - g.alpha1) * ly));
    }
    if (px != 0.0) {
      rhs.add(g.d * table.sign[n] * px *
              std::exp(table.log_abs[n] + (ex - g.alpha2) * lx + (ey + g.k) * ly));
    }
  }
  return (lhs.value() - rhs.value()) / std::max(1.0, std::abs(lhs.value()));
}

namespace {

double checked_delta(int p, double alpha, cplx c_root, int d) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (!(alpha > 0.0 && alpha < p)) throw std::invalid_argument("alpha must lie in (0, p)");
  if (std::abs(std::pow(c_root, p) - static_cast<double>(d)) > 1e-12) {
    throw std::invalid_argument("c_root^p must equal d");
  }
  return alpha / p;
}

}  // namespace

WrightCase::WrightCase(int p, double alpha, double b, cplx c_root, int d)
    : b_(b), delta_(checked_delta(p, alpha, c_root, d)), c_(c_root), phi_(delta_, b + 1.0) {}

cplx WrightCase::operator()(double x, double y) const {
  if (!(y > 0.0)) throw std::invalid_argument("Wright case evaluation needs y > 0");
  return std::pow(y, b_) * phi_(c_ * x * std::pow(y, -delta_)).value;
}

cplx eval_wright_case(int p, double alpha, double b, cplx c_root, int d, double x, double y) {
  return WrightCase(p, alpha, b, c_root, d)(x, y);
}

}  // namespace hilfer
