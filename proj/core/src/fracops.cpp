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

#include "hilfer/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "hilfer/specfun.hpp"
#include "numeric.hpp"
#include "quadrature.hpp"

namespace hilfer {

using detail::kEpsMach;

int s_count_for(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  return std::max(1, static_cast<int>(std::ceil(alpha)));
}

EquationSpec EquationSpec::make(int n, double alpha, double beta) {
  EquationSpec eq;
  eq.n = n;
  eq.alpha = alpha;
  eq.beta = beta;
  if (alpha > 0.0 && alpha < 2.0) eq.s_count = s_count_for(alpha);
  eq.validate();
  return eq;
}

void EquationSpec::validate() const {
  if (n < 1) throw std::invalid_argument("n must be an integer >= 1");
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw std::invalid_argument("alpha must lie in (0,2)");
  }
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("beta must lie in [0,1]");
  }
  if (s_count != s_count_for(alpha)) {
    throw std::invalid_argument("s_count must satisfy s - 1 < alpha <= s");
  }
}

GeneralEquationSpec GeneralEquationSpec::make(double m, double k, double alpha1,
                                              double beta1, double alpha2,
                                              double beta2, int d) {
  GeneralEquationSpec g;
  g.m = m;
  g.k = k;
  g.alpha1 = alpha1;
  g.beta1 = beta1;
  g.alpha2 = alpha2;
  g.beta2 = beta2;
  g.d = d;
  if (alpha1 > 0.0) g.q = s_count_for(alpha1);
  if (alpha2 > 0.0) g.p = s_count_for(alpha2);
  g.validate();
  return g;
}

void GeneralEquationSpec::validate() const {
  if (!(alpha1 > 0.0) || !(alpha2 > 0.0)) {
    throw std::invalid_argument("alpha1 and alpha2 must be positive");
  }
  if (!(m > -alpha2)) throw std::invalid_argument("requires m > -alpha2");
  if (!(k > -alpha1)) throw std::invalid_argument("requires k > -alpha1");
  if (!(q - 1 < alpha1 && alpha1 <= q)) {
    throw std::invalid_argument("requires q - 1 < alpha1 <= q");
  }
  if (!(p - 1 < alpha2 && alpha2 <= p)) {
    throw std::invalid_argument("requires p - 1 < alpha2 <= p");
  }
  if (!(q < p)) throw std::invalid_argument("requires q < p");
  if (!(beta1 >= 0.0 && beta1 <= 1.0) || !(beta2 >= 0.0 && beta2 <= 1.0)) {
    throw std::invalid_argument("beta1 and beta2 must lie in [0,1]");
  }
  if (d != 1 && d != -1) throw std::invalid_argument("d must be +1 or -1");
}

namespace {

constexpr int kPanelNodes = 12;
constexpr int kEndNodes = 16;
constexpr int kRightLevels = 3;

struct NormalizedRule {
  std::vector<double> zeta;
  std::vector<double> omega;
};

int left_levels(double nu) {
  const double want = 14.0 * std::log(10.0) / ((nu + 1.5) * std::log(4.0));
  return std::clamp(static_cast<int>(std::ceil(want)), 8, 24);
}

// Rule on [0,1] for (1/Gamma(mu)) Int (1-z)^(mu-1) f(z) dz, f ~ z^nu at 0.
NormalizedRule build_rule(double mu, double nu) {
  NormalizedRule r;
  const double rg = recip_gamma(mu);
  auto push = [&](double z, double w) {
    r.zeta.push_back(z);
    r.omega.push_back(w * rg);
  };
  const int L = left_levels(nu);
  // left end: Jacobi weight z^nu on [0, c]
  {
    const double c = 0.5 * std::pow(4.0, -L);
    const detail::GaussRule& gj = detail::gauss_jacobi(kEndNodes, 0.0, nu);
    const double scale = std::pow(0.5 * c, nu + 1.0);
    for (int i = 0; i < kEndNodes; ++i) {
      const double z = 0.5 * c * (1.0 + gj.x[i]);
      push(z, gj.w[i] * scale * std::pow(1.0 - z, mu - 1.0) / std::pow(z, nu));
    }
  }
  const detail::GaussRule& gl = detail::gauss_legendre(kPanelNodes);
  auto panel = [&](double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    for (int i = 0; i < kPanelNodes; ++i) {
      const double t = half * (1.0 + gl.x[i]);
      const double z = lo + t;
      const double one_minus = (1.0 - lo) - t;
      push(z, gl.w[i] * half * std::pow(one_minus, mu - 1.0));
    }
  };
  for (int i = L; i >= 1; --i) {
    panel(0.5 * std::pow(4.0, -i), 0.5 * std::pow(4.0, -(i - 1)));
  }
  for (int i = 1; i <= kRightLevels; ++i) {
    panel(1.0 - 0.5 * std::pow(4.0, -(i - 1)), 1.0 - 0.5 * std::pow(4.0, -i));
  }
  // right end: Jacobi weight (1-z)^(mu-1) on [1-c, 1]
  {
    const double c = 0.5 * std::pow(4.0, -kRightLevels);
    const detail::GaussRule& gj = detail::gauss_jacobi(kEndNodes, mu - 1.0, 0.0);
    const double scale = std::pow(0.5 * c, mu);
    for (int i = 0; i < kEndNodes; ++i) {
      push(1.0 - 0.5 * c * (1.0 - gj.x[i]), gj.w[i] * scale);
    }
  }
  return r;
}

const NormalizedRule& cached_rule(double mu, double nu) {
  static std::mutex mtx;
  static std::map<std::pair<double, double>, NormalizedRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  const auto key = std::make_pair(mu, nu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_rule(mu, nu)).first;
  return it->second;
}

void check_rl_args(double mu, double y, double nu) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument("fractional integral order must be positive");
  }
  if (!(y > 0.0)) throw std::invalid_argument("fractional integral needs y > 0");
  if (!(nu > -1.0)) {
    throw std::invalid_argument("declared exponent must exceed -1 (got " +
                                std::to_string(nu) + ")");
  }
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Central difference of order m with step h (half-integer offsets for odd m).
double central_difference(const RealFunction& f, int m, double x, double h) {
  detail::CompensatedSum acc;
  for (int j = 0; j <= m; ++j) {
    const double off = (0.5 * m - j) * h;
    const double c = binomial(m, j) * ((j % 2) ? -1.0 : 1.0);
    acc.add(c * f(x + off));
  }
  return acc.value() / std::pow(h, m);
}

}  // namespace

ProductRule rl_rule(double mu, double y, double nu) {
  check_rl_args(mu, y, nu);
  const NormalizedRule& nr = cached_rule(mu, nu);
  ProductRule out;
  out.nodes.resize(nr.zeta.size());
  out.weights.resize(nr.zeta.size());
  const double ymu = std::pow(y, mu);
  for (std::size_t i = 0; i < nr.zeta.size(); ++i) {
    out.nodes[i] = y * nr.zeta[i];
    out.weights[i] = ymu * nr.omega[i];
  }
  return out;
}

double rl_integral(const RealFunction& f, double mu, double y, double nu) {
  check_rl_args(mu, y, nu);
  const NormalizedRule& nr = cached_rule(mu, nu);
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < nr.zeta.size(); ++i) {
    acc.add(nr.omega[i] * f(y * nr.zeta[i]));
  }
  return std::pow(y, mu) * acc.value();
}

double hilfer_fd_step(double y, int s) {
  const double rel = std::clamp(std::pow(kEpsMach, 1.0 / (s + 2.0)), 1e-6, 1e-2);
  return y * rel;
}

double rl_derivative(const RealFunction& f, int k, double mu, double y, double nu,
                     double rel_step) {
  if (k < 0) throw std::invalid_argument("derivative order must be non-negative");
  if (!(y > 0.0)) throw std::invalid_argument("rl_derivative needs y > 0");
  if (mu < 0.0) throw std::invalid_argument("fractional integral order must be >= 0");
  auto inner = [&](double z) { return mu > 0.0 ? rl_integral(f, mu, z, nu) : f(z); };
  if (k == 0) return inner(y);
  const double h = rel_step > 0.0 ? y * rel_step : hilfer_fd_step(y, k);
  return central_difference(inner, k, y, h);
}

double hilfer_derivative(const RealFunction& f, const HilferOrder& order, double y,
                         const HilferExponents& ex) {
  if (!(y > 0.0)) throw std::invalid_argument("Hilfer derivative needs y > 0");
  if (order.s < 1 || !(order.alpha > order.s - 1 && order.alpha <= order.s)) {
    throw std::invalid_argument("Hilfer order requires s - 1 < alpha <= s");
  }
  if (!(order.beta >= 0.0 && order.beta <= 1.0)) {
    throw std::invalid_argument("Hilfer type beta must lie in [0,1]");
  }
  const double mu_in = (1.0 - order.beta) * (order.s - order.alpha);
  const double mu_out = order.beta * (order.s - order.alpha);
  const double nu_in = ex.inner;
  const double nu_out = std::isnan(ex.outer) ? nu_in + mu_in - order.s : ex.outer;

  auto inner = [&](double z) {
    return mu_in > 0.0 ? rl_integral(f, mu_in, z, nu_in) : f(z);
  };
  auto deriv = [&](double z) {
    return central_difference(inner, order.s, z, hilfer_fd_step(z, order.s));
  };
  if (!(mu_out > 0.0)) return deriv(y);
  if (!(nu_out > -1.0)) {
    throw std::invalid_argument(
        "outer fractional integral diverges for the declared exponent " +
        std::to_string(nu_out));
  }
  return rl_integral(deriv, mu_out, y, nu_out);
}

double hilfer_derivative(const RealFunction& f, const EquationSpec& eq, double y,
                         const HilferExponents& ex) {
  return hilfer_derivative(f, HilferOrder{eq.alpha, eq.beta, eq.s_count}, y, ex);
}

double power_rule(double c, double alpha) {
  const SignedLogGamma num = log_gamma(c + 1.0);
  if (num.sign == 0) {
    throw std::invalid_argument("power rule undefined: Gamma(c+1) has a pole");
  }
  const SignedLogGamma den = log_gamma(c + 1.0 - alpha);
  if (den.sign == 0) return 0.0;
  return num.sign * den.sign * std::exp(num.log_abs - den.log_abs);
}

FdValue x_derivative(const RealFunction& u, int order, double x, double h,
                     int levels) {
  if (order < 1 || order > 8) {
    throw std::invalid_argument("x_derivative order must lie in [1,8]");
  }
  if (!(h > 0.0)) throw std::invalid_argument("x_derivative step must be positive");
  levels = std::max(levels, 0);
  // Richardson table in h^2
  std::vector<double> prev;
  std::vector<double> cur;
  double err = 0.0;
  for (int i = 0; i <= levels; ++i) {
    cur.assign(i + 1, 0.0);
    cur[0] = central_difference(u, order, x, h / std::pow(2.0, i));
    double f4 = 1.0;
    for (int j = 1; j <= i; ++j) {
      f4 *= 4.0;
      cur[j] = cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (f4 - 1.0);
    }
    if (i > 0) err = std::abs(cur[i] - prev[i - 1]);
    prev.swap(cur);
  }
  const double best = prev[levels];
  if (levels == 0) err = std::abs(best) * 1e-8;
  return {best, err};
}

double default_x_step(const EquationSpec& eq, double y) {
  const int order = 2 * eq.n;
  const double rel = order <= 4 ? 0.1 : (order <= 6 ? 0.2 : 0.3);
  return rel * std::pow(y, eq.delta());
}

double pde_residual(const FieldFunction& u, const EquationSpec& eq, double x,
                    double y, const ResidualOptions& opts) {
  eq.validate();
  if (!(y > 0.0)) throw std::invalid_argument("pde_residual needs y > 0");
  const double dy_term = hilfer_derivative([&](double z) { return u(x, z); }, eq, y,
                                           opts.exponents);
  const int order = 2 * eq.n;
  const double h = opts.h_x > 0.0 ? opts.h_x : default_x_step(eq, y);
  const FdValue dx = x_derivative([&](double s) { return u(s, y); }, order, x, h,
                                  opts.levels);
  const double sign = (eq.n % 2 == 1) ? 1.0 : -1.0;  // (-1)^(n-1)
  return (dy_term - sign * dx.value) / std::max(1.0, std::abs(dy_term));
}

}  // namespace hilfer
