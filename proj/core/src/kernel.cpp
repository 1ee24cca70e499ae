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

#include "hilfer/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "numeric.hpp"
#include "quadrature.hpp"

namespace hilfer {

using detail::kPi;

namespace {

constexpr double kRealnessTol = 1e-10;
constexpr double kCalibrationTol = 1e-13;

// sum_k c_k phi(-delta, eps_order; -lambda_k t) with c_k = (-lambda_k)^(order+1)
struct RootSum {
  cplx sum{0.0, 0.0};
  double abs_sum = 0.0;
  double err = 0.0;
};

RootSum root_sum(const KernelSpec& ks, int order, double t) {
  RootSum out;
  const WrightFunction& w = ks.wright(order);
  for (const cplx& lam : ks.roots()) {
    cplx c = -lam;
    for (int i = 0; i < order; ++i) c *= -lam;
    const SeriesValue v = w(-lam * t);
    const cplx term = c * v.value;
    out.sum += term;
    out.abs_sum += std::abs(term);
    out.err += v.err_bound;
  }
  return out;
}

void check_real(const RootSum& r) {
  if (std::abs(r.sum.imag()) > kRealnessTol * r.abs_sum + 1e-300) {
    throw std::runtime_error("kernel root sum is not real to working accuracy");
  }
}

// Literal-sign kernel value (before the calibrated sign is applied).
double literal_kernel(const KernelSpec& ks, double dx, double dy) {
  const double t = std::abs(dx) / std::pow(dy, ks.delta());
  const RootSum r = root_sum(ks, 0, t);
  return std::pow(dy, ks.b()) / (2.0 * ks.eq().n) * r.sum.real();
}

}  // namespace

std::vector<cplx> roots(int n) {
  if (n < 1) throw std::invalid_argument("roots: n must be >= 1");
  std::vector<cplx> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    const int num = n - 1 - 2 * k;
    if (2 * num == 0) {
      out.emplace_back(1.0, 0.0);
    } else {
      const double ang = num * kPi / (2.0 * n);
      out.emplace_back(std::cos(ang), std::sin(ang));
    }
  }
  return out;
}

int heat_anchor_sign() {
  // n = 1: (1/2) y^{-1/2} (-1) phi(-1/2, 1/2; -t) against e^{-t^2/4}/(2 sqrt(pi))
  const WrightFunction w(0.5, 0.5);
  const double t = 0.3;
  const double literal = 0.5 * (-1.0) * w(cplx(-t, 0.0)).value.real();
  const double heat = 0.5 * std::exp(-0.25 * t * t) / std::sqrt(kPi);
  return literal * heat > 0.0 ? 1 : -1;
}

KernelSpec::KernelSpec(const EquationSpec& eq, double b, SignConvention convention)
    : eq_(eq), b_(b) {
  eq_.validate();
  if (!std::isfinite(b)) throw std::invalid_argument("kernel exponent must be finite");
  roots_ = hilfer::roots(eq_.n);
  const double delta = eq_.delta();
  const int orders = 2 * eq_.n + 2;
  wright_.reserve(orders);
  for (int m = 0; m < orders; ++m) wright_.emplace_back(delta, b + 1.0 - m * delta);
  bound_ = DecayBound(eq_.n, eq_.alpha, b);
  if (convention == SignConvention::literal) {
    sign_ = 1;
    return;
  }
  // Calibrate on this exponent when its mass 1/Gamma(b+delta+1) is not tiny,
  // otherwise on the unit-mass member b = -delta of the same family.
  const double mass = recip_gamma(b + delta + 1.0);
  const bool own = std::abs(mass) > 1e-3;
  calibration_b_ = own ? b : -delta;
  const KernelSpec ref = own ? KernelSpec(eq_, b, SignConvention::literal)
                             : KernelSpec(eq_, -delta, SignConvention::literal);
  const double expected = own ? mass : 1.0;
  const double R = truncation_radius(ref, 1.0, kCalibrationTol);
  // only the sign is used, so a loose tolerance and a capped effort suffice
  std::vector<double> breaks;
  const int pieces = std::max(1, static_cast<int>(std::ceil(R)));
  for (int i = 0; i <= pieces; ++i) breaks.push_back(R * i / pieces);
  const detail::QuadResult q = detail::integrate_panels(
      [&](double x) { return literal_kernel(ref, x, 1.0); }, breaks, 1e-8, 0.0, 2000);
  calibration_integral_ = 2.0 * q.value;
  if (!(std::abs(calibration_integral_) > 0.5 * std::abs(expected))) {
    throw std::runtime_error("kernel sign calibration failed: integral " +
                             std::to_string(calibration_integral_) + " vs " +
                             std::to_string(expected));
  }
  sign_ = calibration_integral_ * expected > 0.0 ? 1 : -1;
  if (eq_.n == 1 && eq_.alpha == 1.0 && sign_ != heat_anchor_sign()) {
    throw std::runtime_error("kernel sign calibration disagrees with the heat anchor");
  }
}

const WrightFunction& KernelSpec::wright(int order) const {
  if (order < 0 || order >= static_cast<int>(wright_.size())) {
    throw std::out_of_range("kernel derivative order out of cached range");
  }
  return wright_[order];
}

cplx gamma_b_sum(const KernelSpec& ks, double dx, double dy) {
  if (!(dy > 0.0)) throw std::invalid_argument("gamma_b requires dy > 0");
  const double t = std::abs(dx) / std::pow(dy, ks.delta());
  return root_sum(ks, 0, t).sum;
}

KernelValue gamma_b(const KernelSpec& ks, double dx, double dy, double tol) {
  if (!(dy > 0.0)) throw std::invalid_argument("gamma_b requires dy > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("gamma_b requires tol > 0");
  const int n = ks.eq().n;
  const double scale = std::pow(dy, ks.b()) / (2.0 * n);
  const double t = std::abs(dx) / std::pow(dy, ks.delta());
  const DecayBound& env = ks.bound();
  if (t >= env.t0()) {
    const double bound = n * env(t);
    if (bound <= 1e-4 * tol) return {0.0, scale * bound};
  }
  const RootSum r = root_sum(ks, 0, t);
  check_real(r);
  return {ks.sign() * scale * r.sum.real(), scale * r.err};
}

KernelValue gamma_b_dx(const KernelSpec& ks, int order, double dx, double dy,
                       double tol) {
  if (order < 1) throw std::invalid_argument("gamma_b_dx requires order >= 1");
  if (dx == 0.0) throw std::invalid_argument("gamma_b_dx requires dx != 0");
  if (!(dy > 0.0)) throw std::invalid_argument("gamma_b_dx requires dy > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("gamma_b_dx requires tol > 0");
  const double delta = ks.delta();
  const double t = std::abs(dx) / std::pow(dy, delta);
  const double scale = std::pow(dy, ks.b() - delta * order) / (2.0 * ks.eq().n);
  const double branch = (dx < 0.0 && order % 2 == 1) ? -1.0 : 1.0;
  if (order >= static_cast<int>(2 * ks.eq().n + 2)) {
    // outside the cached table
    const WrightFunction w(delta, ks.b() + 1.0 - order * delta);
    RootSum r;
    for (const cplx& lam : ks.roots()) {
      cplx c = -lam;
      for (int i = 0; i < order; ++i) c *= -lam;
      const SeriesValue v = w(-lam * t);
      r.sum += c * v.value;
      r.abs_sum += std::abs(c * v.value);
      r.err += v.err_bound;
    }
    check_real(r);
    return {branch * ks.sign() * scale * r.sum.real(), scale * r.err};
  }
  const RootSum r = root_sum(ks, order, t);
  check_real(r);
  return {branch * ks.sign() * scale * r.sum.real(), scale * r.err};
}

double lemma1_jump(const KernelSpec& ks, int s, double dy) {
  if (s < 0) throw std::invalid_argument("jump order must be >= 0");
  if (!(dy > 0.0)) throw std::invalid_argument("jump requires dy > 0");
  const int n = ks.eq().n;
  if ((s + 1) % (2 * n) != 0) return 0.0;
  const int r = (s + 1) / (2 * n);
  // ((-1)^(n-1))^r
  const double selector = ((n - 1) % 2 == 1 && r % 2 == 1) ? -1.0 : 1.0;
  const double delta = ks.delta();
  return ks.sign() * selector * std::pow(dy, ks.b() - delta * s) *
         recip_gamma(ks.b() + 1.0 - delta * s);
}

KernelValue one_sided_jump(const KernelSpec& ks, int s, double dy) {
  if (s < 0) throw std::invalid_argument("jump order must be >= 0");
  if (s == 0) {
    // the kernel itself is continuous and even
    const double e = 1e-3 * std::pow(dy, ks.delta());
    return {gamma_b(ks, e, dy).value - gamma_b(ks, -e, dy).value, 0.0};
  }
  constexpr int kLevels = 7;
  const double eps0 = 0.05 * std::pow(dy, ks.delta());
  std::vector<double> h(kLevels);
  std::vector<double> d(kLevels);
  double err = 0.0;
  for (int i = 0; i < kLevels; ++i) {
    h[i] = eps0 / std::pow(2.0, i);
    const KernelValue plus = gamma_b_dx(ks, s, h[i], dy);
    const KernelValue minus = gamma_b_dx(ks, s, -h[i], dy);
    d[i] = plus.value - minus.value;
    err = std::max(err, plus.err_bound + minus.err_bound);
  }
  // Neville extrapolation of the polynomial in eps to eps = 0
  std::vector<double> p = d;
  double prev = p[0];
  double change = 0.0;
  for (int m = 1; m < kLevels; ++m) {
    for (int i = kLevels - 1; i >= m; --i) {
      p[i] = (h[i - m] * p[i] - h[i] * p[i - 1]) / (h[i - m] - h[i]);
    }
    change = std::abs(p[m] - prev);
    prev = p[m];
  }
  return {p[kLevels - 1], change + err};
}

namespace {

// log of an upper bound on Int_T^inf C t^p exp(-sigma t^q) dt, using
// Gamma(a, X) <= X^(a-1) e^-X / (1 - (a-1)/X) for a > 1, X > a - 1.
double log_envelope_tail(const DecayBound& env, double T) {
  const double q = env.rate_power();
  const double sigma = env.sigma();
  const double a = (env.power() + 1.0) / q;
  const double X = sigma * std::pow(T, q);
  double lg = (a - 1.0) * std::log(X) - X;
  if (a > 1.0) {
    if (X <= 2.0 * (a - 1.0)) return std::numeric_limits<double>::infinity();
    lg -= std::log(1.0 - (a - 1.0) / X);
  }
  return std::log(env.C() / q) - a * std::log(sigma) + lg;
}

}  // namespace

double truncation_radius(const KernelSpec& ks, double dy, double tail_tol) {
  if (!(dy > 0.0)) throw std::invalid_argument("truncation_radius requires dy > 0");
  if (!(tail_tol > 0.0)) throw std::invalid_argument("truncation_radius requires tail_tol > 0");
  const DecayBound& env = ks.bound();
  const double delta = ks.delta();
  const double log_front = (ks.b() + delta) * std::log(dy);
  auto log_tail = [&](double T) { return log_front + log_envelope_tail(env, T); };
  const double target = std::log(tail_tol);
  double lo = env.t0();
  if (log_tail(lo) <= target) return lo * std::pow(dy, delta);
  double hi = 2.0 * lo;
  while (log_tail(hi) > target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw std::runtime_error("truncation radius search diverged");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (log_tail(mid) > target ? lo : hi) = mid;
  }
  return hi * std::pow(dy, delta);
}

namespace {

std::array<double, KernelTable::kDegree + 1> chebyshev_fit(
    const std::function<double(double)>& f, double lo, double hi) {
  constexpr int N = KernelTable::kDegree + 1;
  std::array<double, N> vals{};
  for (int j = 0; j < N; ++j) {
    const double x = std::cos(kPi * (j + 0.5) / N);
    vals[j] = f(0.5 * (lo + hi) + 0.5 * (hi - lo) * x);
  }
  std::array<double, N> c{};
  for (int k = 0; k < N; ++k) {
    double s = 0.0;
    for (int j = 0; j < N; ++j) s += vals[j] * std::cos(kPi * k * (j + 0.5) / N);
    c[k] = (k == 0 ? 1.0 : 2.0) * s / N;
  }
  return c;
}

double clenshaw(const std::array<double, KernelTable::kDegree + 1>& c, double x) {
  double b1 = 0.0;
  double b2 = 0.0;
  for (int k = KernelTable::kDegree; k >= 1; --k) {
    const double b0 = 2.0 * x * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + c[0];
}

}  // namespace

KernelTable::KernelTable(const KernelSpec& ks, double rel_tol)
    : b_(ks.b()), delta_(ks.delta()), bound_(ks.bound()) {
  const int n = ks.eq().n;
  auto K = [&](double t) { return gamma_b(ks, t, 1.0, 1e-300).value; };
  max_abs_ = std::abs(K(0.0));
  for (double t = 0.25; t < bound_.t0(); t += 0.25) max_abs_ = std::max(max_abs_, std::abs(K(t)));
  // |K(t)| <= E(t)/2 beyond t0; stop where that is negligible
  const double target = 1e-3 * rel_tol * max_abs_;
  double T = bound_.t0();
  while (0.5 * n * bound_(T) / n > target) T *= 1.05;
  t_max_ = T;

  const double tol = rel_tol * max_abs_;
  std::vector<std::pair<double, double>> stack;
  const int initial = std::max(8, static_cast<int>(std::ceil(t_max_)));
  for (int i = initial - 1; i >= 0; --i) {
    stack.emplace_back(t_max_ * i / initial, t_max_ * (i + 1) / initial);
  }
  edges_.push_back(0.0);
  while (!stack.empty()) {
    const auto [lo, hi] = stack.back();
    stack.pop_back();
    const auto c = chebyshev_fit(K, lo, hi);
    const double tail = std::abs(c[kDegree]) + std::abs(c[kDegree - 1]);
    if (tail > tol && hi - lo > 1e-6) {
      const double mid = 0.5 * (lo + hi);
      stack.emplace_back(mid, hi);
      stack.emplace_back(lo, mid);
      continue;
    }
    interp_err_ = std::max(interp_err_, tail);
    edges_.push_back(hi);
    coefs_.push_back(c);
  }
  interp_err_ += 4e-15 * max_abs_;
}

double KernelTable::operator()(double t) const {
  t = std::abs(t);
  if (t >= t_max_) return 0.0;
  const auto it = std::upper_bound(edges_.begin(), edges_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - edges_.begin()) - 1;
  const double lo = edges_[i];
  const double hi = edges_[i + 1];
  return clenshaw(coefs_[i], (2.0 * t - lo - hi) / (hi - lo));
}

double KernelTable::value(double dx, double dy) const {
  return std::pow(dy, b_) * (*this)(std::abs(dx) / std::pow(dy, delta_));
}

double KernelTable::tail_mass(double t) const {
  // |K| <= E/2 (n roots, 1/2n prefactor)
  return 0.5 * std::exp(log_envelope_tail(bound_, std::max(t, bound_.t0())));
}

}  // namespace hilfer
