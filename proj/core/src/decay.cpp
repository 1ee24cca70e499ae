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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hilfer/kernel.hpp"
#include "hilfer/specfun.hpp"
#include "numeric.hpp"

namespace hilfer {

using detail::kPi;

double decay_sigma(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw std::invalid_argument("alpha must lie in (0,2)");
  }
  const double delta = alpha / (2.0 * n);
  return (1.0 - delta) * std::pow(delta, alpha / (2.0 * n - alpha)) *
         std::cos((n - 1) * kPi / (2.0 * n - alpha));
}

DecayBound::DecayBound(int n, double alpha, double b)
    : n_(n), alpha_(alpha), b_(b), sigma_(decay_sigma(n, alpha)) {
  const double delta = alpha / (2.0 * n);
  q_ = 1.0 / (1.0 - delta);
  p_ = -(b + 0.5) / (1.0 - delta);
  t0_ = 0.5 * std::pow(std::log(1e12) / sigma_, 1.0 / q_);

  const WrightFunction phi(delta, b + 1.0);
  double worst = 0.0;
  for (const cplx& lam : roots(n)) {
    const SeriesValue v = phi(-lam * t0_);
    worst = std::max(worst, (std::abs(v.value) + v.err_bound) / std::exp(log_value_unit(t0_)));
  }
  C_ = std::max(2.0 * worst, std::numeric_limits<double>::min());
}

double DecayBound::log_value_unit(double t) const {
  return p_ * std::log(t) - sigma_ * std::pow(t, q_);
}

double DecayBound::log_value(double t) const {
  return std::log(C_) + log_value_unit(t);
}

double DecayBound::operator()(double t) const {
  if (!(t > 0.0)) throw std::invalid_argument("decay bound requires t > 0");
  return std::exp(log_value(t));
}

double decay_bound(int n, double alpha, double b, double t) {
  return DecayBound(n, alpha, b)(t);
}

}  // namespace hilfer
