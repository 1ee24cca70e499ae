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

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>

#include "hilfer/specfun.hpp"
#include "numeric.hpp"

namespace hilfer::detail {

inline constexpr double kCancellationLimit = 1e8;
inline constexpr int kTailLookahead = 8;

struct SeriesTerm {
  std::complex<double> value;
  double rel_err;  // relative rounding error estimate of this term
};

// Geometric tail bound starting at index j0 from an envelope whose successive
// ratios are checked over a short lookahead window.
template <class LogBoundFn>
double geometric_tail(LogBoundFn& log_bound, std::size_t j0) {
  double prev = log_bound(j0);
  if (prev == -kInf) return 0.0;
  double rmax = 0.0;
  for (int i = 1; i <= kTailLookahead; ++i) {
    const double next = log_bound(j0 + static_cast<std::size_t>(i));
    rmax = std::max(rmax, std::exp(next - prev));
    prev = next;
  }
  if (!(rmax < 1.0)) return kInf;
  return std::exp(log_bound(j0)) / (1.0 - rmax);
}

// Sums term(0) + term(1) + ... until the envelope tail falls below
// tol * max(1, |partial|) past k > zabs. Applies the cancellation guard.
template <class TermFn, class LogBoundFn>
SeriesValue sum_series(TermFn&& term, LogBoundFn&& log_bound, double zabs,
                       double tol, std::size_t max_terms) {
  CompensatedComplexSum acc;
  double abs_sum = 0.0;
  double round = 0.0;
  double tail = kInf;
  std::size_t used = 0;
  bool reached = false;
  for (std::size_t k = 0; k < max_terms; ++k) {
    const SeriesTerm t = term(k);
    acc.add(t.value);
    const double a = std::abs(t.value);
    abs_sum += a;
    round += a * t.rel_err;
    used = k + 1;
    if (static_cast<double>(k) <= zabs) continue;
    const double target = tol * std::max(1.0, std::abs(acc.value()));
    if (log_bound(k + 1) > std::log(target)) continue;
    tail = geometric_tail(log_bound, k + 1);
    if (tail <= target) {
      reached = true;
      break;
    }
  }
  const std::complex<double> s = acc.value();
  const double mag = std::abs(s);
  const double err = tail + round + 2.0 * kEpsMach * abs_sum;

  SeriesValue out;
  out.terms_used = used;
  const bool guard_ok = abs_sum <= kCancellationLimit * mag;
  if (reached && guard_ok && err <= tol * std::max(1.0, mag)) {
    out.value = s;
    out.err_bound = err;
    out.status = SeriesStatus::converged;
    return out;
  }
  out.value = 0.0;
  out.err_bound = std::isfinite(err) ? mag + err
                                     : std::numeric_limits<double>::max();
  out.status = SeriesStatus::bound_returned;
  return out;
}

}  // namespace hilfer::detail
