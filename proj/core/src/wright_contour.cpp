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

// Hankel-contour representation
//   phi(-delta, eps; z) = (1/2 pi i) Int_Ha exp(tau + z tau^delta) tau^-eps dtau
// on a parabola through the saddle of tau + z tau^delta, followed by the
// trapezoidal rule in the parabola parameter (exponentially convergent).

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "hilfer/specfun.hpp"
#include "numeric.hpp"
#include "series.hpp"

namespace hilfer {

using detail::kEpsMach;
using detail::kInf;
using detail::kPi;

namespace {

constexpr double kMaxContourDelta = 0.95;
constexpr double kSectorFraction = 0.998;
constexpr double kLogDrop = 38.0;        // e^-38 ~ 3e-17 relative
constexpr double kStepScale = 0.16;     // times A^-1/2
constexpr double kStepCap = 0.11;       // branch point of tau(u) sits at |Im u| >= 0.7
constexpr double kContourRelErr = 64.0 * kEpsMach;
constexpr long kMaxNodes = 200000;
constexpr double kSeriesCancellationSwitch = 7.0;  // log(1e3)

struct ContourSetup {
  double delta, eps;
  cplx z;
  double theta, A, logA, c2, s2;
  cplx rot, dtau_scale;

  ContourSetup(double d, double e, cplx zz) : delta(d), eps(e), z(zz) {
    const cplx w = -z;
    theta = std::arg(w) / (1.0 - delta);
    logA = std::max((std::log(delta) + std::log(std::abs(w))) / (1.0 - delta), 0.0);
    A = std::exp(logA);
    c2 = std::cos(0.5 * theta);
    s2 = std::sin(0.5 * theta);
    rot = cplx(0.0, 1.0) * std::polar(1.0, -0.5 * theta);
    dtau_scale = std::polar(A, theta) * 2.0 * rot;
  }

  // integrand at parameter u; log_re receives the real part of its logarithm
  cplx integrand(double u, double& log_re) const {
    const cplx q = 1.0 + rot * u;
    const double zr = std::norm(q);
    const double ar = theta + 2.0 * std::atan2(u * c2, 1.0 + u * s2);
    const double lr = logA + std::log(zr);
    const double r = A * zr;
    const double rd = std::exp(delta * lr);
    const cplx tau(r * std::cos(ar), r * std::sin(ar));
    const cplx tau_delta(rd * std::cos(delta * ar), rd * std::sin(delta * ar));
    const cplx E = tau + z * tau_delta - eps * cplx(lr, ar);
    const cplx dtau = dtau_scale * q;
    log_re = E.real() + std::log(std::abs(dtau));
    return std::exp(E.real()) * cplx(std::cos(E.imag()), std::sin(E.imag())) * dtau;
  }
};

struct TrapezoidPass {
  cplx sum{0.0, 0.0};
  double abs_sum = 0.0;
  long nodes = 0;
};

// Sum the integrand at u0 + j h in both directions until it drops kLogDrop
// below the largest value seen.
TrapezoidPass trapezoid(const ContourSetup& cs, double h, double u0) {
  TrapezoidPass out;
  detail::CompensatedComplexSum acc;
  double peak = -kInf;
  const double sqrtA = std::sqrt(cs.A);
  for (int dir : {+1, -1}) {
    for (long j = (dir > 0 ? 0 : 1); out.nodes < kMaxNodes; ++j) {
      const double u = u0 + dir * static_cast<double>(j) * h;
      double lre = 0.0;
      const cplx f = cs.integrand(u, lre);
      peak = std::max(peak, lre);
      acc.add(f);
      out.abs_sum += std::abs(f);
      ++out.nodes;
      if (lre < peak - kLogDrop && std::abs(u) * sqrtA > 3.0) break;
    }
  }
  out.sum = acc.value();
  return out;
}

double contour_step(double A) {
  return std::min(kStepScale / std::sqrt(A), kStepCap);
}

}  // namespace

bool wright_contour_applicable(double delta, cplx z) {
  if (!(delta > 0.0 && delta <= kMaxContourDelta)) return false;
  if (z == 0.0 || !std::isfinite(std::abs(z))) return false;
  const double arg_w = std::arg(-z);
  return std::abs(arg_w) < kSectorFraction * (1.0 - delta) * 0.5 * kPi;
}

SeriesValue wright_phi_contour(const WrightParams& p, cplx z) {
  if (!wright_contour_applicable(p.delta, z)) {
    throw std::invalid_argument("contour representation not applicable at this argument");
  }
  const ContourSetup cs(p.delta, p.eps, z);
  const double h = contour_step(cs.A);
  const TrapezoidPass pass = trapezoid(cs, h, 0.0);
  const double scale = pass.abs_sum * h / (2.0 * kPi);
  SeriesValue out;
  out.value = pass.sum * h / cplx(0.0, 2.0 * kPi);
  out.terms_used = static_cast<std::size_t>(pass.nodes);
  out.err_bound = kContourRelErr * scale;
  out.status = SeriesStatus::converged;
  return out;
}

WrightFunction::WrightFunction(double delta, double eps) : delta_(delta), eps_(eps) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("Wright parameter delta must lie in (0,1)");
  }
  constexpr std::size_t kTable = 512;
  coef_.resize(kTable);
  log_coef_.resize(kTable);
  sign_coef_.resize(kTable);
  log_env_.resize(kTable + detail::kTailLookahead + 2);
  for (std::size_t k = 0; k < kTable; ++k) {
    const double kd = static_cast<double>(k);
    const double x = eps - delta * kd;
    const SignedLogGamma lg = log_gamma(x);
    const double lfact = std::lgamma(kd + 1.0);
    if (lg.sign == 0) {
      coef_[k] = 0.0;
      log_coef_[k] = -kInf;
      sign_coef_[k] = 0;
    } else {
      log_coef_[k] = -lg.log_abs - lfact;
      sign_coef_[k] = lg.sign;
      coef_[k] = lg.sign * std::exp(log_coef_[k]);
      if (std::abs(x) < 170.0 && k < 170) {
        // direct product is more accurate than exp(log)
        double f = 1.0;
        for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
        coef_[k] = recip_gamma(x) / f;
      }
    }
  }
  for (std::size_t k = 0; k < log_env_.size(); ++k) {
    const double kd = static_cast<double>(k);
    log_env_[k] = -std::lgamma(kd + 1.0) +
                  detail::log_recip_gamma_envelope(eps - delta * kd);
  }
}

double WrightFunction::log_cancellation(cplx z) const {
  const double zabs = std::abs(z);
  if (zabs == 0.0) return 0.0;
  const double Y = (1.0 - delta_) / delta_ *
                   std::exp((std::log(delta_) + std::log(zabs)) / (1.0 - delta_));
  const double theta = std::arg(-z) / (1.0 - delta_);
  if (std::abs(theta) >= 0.5 * kPi) return Y;
  return Y * (1.0 + std::cos(theta));
}

SeriesValue WrightFunction::series(cplx z, double tol) const {
  if (z == 0.0) {
    SeriesValue out;
    out.value = recip_gamma(eps_);
    out.terms_used = 1;
    return out;
  }
  const std::size_t table = coef_.size();
  const double zabs = std::abs(z);
  const double log_z = std::log(zabs);
  const double arg_z = std::arg(z);
  cplx power{1.0, 0.0};
  bool direct_ok = true;
  auto term = [&](std::size_t k) -> detail::SeriesTerm {
    const double kd = static_cast<double>(k);
    if (k > 0 && direct_ok) {
      power *= z;
      if (!std::isfinite(power.real()) || power == 0.0) direct_ok = false;
    }
    if (k < table) {
      if (sign_coef_[k] == 0) return {0.0, 0.0};
      if (direct_ok && coef_[k] != 0.0 && std::isfinite(coef_[k])) {
        return {power * coef_[k], (kd + 4.0) * kEpsMach};
      }
      const double mag = std::exp(kd * log_z + log_coef_[k]);
      return {std::polar(mag * sign_coef_[k], kd * arg_z),
              (4.0 + 2.0 * (std::abs(kd * log_z) + std::abs(log_coef_[k]))) * kEpsMach};
    }
    const SignedLogGamma lg = log_gamma(eps_ - delta_ * kd);
    if (lg.sign == 0) return {0.0, 0.0};
    const double la = -lg.log_abs - std::lgamma(kd + 1.0);
    return {std::polar(std::exp(kd * log_z + la) * lg.sign, kd * arg_z),
            (4.0 + 2.0 * (std::abs(kd * log_z) + std::abs(la))) * kEpsMach};
  };
  auto log_bound = [&](std::size_t k) {
    const double kd = static_cast<double>(k);
    if (k < log_env_.size()) return kd * log_z + log_env_[k];
    return kd * log_z - std::lgamma(kd + 1.0) +
           detail::log_recip_gamma_envelope(eps_ - delta_ * kd);
  };
  return detail::sum_series(term, log_bound, zabs, tol, 100000);
}

SeriesValue WrightFunction::operator()(cplx z) const {
  constexpr double kTol = 1e-14;
  if (z == 0.0) return series(z, kTol);
  const bool contour_ok = wright_contour_applicable(delta_, z);
  if (contour_ok && log_cancellation(z) > kSeriesCancellationSwitch) {
    return wright_phi_contour({delta_, eps_}, z);
  }
  SeriesValue s = series(z, kTol);
  if (s.converged() || !contour_ok) {
    if (!s.converged()) {
      // accept the summed value with an honest error when the guard passes
      SeriesValue relaxed = series(z, 1e-6);
      if (relaxed.converged()) return relaxed;
    }
    return s;
  }
  return wright_phi_contour({delta_, eps_}, z);
}

}  // namespace hilfer
