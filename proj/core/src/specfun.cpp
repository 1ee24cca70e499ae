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

#include "hilfer/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/policies/policy.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "numeric.hpp"
#include "quadrature.hpp"
#include "series.hpp"

namespace hilfer {

namespace bmp = boost::math::policies;
using quiet_policy =
    bmp::policy<bmp::pole_error<bmp::ignore_error>,
                bmp::overflow_error<bmp::ignore_error>,
                bmp::underflow_error<bmp::ignore_error>,
                bmp::domain_error<bmp::ignore_error>,
                bmp::evaluation_error<bmp::ignore_error>>;

using detail::kEpsMach;
using detail::kInf;
using detail::SeriesTerm;

namespace {

// 1/Gamma is below this on [1, inf); attained near x = 1.4616.
constexpr double kRecipGammaMaxOnPositive = 1.1288037795340031;
constexpr double kGammaMinAbscissa = 1.4616321449683623;
constexpr double kDirectGammaLimit = 170.0;
constexpr std::size_t kMaxSeriesTerms = 100000;

bool exact_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

}  // namespace

double recip_gamma(double x) {
  if (std::isnan(x)) return x;
  if (exact_nonpositive_integer(x)) return 0.0;
  if (x > 171.7) return 0.0;
  return 1.0 / boost::math::tgamma(x, quiet_policy());
}

SignedLogGamma log_gamma(double x) {
  if (exact_nonpositive_integer(x)) return {kInf, 0};
  int sign = 1;
  const double lg = boost::math::lgamma(x, &sign, quiet_policy());
  return {lg, sign};
}

bool is_gamma_pole(double x) {
  if (x > 0.5) return false;
  const double r = std::round(x);
  return std::abs(x - r) <= 1e-12 * std::max(1.0, std::abs(x));
}

namespace detail {

double log_recip_gamma_envelope(double x) {
  if (x >= kGammaMinAbscissa) return -log_gamma(x).log_abs;
  if (x >= 1.0) return std::log(kRecipGammaMaxOnPositive);
  if (x > 0.0) return 0.0;
  // reflection: |1/Gamma(x)| = |Gamma(1-x) sin(pi x)| / pi
  return log_gamma(1.0 - x).log_abs - std::log(kPi);
}

}  // namespace detail

namespace {

// Reciprocal gamma as (log|.|, sign), or direct value when in range.
struct RecipGammaParts {
  double direct;  // valid when use_direct
  double log_abs;
  int sign;
  bool use_direct;
};

RecipGammaParts recip_gamma_parts(double x) {
  if (std::abs(x) < kDirectGammaLimit) {
    return {recip_gamma(x), 0.0, 0, true};
  }
  const SignedLogGamma lg = log_gamma(x);
  return {0.0, -lg.log_abs, lg.sign, false};
}

double log_abs_or_lgamma_cost(double log_abs, double k_log_z, double lfact) {
  return 4.0 + 2.0 * (std::abs(log_abs) + std::abs(k_log_z) + std::abs(lfact));
}

SeriesValue zero_argument(double value) {
  SeriesValue out;
  out.value = value;
  out.err_bound = 0.0;
  out.terms_used = 1;
  out.status = SeriesStatus::converged;
  return out;
}

void check_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw std::invalid_argument("tolerance must be positive and finite");
  }
}

void check_wright(const WrightParams& p) {
  if (!(p.delta > 0.0 && p.delta < 1.0)) {
    throw std::invalid_argument("Wright parameter delta must lie in (0,1), got " +
                                std::to_string(p.delta));
  }
  if (!std::isfinite(p.eps)) {
    throw std::invalid_argument("Wright parameter eps must be finite");
  }
}

}  // namespace

SeriesValue wright_phi(const WrightParams& p, cplx z, double tol) {
  check_wright(p);
  check_tol(tol);
  if (z == 0.0) return zero_argument(recip_gamma(p.eps));

  const double zabs = std::abs(z);
  const double log_z = std::log(zabs);
  const double arg_z = std::arg(z);
  cplx power{1.0, 0.0};  // z^k / k!
  bool direct_ok = true;

  auto term = [&](std::size_t k) -> SeriesTerm {
    const double kd = static_cast<double>(k);
    if (k > 0 && direct_ok) {
      power *= z / kd;
      if (!std::isfinite(power.real()) || power == 0.0) direct_ok = false;
    }
    const double x = p.eps - p.delta * kd;
    const RecipGammaParts rg = recip_gamma_parts(x);
    if (direct_ok && rg.use_direct) {
      return {power * rg.direct, (kd + 4.0) * kEpsMach};
    }
    if (rg.sign == 0 || (rg.use_direct && rg.direct == 0.0)) return {0.0, 0.0};
    const double lfact = std::lgamma(kd + 1.0);
    const double la = rg.use_direct ? std::log(std::abs(rg.direct)) : rg.log_abs;
    const int sg = rg.use_direct ? (rg.direct < 0.0 ? -1 : 1) : rg.sign;
    const double mag = std::exp(kd * log_z - lfact + la);
    const cplx t = std::polar(mag * sg, kd * arg_z);
    return {t, log_abs_or_lgamma_cost(la, kd * log_z, lfact) * kEpsMach};
  };
  auto log_bound = [&](std::size_t k) {
    const double kd = static_cast<double>(k);
    return kd * log_z - std::lgamma(kd + 1.0) +
           detail::log_recip_gamma_envelope(p.eps - p.delta * kd);
  };
  return detail::sum_series(term, log_bound, zabs, tol, kMaxSeriesTerms);
}

SeriesValue wright_phi(const WrightParams& p, cplx z, double tol,
                       const DecayBound& envelope) {
  SeriesValue v = wright_phi(p, z, tol);
  if (v.converged()) return v;
  const double delta_env = envelope.alpha() / (2.0 * envelope.n());
  const bool same_family =
      std::abs(delta_env - p.delta) <= 1e-14 &&
      std::abs(envelope.exponent_b() + 1.0 - p.eps) <= 1e-14;
  const double t = std::abs(z);
  if (same_family && t >= envelope.t0()) {
    v.err_bound = std::min(v.err_bound, envelope(t));
  }
  return v;
}

SeriesValue gen_wright(const GenWrightParams& p, cplx z, double tol) {
  if (!(p.mu + p.nu > 0.0)) {
    throw std::invalid_argument("generalized Wright function requires mu + nu > 0");
  }
  check_tol(tol);
  if (z == 0.0) return zero_argument(recip_gamma(p.a) * recip_gamma(p.b));

  const double zabs = std::abs(z);
  const double log_z = std::log(zabs);
  const double arg_z = std::arg(z);
  cplx power{1.0, 0.0};
  bool direct_ok = true;

  auto term = [&](std::size_t k) -> SeriesTerm {
    const double kd = static_cast<double>(k);
    if (k > 0 && direct_ok) {
      power *= z;
      if (!std::isfinite(power.real()) || power == 0.0) direct_ok = false;
    }
    const RecipGammaParts r1 = recip_gamma_parts(p.mu * kd + p.a);
    const RecipGammaParts r2 = recip_gamma_parts(p.nu * kd + p.b);
    if (direct_ok && r1.use_direct && r2.use_direct) {
      return {power * (r1.direct * r2.direct), (kd + 5.0) * kEpsMach};
    }
    auto split = [](const RecipGammaParts& r, double& la, int& sg) {
      if (r.use_direct) {
        la = r.direct == 0.0 ? -kInf : std::log(std::abs(r.direct));
        sg = r.direct < 0.0 ? -1 : (r.direct > 0.0 ? 1 : 0);
      } else {
        la = r.log_abs;
        sg = r.sign;
      }
    };
    double la1, la2;
    int s1, s2;
    split(r1, la1, s1);
    split(r2, la2, s2);
    if (s1 == 0 || s2 == 0) return {0.0, 0.0};
    const double mag = std::exp(kd * log_z + la1 + la2);
    return {std::polar(mag * s1 * s2, kd * arg_z),
            log_abs_or_lgamma_cost(la1, kd * log_z, la2) * kEpsMach};
  };
  auto log_bound = [&](std::size_t k) {
    const double kd = static_cast<double>(k);
    return kd * log_z + detail::log_recip_gamma_envelope(p.mu * kd + p.a) +
           detail::log_recip_gamma_envelope(p.nu * kd + p.b);
  };
  return detail::sum_series(term, log_bound, zabs, tol, kMaxSeriesTerms);
}

namespace {

SeriesValue ml_series(double alpha, cplx z, double tol) {
  const double zabs = std::abs(z);
  if (zabs > ml_safe_radius) {
    SeriesValue out;
    out.status = SeriesStatus::bound_returned;
    out.err_bound = std::numeric_limits<double>::max();
    return out;
  }
  const double log_z = std::log(zabs);
  const double arg_z = std::arg(z);
  cplx power{1.0, 0.0};
  bool direct_ok = true;

  auto term = [&](std::size_t k) -> SeriesTerm {
    const double kd = static_cast<double>(k);
    if (k > 0 && direct_ok) {
      power *= z;
      if (!std::isfinite(power.real()) || power == 0.0) direct_ok = false;
    }
    const double x = alpha * kd + 1.0;
    if (direct_ok && x < kDirectGammaLimit) {
      return {power * recip_gamma(x), (kd + 4.0) * kEpsMach};
    }
    const double lg = std::lgamma(x);
    const double mag = std::exp(kd * log_z - lg);
    return {std::polar(mag, kd * arg_z),
            log_abs_or_lgamma_cost(lg, kd * log_z, 0.0) * kEpsMach};
  };
  auto log_bound = [&](std::size_t k) {
    const double kd = static_cast<double>(k);
    return kd * log_z + detail::log_recip_gamma_envelope(alpha * kd + 1.0);
  };
  return detail::sum_series(term, log_bound, zabs, tol, kMaxSeriesTerms);
}

// E_alpha(z) = Int_0^inf M(r) e^{z r} dr with M(r) = phi(-alpha, 1 - alpha; -r),
// alpha < 1. M decays like exp(-c r^{1/(1-alpha)}) so the integral converges
// for every z.
SeriesValue ml_laplace(double alpha, cplx z, double tol) {
  constexpr double kInfinity = std::numeric_limits<double>::infinity();
  const WrightFunction mainardi(alpha, 1.0 - alpha);
  auto weight = [&](double r) { return mainardi(cplx(-r, 0.0)).value.real(); };
  auto log_mag = [&](double r) {
    const double w = std::abs(weight(r));
    return w > 0.0 ? std::log(w) + z.real() * r : -kInfinity;
  };
  // extend the range until the integrand is negligible against its peak
  double R = 1.0;
  double peak = -kInfinity;
  for (int it = 0; it < 40; ++it) {
    for (int i = 0; i <= 32; ++i) peak = std::max(peak, log_mag(R * i / 32.0));
    if (log_mag(R) < peak - 42.0 && log_mag(0.75 * R) < peak - 38.0) break;
    R *= 2.0;
  }
  std::vector<double> breaks;
  for (int i = 0; i <= 32; ++i) breaks.push_back(R * i / 32.0);
  // resolve the e^{z r} scale when |z| is large
  const double h = 1.0 / std::max(1.0, std::abs(z));
  for (int i = 1; i <= 64 && i * h < R / 32.0; ++i) breaks.push_back(i * h);
  std::sort(breaks.begin(), breaks.end());
  const double rel = std::max(0.1 * tol, 1e-15);
  auto part = [&](bool imag) {
    return detail::integrate_panels(
        [&](double r) {
          const cplx e = std::exp(z * r);
          return weight(r) * (imag ? e.imag() : e.real());
        },
        breaks, rel, 0.0);
  };
  // propagated error of M, trapezoid over a fine grid with a safety factor
  double m_err = 0.0;
  constexpr int kErrSamples = 256;
  for (int i = 0; i <= kErrSamples; ++i) {
    const double r = R * i / kErrSamples;
    const double w = (i == 0 || i == kErrSamples) ? 0.5 : 1.0;
    m_err += w * mainardi(cplx(-r, 0.0)).err_bound * std::exp(z.real() * r);
  }
  m_err *= 2.0 * R / kErrSamples;
  const detail::QuadResult re = part(false);
  const detail::QuadResult im = z.imag() == 0.0 ? detail::QuadResult{} : part(true);
  SeriesValue out;
  out.value = cplx(re.value, im.value);
  out.err_bound = re.err + im.err + m_err + std::exp(peak - 40.0) * R;
  out.terms_used = 0;
  out.status = (re.ok && im.ok && std::isfinite(out.err_bound) &&
                out.err_bound <= tol * std::max(1.0, std::abs(out.value)))
                   ? SeriesStatus::converged
                   : SeriesStatus::bound_returned;
  return out;
}

}  // namespace

SeriesValue mittag_leffler(double alpha, cplx z, double tol) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw std::invalid_argument("Mittag-Leffler order must lie in (0,2]");
  }
  check_tol(tol);
  if (z == 0.0) return zero_argument(1.0);
  SeriesValue v = ml_series(alpha, z, tol);
  if (v.converged() || alpha >= 1.0) return v;
  return ml_laplace(alpha, z, tol);
}

}  // namespace hilfer
