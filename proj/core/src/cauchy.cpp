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

#include "hilfer/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "numeric.hpp"
#include "quadrature.hpp"

namespace hilfer {

using detail::kInf;

namespace {

constexpr double kPanelWidth = 2.0;  // in similarity units
constexpr double kMaxWindow = 1e4;

std::vector<double> panel_breaks(double T) {
  const int m = std::max(2, static_cast<int>(std::ceil(T / kPanelWidth)));
  std::vector<double> br(m + 1);
  for (int i = 0; i <= m; ++i) br[i] = T * i / m;
  return br;
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> v(steps);
  for (int i = 0; i < steps; ++i) {
    v[i] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  }
  return v;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

void validate_data(const EquationSpec& eq, const InitialData& data) {
  eq.validate();
  if (static_cast<int>(data.funcs.size()) != eq.s_count) {
    throw std::invalid_argument("initial data needs " + std::to_string(eq.s_count) +
                                " functions, got " + std::to_string(data.funcs.size()));
  }
  for (const auto& f : data.funcs) {
    if (!f) throw std::invalid_argument("initial data function is empty");
  }
  if (!(data.growth_M > 0.0)) throw std::invalid_argument("growth_M must be positive");
  if (!(data.growth_N >= 0.0)) throw std::invalid_argument("growth_N must be >= 0");
  const double sigma = decay_sigma(eq.n, eq.alpha);
  if (!(data.growth_N < sigma)) {
    throw std::invalid_argument("growth certificate requires N < sigma (N = " +
                                num(data.growth_N) + ", sigma = " + num(sigma) + ")");
  }
}

double kernel_exponent(const EquationSpec& eq, int k) {
  if (k < 0 || k >= eq.s_count) {
    throw std::invalid_argument("kernel_exponent: k must lie in [0, s_count)");
  }
  return -eq.delta() - eq.inner_order() + k;
}

void Grid::validate() const {
  if (x_steps < 1 || y_steps < 1) throw std::invalid_argument("grid steps must be >= 1");
  if (!(x_max >= x_min)) throw std::invalid_argument("grid needs x_max >= x_min");
  if (!(y_min > 0.0)) throw std::invalid_argument("grid needs y_min > 0");
  if (!(y_max >= y_min)) throw std::invalid_argument("grid needs y_max >= y_min");
}

std::vector<double> Grid::xs() const { return linspace(x_min, x_max, x_steps); }
std::vector<double> Grid::ys() const { return linspace(y_min, y_max, y_steps); }

std::size_t SolutionField::failures() const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [](const PointValue& p) { return !p.ok; }));
}

CauchySolver::CauchySolver(const EquationSpec& eq, InitialData data, double tol)
    : eq_(eq), data_(std::move(data)), tol_(tol) {
  validate_data(eq_, data_);
  if (!(tol_ > 0.0)) throw std::invalid_argument("tolerance must be positive");
  for (int k = 0; k < eq_.s_count; ++k) {
    auto ks = std::make_shared<const KernelSpec>(eq_, kernel_exponent(eq_, k));
    tables_.push_back(std::make_shared<const KernelTable>(*ks));
    kernels_.push_back(std::move(ks));
  }
}

double CauchySolver::window_t(int k, double x, double y, double tail_tol) const {
  const DecayBound& env = kernels_[k]->bound();
  const double delta = eq_.delta();
  const double yd = std::pow(y, delta);
  const double q = env.rate_power();
  const double p = env.power();
  const double sigma = env.sigma();
  const double N = data_.growth_N;
  const double ax = std::abs(x);
  if (N > 0.0 && !(N * std::pow(yd, q) < sigma)) return std::numeric_limits<double>::quiet_NaN();

  // log of M |K(t)| e^{N(|x| + yd t)^q} and its first two derivatives
  const double log_front = std::log(data_.growth_M * 0.5 * env.C());
  auto g = [&](double t) {
    return log_front + N * std::pow(ax + yd * t, q) + p * std::log(t) - sigma * std::pow(t, q);
  };
  auto g1 = [&](double t) {
    return N * q * std::pow(ax + yd * t, q - 1.0) * yd + p / t -
           sigma * q * std::pow(t, q - 1.0);
  };
  auto g2 = [&](double t) {
    return N * q * (q - 1.0) * std::pow(ax + yd * t, q - 2.0) * yd * yd - p / (t * t) -
           sigma * q * (q - 1.0) * std::pow(t, q - 2.0);
  };
  auto concave_beyond = [&](double t) {
    for (int i = 0; i < 12; ++i, t *= 2.0) {
      if (!(g1(t) < 0.0 && g2(t) < 0.0)) return false;
    }
    return true;
  };
  // two sides, xi = x +- yd t, dxi = yd dt
  const double log_target = std::log(tail_tol) - (kernels_[k]->b() + delta) * std::log(y) -
                            std::log(2.0);
  for (double t = env.t0(); t < kMaxWindow; t *= 1.05) {
    if (!concave_beyond(t)) continue;
    if (g(t) - std::log(-g1(t)) <= log_target) return t;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double CauchySolver::window(int k, double x, double y, double tail_tol) const {
  if (k < 0 || k >= eq_.s_count) throw std::invalid_argument("window: bad k");
  if (!(y > 0.0)) throw std::invalid_argument("window needs y > 0");
  return window_t(k, x, y, tail_tol) * std::pow(y, eq_.delta());
}

PointValue CauchySolver::operator()(double x, double y) const {
  PointValue out;
  if (!(y > 0.0)) {
    out.ok = false;
    out.message = "y must be positive";
    return out;
  }
  const double delta = eq_.delta();
  const double yd = std::pow(y, delta);
  const double tail_tol = 0.1 * tol_ / eq_.s_count;
  try {
    for (int k = 0; k < eq_.s_count; ++k) {
      const KernelTable& tab = *tables_[k];
      const RealFunction& phi = data_.funcs[k];
      const double T = window_t(k, x, y, tail_tol);
      if (std::isnan(T)) {
        out.ok = false;
        out.message = "data growth N = " + num(data_.growth_N) +
                      " is not dominated by the kernel decay at y = " + num(y);
        out.err = kInf;
        return out;
      }
      const double scale = std::pow(y, tab.b() + delta);
      const double Tm = std::min(T, tab.t_max());
      auto f = [&](double t) { return tab(t) * (phi(x + yd * t) + phi(x - yd * t)); };
      // absolute target relative to the scaled integral
      const double abs_tol = 0.1 * tol_ / (eq_.s_count * scale);
      detail::QuadResult r = detail::integrate_panels(f, panel_breaks(Tm), 1e-3 * tol_, abs_tol);
      double value = r.value;
      double err = r.err;
      bool ok = r.ok;
      if (T > Tm) {
        const KernelSpec& ks = *kernels_[k];
        auto fd = [&](double t) {
          return gamma_b(ks, t, 1.0, 1e-13).value * (phi(x + yd * t) + phi(x - yd * t));
        };
        std::vector<double> br = panel_breaks(T - Tm);
        for (double& b : br) b += Tm;
        const detail::QuadResult r2 = detail::integrate_panels(fd, br, 1e-3 * tol_, abs_tol);
        value += r2.value;
        err += r2.err;
        ok = ok && r2.ok;
      }
      const double data_mass =
          2.0 * T * data_.growth_M *
          std::exp(data_.growth_N * std::pow(std::abs(x) + yd * T, 1.0 / (1.0 - delta)));
      err += tab.interp_err() * data_mass;
      out.value += scale * value;
      out.err += scale * err + tail_tol;
      if (!ok) {
        out.ok = false;
        out.message = "quadrature did not reach tolerance for k = " + std::to_string(k);
      }
    }
  } catch (const std::exception& e) {
    out.ok = false;
    out.err = kInf;
    out.message = e.what();
  }
  if (!std::isfinite(out.value)) {
    out.ok = false;
    out.message = "non-finite value";
  }
  return out;
}

SolutionField solve(const CauchySolver& solver, const Grid& grid, int threads) {
  grid.validate();
  SolutionField field;
  field.grid = grid;
  field.xs = grid.xs();
  field.ys = grid.ys();
  field.points.resize(field.xs.size() * field.ys.size());
  const std::size_t nx = field.xs.size();
  auto row = [&](std::size_t iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      field.points[iy * nx + ix] = solver(field.xs[ix], field.ys[iy]);
    }
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    for (std::size_t iy = 0; iy < field.ys.size(); ++iy) row(iy);
    return field;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t iy = t; iy < field.ys.size(); iy += threads) row(iy);
    });
  }
  for (auto& th : pool) th.join();
  return field;
}

SolutionField solve(const EquationSpec& eq, const InitialData& data, const Grid& grid,
                    double tol, int threads) {
  grid.validate();
  const CauchySolver solver(eq, data, tol);
  return solve(solver, grid, threads);
}

Eq18Result eq18_identity(const EquationSpec& eq, double b, int k, double y) {
  eq.validate();
  if (k < 0 || k >= eq.s_count) {
    throw std::invalid_argument("eq18_identity: k must lie in [0, s_count)");
  }
  if (!(y > 0.0)) throw std::invalid_argument("eq18_identity needs y > 0");
  const KernelSpec ks(eq, b);
  const KernelTable tab(ks);
  const double delta = eq.delta();
  const double mu = eq.inner_order();
  const double nu = b + delta;
  if (mu > 0.0 && !(nu > -1.0)) {
    throw std::invalid_argument("eq18_identity: kernel mass ~ y^" + num(nu) +
                                " is not integrable at 0");
  }
  double rel_err = 0.0;
  bool ok = true;
  // Int Gamma_b(xi, z) dxi over the truncation window
  auto mass = [&](double z) {
    const double zd = std::pow(z, delta);
    const double R = std::min(truncation_radius(ks, z, 1e-15 * std::pow(z, b + delta)),
                              tab.t_max() * zd);
    auto f = [&](double xi) { return tab.value(xi, z); };
    std::vector<double> br = panel_breaks(R / zd);
    for (double& v : br) v *= zd;
    const detail::QuadResult r = detail::integrate_panels(f, br, 1e-13, 0.0);
    if (!r.ok) ok = false;
    if (r.value != 0.0) rel_err = std::max(rel_err, r.err / std::abs(r.value));
    return 2.0 * r.value;
  };
  Eq18Result res;
  const double h = hilfer_fd_step(y, k) / y;
  res.lhs = rl_derivative(mass, k, mu, y, nu, h);
  if (k > 0) {
    const double coarse = rl_derivative(mass, k, mu, y, nu, 2.0 * h);
    res.lhs_err = std::abs(res.lhs - coarse);
  }
  res.lhs_err += (rel_err + tab.interp_err() / tab.max_abs()) * std::max(std::abs(res.lhs), 1.0);
  if (!ok) res.lhs_err = std::max(res.lhs_err, 1e-6 * std::max(std::abs(res.lhs), 1.0));
  const double e = delta + b + mu - k;
  res.rhs = std::pow(y, e) * recip_gamma(e + 1.0);
  return res;
}

double regularized_trace(const CauchySolver& solver, int k, double x, double y) {
  const EquationSpec& eq = solver.eq();
  if (k < 0 || k >= eq.s_count) throw std::invalid_argument("trace order out of range");
  const double mu = eq.inner_order();
  auto u = [&](double z) {
    const PointValue v = solver(x, z);
    if (!v.ok) throw std::runtime_error("solution evaluation failed: " + v.message);
    return v.value;
  };
  // u ~ y^{-mu} near 0
  return rl_derivative(u, k, mu, y, mu > 0.0 ? -mu : 0.0);
}

std::vector<TraceReport> verify_initial_trace(const CauchySolver& solver,
                                              const std::vector<double>& x_probes,
                                              const std::vector<double>& y_seq) {
  for (std::size_t i = 1; i < y_seq.size(); ++i) {
    if (!(y_seq[i] < y_seq[i - 1])) throw std::invalid_argument("y_seq must decrease");
  }
  const EquationSpec& eq = solver.eq();
  std::vector<TraceReport> out;
  for (int k = 0; k < eq.s_count; ++k) {
    TraceReport rep;
    rep.k = k;
    rep.ys = y_seq;
    const RealFunction& phi = solver.data().funcs[k];
    std::vector<std::vector<double>> traces(y_seq.size(),
                                            std::vector<double>(x_probes.size()));
    for (std::size_t iy = 0; iy < y_seq.size(); ++iy) {
      double dev = 0.0;
      for (std::size_t ix = 0; ix < x_probes.size(); ++ix) {
        traces[iy][ix] = regularized_trace(solver, k, x_probes[ix], y_seq[iy]);
        dev = std::max(dev, std::abs(traces[iy][ix] - phi(x_probes[ix])));
      }
      rep.sup_dev.push_back(dev);
    }
    for (std::size_t i = 1; i < y_seq.size(); ++i) {
      rep.orders.push_back(std::log(rep.sup_dev[i - 1] / rep.sup_dev[i]) /
                           std::log(y_seq[i - 1] / y_seq[i]));
    }
    rep.extrapolated_sup_dev = rep.sup_dev.empty() ? 0.0 : rep.sup_dev.back();
    if (y_seq.size() >= 2 && std::isfinite(rep.orders.back()) && rep.orders.back() > 0.0) {
      // Richardson in y with the observed order
      const std::size_t a = y_seq.size() - 2;
      const std::size_t b = y_seq.size() - 1;
      const double r = std::pow(y_seq[a] / y_seq[b], rep.orders.back());
      double dev = 0.0;
      for (std::size_t ix = 0; ix < x_probes.size(); ++ix) {
        const double lim = traces[b][ix] + (traces[b][ix] - traces[a][ix]) / (r - 1.0);
        dev = std::max(dev, std::abs(lim - phi(x_probes[ix])));
      }
      rep.extrapolated_sup_dev = dev;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace hilfer
