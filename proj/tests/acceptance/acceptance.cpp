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

// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.
// Usage: hilfer_acceptance [criterion ...]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "checks.hpp"
#include "commands.hpp"
#include "hilfer/selfsim.hpp"
#include "mp_oracle.hpp"

namespace {

using namespace hilfer;
using checks::CheckResult;

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void absorb(Outcome& o, const CheckResult& r) {
  o.pass = o.pass && r.pass;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s%s %.3g/%.3g%s", o.detail.empty() ? "" : "; ",
                r.check.c_str(), r.measured, r.threshold, r.pass ? "" : " FAIL");
  o.detail += buf;
}

void absorb(Outcome& o, const std::vector<CheckResult>& rs) {
  for (const auto& r : rs) absorb(o, r);
}

std::vector<std::pair<double, double>> interior_points() {
  return {{0.3, 0.4}, {-0.6, 0.5}, {0.9, 0.6}, {-1.2, 0.8}, {0.45, 1.0},
          {1.5, 1.1}, {-0.2, 1.3}, {0.75, 1.5}, {-1.8, 1.7}, {1.1, 2.0}};
}

Outcome ac1() {
  Outcome o;
  absorb(o, checks::wright_gaussian(51, 5.0, 1e-10));
  return o;
}

Outcome ac2() {
  Outcome o;
  absorb(o, checks::wright_fixtures(cli::kWrightFixtures, 1e-12));
  absorb(o, checks::gen_wright_fixtures(cli::kGenWrightFixtures, 1e-12));
  absorb(o, checks::mittag_leffler_fixtures(cli::kMittagLefflerFixtures, 1e-12));
  return o;
}

Outcome ac3() {
  Outcome o;
  absorb(o, checks::eq18_sweep(checks::Eq18Sweep{}));
  return o;
}

Outcome ac4() {
  Outcome o;
  for (double alpha : {0.5, 0.8, 1.5}) {
    const EquationSpec eq = EquationSpec::make(2, alpha, 1.0);
    const auto rs = checks::derivative_jumps(eq, kernel_exponent(eq, 0), {0, 1, 2, 3}, 1.0,
                                         1e-5, 1e-7);
    for (const auto& r : rs) o.pass = o.pass && r.pass;
    double worst_on = 0.0;
    double worst_off = 0.0;
    for (const auto& r : rs) {
      double& w = r.parameters["closed_form"].get<double>() != 0.0 ? worst_on : worst_off;
      w = std::max(w, r.measured);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%salpha=%g rel %.2g off %.2g", o.detail.empty() ? "" : "; ",
                  alpha, worst_on, worst_off);
    o.detail += buf;
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  checks::TraceCheck tc;
  for (int i = 0; i <= 16; ++i) tc.probes.push_back(-2.0 + 0.25 * i);
  tc.y_seq = {1e-1, 1e-2, 1e-3};
  tc.threshold = 1e-3;
  for (double alpha : {0.8, 1.5}) {
    for (double beta : {0.0, 1.0}) {
      for (const auto& r : checks::gaussian_traces(EquationSpec::make(2, alpha, beta), tc, true)) {
        o.pass = o.pass && r.pass;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%sa=%g b=%g k=%d dev %.2g%s",
                      o.detail.empty() ? "" : "; ", alpha, beta,
                      r.parameters["k"].get<int>(), r.measured, r.pass ? "" : " FAIL");
        o.detail += buf;
      }
    }
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  const auto pts = interior_points();
  const EquationSpec caputo = EquationSpec::make(2, 0.8, 1.0);
  absorb(o, checks::kernel_residual(caputo, kernel_exponent(caputo, 0), pts, 1e-4));
  const EquationSpec hilfer = EquationSpec::make(2, 1.5, 0.5);
  absorb(o, checks::kernel_residual(hilfer, kernel_exponent(hilfer, 1), pts, 1e-4));
  absorb(o, checks::solve_residual(caputo, pts, 1e-4));
  return o;
}

// u(., y) against phihat(w) E_alpha(-w^4 y^alpha) with phihat = sqrt(pi) e^{-w^2/4}
Outcome ac7() {
  const EquationSpec eq = EquationSpec::make(2, 0.8, 1.0);
  const double y = 0.7;
  const double h = 0.1;
  Grid grid{-40.0, 40.0, 801, y, y, 1};
  InitialData data{{[](double x) { return std::exp(-x * x); }}};
  const SolutionField field = solve(eq, data, grid, 1e-10);
  double worst = 0.0;
  double worst_w = 0.0;
  for (int i = 0; i <= 30; ++i) {
    const double w = 0.1 * i;
    double sum = 0.0;
    for (std::size_t ix = 0; ix < field.xs.size(); ++ix) {
      const double wt = (ix == 0 || ix + 1 == field.xs.size()) ? 0.5 : 1.0;
      sum += wt * field.at(ix, 0).value * std::cos(w * field.xs[ix]);
    }
    sum *= h;
    using hilfer_oracle::mp;
    const mp z = -pow(mp(w), 4) * pow(mp(y), mp("0.8"));
    const double ml =
        static_cast<double>(hilfer_oracle::mittag_leffler(mp("0.8"), {z, mp(0)}).re);
    const double want = std::sqrt(kPi) * std::exp(-w * w / 4.0) * ml;
    if (std::abs(sum - want) > worst) {
      worst = std::abs(sum - want);
      worst_w = w;
    }
  }
  Outcome o;
  o.pass = field.failures() == 0 && worst < 1e-4;
  char buf[160];
  std::snprintf(buf, sizeof buf, "max |dft - oracle| %.3g at w=%g (threshold 1e-4), %zu failed points",
                worst, worst_w, field.failures());
  o.detail = buf;
  return o;
}

Outcome ac8() {
  Outcome o;
  absorb(o, checks::heat_reduction(1e-8));
  return o;
}

Outcome ac9() {
  const GeneralEquationSpec g = GeneralEquationSpec::make(0.5, 0.25, 0.5, 0.5, 2.5, 0.5, 1);
  const SimilarityExponents e = similarity_exponents(g, 0.0);
  Outcome o;
  double prev = INFINITY;
  for (int N : {1, 2, 4, 8}) {
    const double r = std::abs(selfsim_residual(g, e, coefficients(g, e, 1, N), 0.7, 1.3));
    // the last step may sit at the rounding floor
    const bool down = r < prev || r < 1e-15;
    o.pass = o.pass && down;
    prev = r;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%sN=%d %.2g", o.detail.empty() ? "" : ", ", N, r);
    o.detail += buf;
  }
  o.pass = o.pass && prev < 1e-4;
  return o;
}

struct Tally {
  int total = 0;
  int failed = 0;
  int skipped = 0;
  double worst = 0.0;
  void record(double measure, bool ok) {
    ++total;
    if (!ok) ++failed;
    if (std::isfinite(measure)) worst = std::max(worst, measure);
  }
};

Outcome ac10() {
  std::mt19937_64 rng(20261018);
  auto unif = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  auto pick = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
  Tally real, even, scale, prod, cross;

  for (int s = 0; s < 40; ++s) {
    const EquationSpec eq = EquationSpec::make(pick(1, 3), unif(0.1, 1.95), unif(0.0, 1.0));
    const KernelSpec ks(eq, unif(-0.9, 1.0));
    const double dy = unif(0.2, 3.0);
    std::vector<double> xs;
    double norm = 0.0;
    for (int i = 0; i < 8; ++i) {
      xs.push_back(unif(0.0, 4.0) * std::pow(dy, ks.delta()));
      norm = std::max(norm, std::abs(gamma_b_sum(ks, xs.back(), dy).real()));
    }
    for (double x : xs) {
      const cplx v = gamma_b_sum(ks, x, dy);
      const double im = std::abs(v.imag()) / norm;
      real.record(im, im < 1e-10);
      const double a = gamma_b(ks, x, dy).value;
      const double b = gamma_b(ks, -x, dy).value;
      even.record(std::abs(a - b), a == b);
      const double lam = unif(0.3, 3.0);
      const double c = gamma_b(ks, std::pow(lam, ks.delta()) * x, lam * dy).value;
      const double dev = std::abs(c - std::pow(lam, ks.b()) * a) /
                         (std::pow(lam, ks.b()) * norm * std::abs(ks.sign()));
      scale.record(dev, dev < 1e-10);
    }
  }

  for (int s = 0; s < 60; ++s) {
    const double alpha1 = unif(0.2, 1.0);
    const double alpha2 = unif(1.05, 3.0);
    GeneralEquationSpec g;
    try {
      g = GeneralEquationSpec::make(unif(0.0, 1.0), unif(0.0, 0.5), alpha1, unif(0.0, 1.0),
                                    alpha2, unif(0.0, 1.0), pick(0, 1) ? 1 : -1);
    } catch (const std::invalid_argument&) {
      ++prod.skipped;
      continue;
    }
    const SimilarityExponents e = similarity_exponents(g, unif(-0.5, 1.0));
    const int j = pick(1, g.p);
    try {
      const CoefficientTable t = coefficients(g, e, j, 32);
      for (int n = 1; n <= 32; ++n) {
        if (!std::isnormal(t.c[n])) continue;
        const double dev = std::abs(coefficient_product(g, e, j, n) / t.c[n] - 1.0);
        prod.record(dev, dev < 1e-12);
      }
    } catch (const std::domain_error&) {
      ++prod.skipped;
    }
  }

  for (int s = 0; s < 60; ++s) {
    const double alpha2 = unif(1.05, 3.0);
    const GeneralEquationSpec g = GeneralEquationSpec::make(
        0.0, 0.0, unif(0.2, 1.0), unif(0.0, 1.0), alpha2, unif(0.0, 1.0), pick(0, 1) ? 1 : -1);
    const double b = unif(-0.5, 1.0);
    const int j = pick(1, g.p);
    const double c0 = case1_c0(g, j, b);
    if (c0 == 0.0) {
      ++cross.skipped;
      continue;
    }
    const SimilarityExponents e = similarity_exponents(g, b);
    CoefficientTable t;
    try {
      t = coefficients(g, e, j, 80, c0);
    } catch (const std::domain_error&) {
      ++cross.skipped;
      continue;
    }
    const double x = unif(0.1, 2.0);
    const double y = unif(0.3, 2.0);
    try {
      const SelfSimValue a = eval_selfsimilar(g, e, t, x, y);
      const SelfSimValue c = eval_case1(g, j, b, x, y);
      const double diff = std::abs(a.value - c.value);
      const double bound = a.err + c.err;
      cross.record(diff / std::max(bound, 1e-300), diff <= bound);
    } catch (const std::domain_error&) {
      ++cross.skipped;
    }
  }

  Outcome o;
  auto line = [&](const char* name, const Tally& t) {
    o.pass = o.pass && t.failed == 0 && t.total > 0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s %d/%d worst %.2g", o.detail.empty() ? "" : "; ",
                  name, t.total - t.failed, t.total, t.worst);
    o.detail += buf;
  };
  line("realness", real);
  line("evenness", even);
  line("scaling", scale);
  line("product/recurrence", prod);
  line("series/gen-wright (diff/bound)", cross);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "Wright-Gaussian identity", ac1},
      {2, "special-function fixtures", ac2},
      {3, "kernel mass identity sweep", ac3},
      {4, "kernel derivative jumps", ac4},
      {5, "initial traces, Gaussian data", ac5},
      {6, "PDE residuals", ac6},
      {7, "Caputo Fourier oracle", ac7},
      {8, "heat reduction", ac8},
      {9, "self-similar residual", ac9},
      {10, "structural invariants", ac10},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("AC%-2d %s  %-32s %6.1fs  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, dt,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
