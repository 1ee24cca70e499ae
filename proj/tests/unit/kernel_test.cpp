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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hilfer/cauchy.hpp"
#include "hilfer/kernel.hpp"

namespace hilfer {
namespace {

constexpr double kPi = 3.14159265358979323846;

double heat(double x, double y) {
  return std::exp(-x * x / (4.0 * y)) / (2.0 * std::sqrt(kPi * y));
}

TEST(Roots, UnitModulusAndPower) {
  for (int n = 1; n <= 4; ++n) {
    const auto r = roots(n);
    ASSERT_EQ(static_cast<int>(r.size()), n);
    for (const cplx& l : r) {
      EXPECT_NEAR(std::abs(l), 1.0, 1e-15);
      const cplx p = std::pow(l, 2 * n);
      EXPECT_NEAR(p.real(), (n % 2 == 1) ? 1.0 : -1.0, 1e-13);
      EXPECT_NEAR(p.imag(), 0.0, 1e-13);
    }
  }
}

TEST(Kernel, HeatReduction) {
  const KernelSpec ks(EquationSpec::make(1, 1.0, 1.0), -0.5);
  EXPECT_EQ(ks.sign(), heat_anchor_sign());
  for (double y : {0.05, 0.5, 2.0}) {
    for (double x : {0.0, 0.3, -1.0, 2.5}) {
      EXPECT_NEAR(gamma_b(ks, x, y).value, heat(x, y), 1e-13) << x << " " << y;
    }
  }
}

TEST(Kernel, RealEvenAndSelfSimilar) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const EquationSpec eq = EquationSpec::make(1 + trial % 3, 0.2 + 1.7 * u(rng), u(rng));
    const KernelSpec ks(eq, -0.8 + 1.6 * u(rng));
    for (int i = 0; i < 5; ++i) {
      const double x = 3.0 * u(rng);
      const double y = 0.2 + 2.0 * u(rng);
      const double ref = std::abs(gamma_b(ks, 0.0, y).value) + std::abs(gamma_b(ks, x, y).value);
      EXPECT_LT(std::abs(gamma_b_sum(ks, x, y).imag()), 1e-10 * ref);
      EXPECT_EQ(gamma_b(ks, x, y).value, gamma_b(ks, -x, y).value);
      const double lam = 0.5 + 2.0 * u(rng);
      const double scaled = gamma_b(ks, std::pow(lam, ks.delta()) * x, lam * y).value;
      EXPECT_NEAR(scaled, std::pow(lam, ks.b()) * gamma_b(ks, x, y).value,
                  1e-10 * std::pow(lam, ks.b()) * ref);
    }
  }
}

TEST(Kernel, SignCalibrationAgreesWithAnchor) {
  for (int n : {2, 3}) {
    for (double alpha : {0.5, 1.5}) {
      const EquationSpec eq = EquationSpec::make(n, alpha, 1.0);
      EXPECT_EQ(KernelSpec(eq, kernel_exponent(eq, 0)).sign(), heat_anchor_sign());
    }
  }
  const KernelSpec lit(EquationSpec::make(2, 0.8, 1.0), -0.2, SignConvention::literal);
  EXPECT_EQ(lit.sign(), 1);
}

TEST(Kernel, DerivativeJumpValue) {
  // b + 1 - 3 delta = 0.2; 1/Gamma(0.2) = 0.21782488421166724
  const EquationSpec eq = EquationSpec::make(2, 0.8, 1.0);
  const KernelSpec cal(eq, -0.2);
  const KernelSpec lit(eq, -0.2, SignConvention::literal);
  EXPECT_NEAR(lemma1_jump(cal, 3, 1.0), 0.21782488421166724, 1e-15);
  EXPECT_NEAR(lemma1_jump(lit, 3, 1.0), -0.21782488421166724, 1e-15);
  EXPECT_EQ(lemma1_jump(cal, 0, 1.0), 0.0);
}

TEST(Kernel, DerivativeJumpClosedForm) {
  const EquationSpec eq = EquationSpec::make(2, 0.8, 1.0);
  const KernelSpec ks(eq, kernel_exponent(eq, 0));
  for (int s = 0; s < 4; ++s) {
    const double closed = lemma1_jump(ks, s, 1.0);
    const KernelValue num = one_sided_jump(ks, s, 1.0);
    if (s == 3) {
      ASSERT_NE(closed, 0.0);
      EXPECT_NEAR(num.value / closed, 1.0, 1e-5);
    } else {
      EXPECT_EQ(closed, 0.0);
      EXPECT_LT(std::abs(num.value), 1e-7) << s;
    }
  }
}

TEST(Kernel, SmoothDerivativesMatchDifferences) {
  const KernelSpec ks(EquationSpec::make(2, 0.8, 1.0), -0.2);
  const double x = 0.7;
  const double y = 0.9;
  const double h = 1e-3;
  const double fd = (gamma_b(ks, x + h, y).value - gamma_b(ks, x - h, y).value) / (2 * h);
  EXPECT_NEAR(gamma_b_dx(ks, 1, x, y).value, fd, 1e-6);
}

TEST(KernelTable, MatchesDirectEvaluation) {
  for (double alpha : {0.5, 0.8, 1.5}) {
    const EquationSpec eq = EquationSpec::make(2, alpha, 0.5);
    const KernelSpec ks(eq, kernel_exponent(eq, 0));
    const KernelTable table(ks);
    EXPECT_GT(table.panels(), 0u);
    for (double t = 0.0; t < table.t_max(); t += 0.173) {
      EXPECT_NEAR(table(t), gamma_b(ks, t, 1.0).value, 1e-13 * table.max_abs()) << t;
    }
    EXPECT_EQ(table(table.t_max() * 1.5), 0.0);
    EXPECT_NEAR(table.value(0.4, 0.7), gamma_b(ks, 0.4, 0.7).value,
                1e-12 * table.max_abs() * std::pow(0.7, ks.b()));
  }
}

TEST(KernelTable, EnvelopeDominatesBeyondStart) {
  const EquationSpec eq = EquationSpec::make(2, 0.8, 1.0);
  const KernelSpec ks(eq, kernel_exponent(eq, 0));
  const DecayBound& env = ks.bound();
  for (double t = env.t0(); t < 10.0; t += 0.21) {
    EXPECT_LE(std::abs(gamma_b(ks, t, 1.0).value), env(t)) << t;
  }
}

TEST(TruncationRadius, DiscardedMassBelowTolerance) {
  const EquationSpec eq = EquationSpec::make(2, 0.8, 1.0);
  const KernelSpec ks(eq, kernel_exponent(eq, 0));
  const double y = 0.6;
  const double R = truncation_radius(ks, y, 1e-10);
  double tail = 0.0;
  const double h = 0.01;
  for (double x = R; x < R + 40.0; x += h) tail += 2.0 * std::abs(gamma_b(ks, x, y).value) * h;
  EXPECT_LT(tail, 1e-10);
  EXPECT_GT(R, 0.0);
}

}  // namespace
}  // namespace hilfer
