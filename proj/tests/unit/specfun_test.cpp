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
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hilfer/specfun.hpp"
#include "mp_oracle.hpp"

namespace hilfer {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<std::vector<double>> load(const std::string& name) {
  std::ifstream in(std::string(HILFER_FIXTURE_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<double> r;
    double v;
    while (ls >> v) r.push_back(v);
    rows.push_back(r);
  }
  return rows;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

TEST(RecipGamma, PolesAreExactZeros) {
  for (int k = 0; k <= 20; ++k) EXPECT_EQ(recip_gamma(-k), 0.0) << k;
  EXPECT_TRUE(is_gamma_pole(-3.0));
  EXPECT_FALSE(is_gamma_pole(-2.5));
}

TEST(RecipGamma, MatchesStdTgamma) {
  EXPECT_NEAR(recip_gamma(0.5), 1.0 / std::sqrt(kPi), 1e-16);
  EXPECT_DOUBLE_EQ(recip_gamma(5.0), 1.0 / 24.0);
  for (double x : {-4.5, -1.3, -0.2, 0.1, 1.7, 9.25, 40.5}) {
    EXPECT_NEAR(recip_gamma(x) * std::tgamma(x), 1.0, 1e-14) << x;
  }
  EXPECT_GT(recip_gamma(170.5), 0.0);
  EXPECT_EQ(recip_gamma(200.0), 0.0);  // underflows
}

TEST(LogGamma, SignAlternatesOnNegativeAxis) {
  EXPECT_EQ(log_gamma(-0.5).sign, -1);
  EXPECT_EQ(log_gamma(-1.5).sign, 1);
  EXPECT_EQ(log_gamma(-2.0).sign, 0);
  EXPECT_NEAR(log_gamma(10.5).log_abs, std::lgamma(10.5), 1e-13);
}

TEST(Wright, GaussianIdentity) {
  const WrightFunction phi(0.5, 0.5);
  for (int i = 0; i <= 50; ++i) {
    const double z = 0.1 * i;
    const SeriesValue v = phi(cplx(-z, 0.0));
    EXPECT_TRUE(v.converged());
    EXPECT_NEAR(v.value.real(), std::exp(-z * z / 4.0) / std::sqrt(kPi), 1e-13) << z;
    EXPECT_NEAR(v.value.imag(), 0.0, 1e-15);
  }
}

TEST(Wright, ValueAtZeroIsRecipGamma) {
  for (double eps : {-0.5, 0.3, 1.0, 2.5}) {
    EXPECT_EQ(wright_phi({0.4, eps}, cplx(0.0, 0.0), 1e-14).value.real(), recip_gamma(eps));
  }
}

TEST(Wright, Fixtures) {
  const auto rows = load("wright.txt");
  ASSERT_GE(rows.size(), 10u);
  for (const auto& r : rows) {
    const WrightFunction phi(r[0], r[1]);
    const cplx want(r[4], r[5]);
    const SeriesValue v = phi(cplx(r[2], r[3]));
    EXPECT_LT(rel(v.value, want), 1e-12) << r[0] << " " << r[1] << " " << r[2] << " " << r[3];
    EXPECT_LE(std::abs(v.value - want), v.err_bound + 1e-15 * std::abs(want));
  }
}

TEST(Wright, ContourAgainstOracle) {
  using hilfer_oracle::mp;
  for (const char* d : {"0.125", "0.25", "0.5"}) {
    const double delta = std::stod(d);
    for (double r : {0.5, 1.5, 3.0}) {
      const cplx z = std::polar(r, kPi - 0.3);
      ASSERT_TRUE(wright_contour_applicable(delta, z));
      const auto o = hilfer_oracle::wright(mp(d), mp("0.8"), {mp(z.real()), mp(z.imag())});
      const cplx want(static_cast<double>(o.re), static_cast<double>(o.im));
      const SeriesValue c = wright_phi_contour({delta, 0.8}, z);
      EXPECT_LT(std::abs(c.value - want), 1e-14) << delta << " " << r;
      const SeriesValue s = wright_phi({delta, 0.8}, z, 1e-12);
      if (s.converged()) EXPECT_LE(std::abs(s.value - want), s.err_bound + 1e-16);
    }
  }
}

TEST(Wright, UnconvergedSeriesReportsBound) {
  const SeriesValue s = wright_phi({0.125, 0.8}, cplx(-3.0, 0.0), 1e-15);
  if (!s.converged()) EXPECT_GT(s.err_bound, 0.0);
}

TEST(Wright, ContourHandlesLargeArguments) {
  // phi(-1/2, 1/2; -z) stays Gaussian where the series cancels catastrophically
  const WrightFunction phi(0.5, 0.5);
  for (double z : {12.0, 20.0, 30.0}) {
    const double want = std::exp(-z * z / 4.0) / std::sqrt(kPi);
    EXPECT_NEAR(phi(cplx(-z, 0.0)).value.real() / want, 1.0, 1e-10) << z;
  }
}

TEST(Wright, RejectsBadTolerance) {
  EXPECT_THROW(wright_phi({0.5, 0.5}, cplx(1.0, 0.0), 0.0), std::invalid_argument);
}

TEST(GenWright, Fixtures) {
  const auto rows = load("gen_wright.txt");
  ASSERT_GE(rows.size(), 4u);
  for (const auto& r : rows) {
    const SeriesValue v = gen_wright({r[0], r[1], r[2], r[3]}, cplx(r[4], r[5]), 1e-13);
    EXPECT_TRUE(v.converged());
    EXPECT_LT(rel(v.value, cplx(r[6], r[7])), 1e-12);
  }
}

TEST(GenWright, ReducesToExponentialTimesBessel) {
  // sum z^n / (n! n!) = I_0(2 sqrt z)
  for (double z : {0.25, 1.0, 4.0}) {
    const SeriesValue v = gen_wright({1.0, 1.0, 1.0, 1.0}, cplx(z, 0.0), 1e-14);
    EXPECT_NEAR(v.value.real(), std::cyl_bessel_i(0.0, 2.0 * std::sqrt(z)), 1e-13 * v.value.real());
  }
}

TEST(MittagLeffler, Fixtures) {
  const auto rows = load("mittag_leffler.txt");
  ASSERT_GE(rows.size(), 5u);
  for (const auto& r : rows) {
    const SeriesValue v = mittag_leffler(r[0], cplx(r[1], r[2]), 1e-13);
    EXPECT_TRUE(v.converged()) << r[0] << " " << r[1];
    EXPECT_LT(rel(v.value, cplx(r[3], r[4])), 1e-12) << r[0] << " " << r[1];
  }
}

TEST(MittagLeffler, ElementaryCases) {
  for (double x : {-3.0, -0.5, 0.7, 2.0}) {
    EXPECT_NEAR(mittag_leffler(1.0, cplx(x, 0.0), 1e-12).value.real(), std::exp(x),
                1e-12 * std::max(1.0, std::exp(x)));
    EXPECT_NEAR(mittag_leffler(2.0, cplx(-x * x, 0.0), 1e-12).value.real(), std::cos(x), 1e-12);
  }
  for (double x : {0.5, 2.0, 5.0, 12.0}) {
    // E_{1/2}(-x) = e^{x^2} erfc(x)
    const double want = std::exp(x * x) * std::erfc(x);
    EXPECT_NEAR(mittag_leffler(0.5, cplx(-x, 0.0), 1e-13).value.real(), want, 1e-13 * want) << x;
  }
}

TEST(MittagLeffler, LargeNegativeArgumentsAgainstOracle) {
  using hilfer_oracle::mp;
  for (double x : {10.0, 25.0, 60.0}) {
    const double want =
        static_cast<double>(hilfer_oracle::mittag_leffler(mp("0.8"), {mp(-x), mp(0)}).re);
    const SeriesValue v = mittag_leffler(0.8, cplx(-x, 0.0), 1e-12);
    EXPECT_TRUE(v.converged()) << x;
    EXPECT_NEAR(v.value.real(), want, 1e-13 * want) << x;
  }
}

TEST(MittagLeffler, OutsideSafeRadiusReturnsBound) {
  const SeriesValue v = mittag_leffler(1.5, cplx(-40.0, 0.0), 1e-12);
  EXPECT_FALSE(v.converged());
  EXPECT_THROW(mittag_leffler(2.5, cplx(1.0, 0.0), 1e-12), std::invalid_argument);
}

TEST(DecayBound, DominatesWrightKernelProfile) {
  // |phi(-delta, b+1; -t)| for n = 1 is within the envelope past t0
  const DecayBound env(1, 1.0, -0.5);
  const WrightFunction phi(0.5, 0.5);
  for (double t = env.t0(); t < 12.0; t += 0.37) {
    EXPECT_LE(std::abs(phi(cplx(-t, 0.0)).value), env(t)) << t;
  }
  EXPECT_GT(decay_sigma(2, 0.8), 0.0);
}

}  // namespace
}  // namespace hilfer
