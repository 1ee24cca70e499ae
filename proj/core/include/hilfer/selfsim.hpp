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

// Self-similar solutions of x^m D_y^{a1,b1} u - d y^k D_x^{a2,b2} u = 0,
//   u_j = y^b t^{gamma_j} sum_n c_n t^n,  t = x^{m+a2} y^{-a1-k}.

#pragma once

#include <vector>

#include "hilfer/fracops.hpp"
#include "hilfer/specfun.hpp"

namespace hilfer {

struct SimilarityExponents {
  double a = 0.0;      // m + alpha2
  double y_exp = 0.0;  // -alpha1 - k
  std::vector<double> gamma;  // gamma_j = (alpha2 - j)/(alpha2 + m), j = 1..p
  double b = 0.0;
};

SimilarityExponents similarity_exponents(const GeneralEquationSpec& g, double b);

struct CoefficientTable {
  int j = 1;
  double c0 = 1.0;
  std::vector<double> c;
  // log|c_n| and sign, kept so that tiny or huge coefficients stay usable
  std::vector<double> log_abs;
  std::vector<int> sign;

  // Half the smallest |c_{n-1}/c_n| over the upper half of the table;
  // infinite when the series terminates.
  double validated_radius() const;
};

// Iterates the one-step gamma-ratio recurrence up to c_N. Throws
// std::domain_error naming l when a numerator gamma hits a pole.
CoefficientTable coefficients(const GeneralEquationSpec& g, const SimilarityExponents& e,
                              int j, int N, double c0 = 1.0);

// c_n from the closed product, accumulated independently of the recurrence.
double coefficient_product(const GeneralEquationSpec& g, const SimilarityExponents& e,
                           int j, int n, double c0 = 1.0);

double similarity_variable(const SimilarityExponents& e, double x, double y);

struct SelfSimValue {
  double value = 0.0;
  double err = 0.0;  // last-term magnitude plus rounding
};

// Throws std::domain_error when t lies beyond the validated radius.
SelfSimValue eval_selfsimilar(const GeneralEquationSpec& g, const SimilarityExponents& e,
                              const CoefficientTable& table, double x, double y);

// m = k = 0: u_j = y^b t^{gamma_j} W_{(-a1, -a1 + a1 j/a2 + b + 1),(a2, a2 - j + 1)}(d t)
// with c0 = 1 / (Gamma(-a1(1 - j/a2) + b + 1) Gamma(a2 - j + 1)).
double case1_c0(const GeneralEquationSpec& g, int j, double b);
SelfSimValue eval_case1(const GeneralEquationSpec& g, int j, double b, double x, double y);

// Residual of the truncated series, termwise through the power rule
// D^alpha z^c = Gamma(c+1)/Gamma(c+1-alpha) z^(c-alpha) (analytic continuation
// in c, so it also covers terms whose fractional integrals diverge at 0).
// Normalized by max(1, |x^m D_y u|).
double selfsim_residual(const GeneralEquationSpec& g, const SimilarityExponents& e,
                        const CoefficientTable& table, double x, double y);

// y^b phi(-alpha/p, b+1; c x y^(-alpha/p)) with c^p = d, a solution of
// D_y^{alpha,beta} u - d d^p_x u = 0.
cplx eval_wright_case(int p, double alpha, double b, cplx c_root, int d, double x, double y);

// Same with the Wright coefficients built once.
class WrightCase {
 public:
  WrightCase(int p, double alpha, double b, cplx c_root, int d);
  cplx operator()(double x, double y) const;

 private:
  double b_;
  double delta_;
  cplx c_;
  WrightFunction phi_;
};

}  // namespace hilfer
