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

#include <functional>
#include <vector>

namespace hilfer::detail {

struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on [-1,1]; cached.
const GaussRule& gauss_jacobi(int n, double a, double b);
inline const GaussRule& gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

struct QuadResult {
  double value = 0.0;
  double err = 0.0;
  double l1 = 0.0;
  bool ok = true;
};

// Adaptive Gauss-Kronrod (21 points) on [a,b], relative tolerance tol.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double tol, unsigned max_depth = 18);

// Globally adaptive Gauss-Kronrod (21 points) over the panels given by
// `breaks`; the worst panel is bisected until err <= max(rel_tol * l1, abs_tol).
QuadResult integrate_panels(const std::function<double(double)>& f,
                            const std::vector<double>& breaks, double rel_tol,
                            double abs_tol, int max_segments = 4000);

}  // namespace hilfer::detail
