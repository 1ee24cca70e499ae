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

#include "quadrature.hpp"

#include "numeric.hpp"

#include <cmath>
#include <algorithm>
#include <map>
#include <queue>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace hilfer::detail {

namespace {

GaussRule golub_welsch(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("rule size must be positive");
  if (!(a > -1.0 && b > -1.0)) {
    throw std::invalid_argument("Jacobi exponents must exceed -1");
  }
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double beta;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(beta);
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                              std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  if (n == 1) {
    rule.x[0] = diag(0);
    rule.w[0] = mu0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("Gauss-Jacobi eigen-decomposition failed");
  }
  for (int i = 0; i < n; ++i) {
    rule.x[i] = es.eigenvalues()(i);
    const double v = es.eigenvectors()(0, i);
    rule.w[i] = mu0 * v * v;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_jacobi(int n, double a, double b) {
  static std::mutex mu;
  static std::map<std::tuple<int, double, double>, GaussRule> cache;
  const auto key = std::make_tuple(n, a, b);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, golub_welsch(n, a, b)).first;
  return it->second;  // std::map nodes are stable
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double tol, unsigned max_depth) {
  if (a == b) return QuadResult{};
  if (b < a) {
    QuadResult r = integrate_adaptive(f, b, a, tol, max_depth);
    r.value = -r.value;
    return r;
  }
  const int segments = 1 << std::min(max_depth, 16u);
  return integrate_panels(f, {a, b}, tol, 0.0, segments);
}

QuadResult integrate_panels(const std::function<double(double)>& f,
                            const std::vector<double>& breaks, double rel_tol,
                            double abs_tol, int max_segments) {
  struct Segment {
    double a, b, value, err, l1;
    bool operator<(const Segment& o) const { return err < o.err; }
  };
  using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
  auto eval = [&](double a, double b) {
    double err = 0.0;
    double l1 = 0.0;
    const double v = GK::integrate(f, a, b, 0, 0.0, &err, &l1);
    // boost reports the error of the rule mapped to [-1, 1]
    return Segment{a, b, v, err * 0.5 * (b - a), l1};
  };
  std::priority_queue<Segment> queue;
  double value = 0.0;
  double err = 0.0;
  double l1 = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    Segment s = eval(breaks[i], breaks[i + 1]);
    value += s.value;
    err += s.err;
    l1 += s.l1;
    queue.push(s);
  }
  int count = static_cast<int>(queue.size());
  while (!queue.empty() && err > std::max(rel_tol * l1, abs_tol) &&
         count < max_segments) {
    const Segment s = queue.top();
    queue.pop();
    const double mid = 0.5 * (s.a + s.b);
    if (!(mid > s.a && mid < s.b)) break;
    const Segment lo = eval(s.a, mid);
    const Segment hi = eval(mid, s.b);
    value += lo.value + hi.value - s.value;
    err += lo.err + hi.err - s.err;
    l1 += lo.l1 + hi.l1 - s.l1;
    queue.push(lo);
    queue.push(hi);
    ++count;
  }
  // re-add in a fixed order to shed incremental rounding
  QuadResult r;
  std::vector<Segment> segs;
  while (!queue.empty()) {
    segs.push_back(queue.top());
    queue.pop();
  }
  std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  CompensatedSum v;
  CompensatedSum e;
  CompensatedSum m;
  for (const Segment& s : segs) {
    v.add(s.value);
    e.add(s.err);
    m.add(s.l1);
  }
  r.value = v.value();
  r.err = e.value() + 1e-16 * m.value() * static_cast<double>(segs.size());
  r.l1 = m.value();
  r.ok = std::isfinite(r.value) && r.err <= 10.0 * std::max(rel_tol * r.l1, abs_tol);
  return r;
}

}  // namespace hilfer::detail
