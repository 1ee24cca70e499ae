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

#include "data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "config.hpp"

namespace hilfer::cli {

namespace {

struct Table {
  std::vector<double> x;
  std::vector<double> v;

  double operator()(double t) const {
    if (t < x.front() || t > x.back()) return 0.0;
    const auto it = std::upper_bound(x.begin(), x.end(), t);
    if (it == x.end()) return v.back();
    const std::size_t i = static_cast<std::size_t>(it - x.begin());
    const double w = (t - x[i - 1]) / (x[i] - x[i - 1]);
    return (1.0 - w) * v[i - 1] + w * v[i];
  }
};

DataSource load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("data '" + path +
                                "' is neither a preset (gaussian, bump, poly-decay, zero) "
                                "nor a readable table file");
  }
  auto t = std::make_shared<Table>();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double a = 0.0;
    double b = 0.0;
    if (!(ls >> a)) continue;
    if (!(ls >> b) || !std::isfinite(a) || !std::isfinite(b)) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected two numbers");
    }
    if (!t->x.empty() && !(a > t->x.back())) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": x values must increase strictly");
    }
    t->x.push_back(a);
    t->v.push_back(b);
  }
  if (t->x.size() < 2) throw std::invalid_argument(path + ": table needs at least two rows");
  DataSource ds;
  for (double v : t->v) ds.sup = std::max(ds.sup, std::abs(v));
  ds.f = [t](double x) { return (*t)(x); };
  return ds;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"gaussian", "bump", "poly-decay", "zero"};
  return names;
}

DataSource make_data(const std::string& name) {
  if (name == "gaussian") return {[](double x) { return std::exp(-x * x); }, 1.0};
  if (name == "bump") {
    return {[](double x) { return std::abs(x) < 1.0 ? std::exp(-1.0 / (1.0 - x * x)) : 0.0; },
            std::exp(-1.0)};
  }
  if (name == "poly-decay") return {[](double x) { return 1.0 / (1.0 + x * x); }, 1.0};
  if (name == "zero") return {[](double) { return 0.0; }, 0.0};
  return load_table(name);
}

InitialData make_initial_data(const RunConfig& cfg, const EquationSpec& eq) {
  InitialData data;
  double sup = 0.0;
  for (int k = 0; k < eq.s_count; ++k) {
    DataSource ds = make_data(k == 0 ? cfg.data0 : cfg.data1);
    sup = std::max(sup, ds.sup);
    data.funcs.push_back(std::move(ds.f));
  }
  data.growth_M = cfg.growth_M ? *cfg.growth_M : std::max(sup, 1e-300);
  data.growth_N = cfg.growth_N ? *cfg.growth_N : 0.0;
  validate_data(eq, data);
  return data;
}

}  // namespace hilfer::cli
