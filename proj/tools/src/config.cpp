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

#include "config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "data.hpp"

namespace hilfer::cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(x)) {
    throw ParseError(key + ": expected a finite number, got '" + v + "'");
  }
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  char* end = nullptr;
  errno = 0;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0' || errno == ERANGE || x < -1000000000L ||
      x > 1000000000L) {
    throw ParseError(key + ": expected an integer, got '" + v + "'");
  }
  return static_cast<int>(x);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  auto dbl = [](double RunConfig::*f) {
    return Setter([f](RunConfig& c, const std::string& k, const std::string& v) {
      c.*f = to_double(k, v);
    });
  };
  auto gdbl = [](double Grid::*f) {
    return Setter([f](RunConfig& c, const std::string& k, const std::string& v) {
      c.grid.*f = to_double(k, v);
    });
  };
  auto integer = [](int RunConfig::*f) {
    return Setter([f](RunConfig& c, const std::string& k, const std::string& v) {
      c.*f = to_int(k, v);
    });
  };
  auto gint = [](int Grid::*f) {
    return Setter([f](RunConfig& c, const std::string& k, const std::string& v) {
      c.grid.*f = to_int(k, v);
    });
  };
  auto text = [](std::string RunConfig::*f) {
    return Setter([f](RunConfig& c, const std::string&, const std::string& v) { c.*f = v; });
  };
  auto opt = [](std::optional<double> RunConfig::*f) {
    return Setter([f](RunConfig& c, const std::string& k, const std::string& v) {
      c.*f = to_double(k, v);
    });
  };
  static const std::map<std::string, Setter> table = {
      {"n", integer(&RunConfig::n)},
      {"alpha", dbl(&RunConfig::alpha)},
      {"beta", dbl(&RunConfig::beta)},
      {"m", dbl(&RunConfig::m)},
      {"k", dbl(&RunConfig::k)},
      {"alpha1", dbl(&RunConfig::alpha1)},
      {"beta1", dbl(&RunConfig::beta1)},
      {"alpha2", dbl(&RunConfig::alpha2)},
      {"beta2", dbl(&RunConfig::beta2)},
      {"d", integer(&RunConfig::d)},
      {"branch", integer(&RunConfig::branch)},
      {"terms", integer(&RunConfig::terms)},
      {"c0", dbl(&RunConfig::c0)},
      {"selfsim_form", text(&RunConfig::selfsim_form)},
      {"b", opt(&RunConfig::b)},
      {"kernel_index", integer(&RunConfig::kernel_index)},
      {"x_min", gdbl(&Grid::x_min)},
      {"x_max", gdbl(&Grid::x_max)},
      {"x_steps", gint(&Grid::x_steps)},
      {"y_min", gdbl(&Grid::y_min)},
      {"y_max", gdbl(&Grid::y_max)},
      {"y_steps", gint(&Grid::y_steps)},
      {"tol", dbl(&RunConfig::tol)},
      {"data0", text(&RunConfig::data0)},
      {"data1", text(&RunConfig::data1)},
      {"growth_M", opt(&RunConfig::growth_M)},
      {"growth_N", opt(&RunConfig::growth_N)},
      {"threads", integer(&RunConfig::threads)},
      {"output", text(&RunConfig::output)},
      {"report", text(&RunConfig::report)},
  };
  return table;
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::eval_kernel: return "eval-kernel";
    case Command::solve: return "solve";
    case Command::selfsim: return "selfsim";
    case Command::verify: return "verify";
  }
  return "?";
}

RunConfig parse_config(const std::string& text, Command command) {
  RunConfig cfg;
  cfg.command = command;
  std::istringstream in(text);
  std::string line;
  std::set<std::string> seen;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    if (value.empty() && key != "output" && key != "report") {
      throw ParseError("line " + std::to_string(lineno) + ": empty value for '" + key + "'");
    }
    try {
      it->second(cfg, key, value);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  validate(cfg);
  return cfg;
}

std::string to_config_text(const RunConfig& c) {
  std::ostringstream o;
  o << "n = " << c.n << "\n"
    << "alpha = " << fmt(c.alpha) << "\n"
    << "beta = " << fmt(c.beta) << "\n"
    << "m = " << fmt(c.m) << "\n"
    << "k = " << fmt(c.k) << "\n"
    << "alpha1 = " << fmt(c.alpha1) << "\n"
    << "beta1 = " << fmt(c.beta1) << "\n"
    << "alpha2 = " << fmt(c.alpha2) << "\n"
    << "beta2 = " << fmt(c.beta2) << "\n"
    << "d = " << c.d << "\n"
    << "branch = " << c.branch << "\n"
    << "terms = " << c.terms << "\n"
    << "c0 = " << fmt(c.c0) << "\n"
    << "selfsim_form = " << c.selfsim_form << "\n";
  if (c.b) o << "b = " << fmt(*c.b) << "\n";
  o << "kernel_index = " << c.kernel_index << "\n"
    << "x_min = " << fmt(c.grid.x_min) << "\n"
    << "x_max = " << fmt(c.grid.x_max) << "\n"
    << "x_steps = " << c.grid.x_steps << "\n"
    << "y_min = " << fmt(c.grid.y_min) << "\n"
    << "y_max = " << fmt(c.grid.y_max) << "\n"
    << "y_steps = " << c.grid.y_steps << "\n"
    << "tol = " << fmt(c.tol) << "\n"
    << "data0 = " << c.data0 << "\n"
    << "data1 = " << c.data1 << "\n";
  if (c.growth_M) o << "growth_M = " << fmt(*c.growth_M) << "\n";
  if (c.growth_N) o << "growth_N = " << fmt(*c.growth_N) << "\n";
  o << "threads = " << c.threads << "\n"
    << "output = " << c.output << "\n"
    << "report = " << c.report << "\n";
  return o.str();
}

EquationSpec equation(const RunConfig& c) { return EquationSpec::make(c.n, c.alpha, c.beta); }

GeneralEquationSpec general_equation(const RunConfig& c) {
  return GeneralEquationSpec::make(c.m, c.k, c.alpha1, c.beta1, c.alpha2, c.beta2, c.d);
}

void validate(const RunConfig& c) {
  auto fail = [](const std::string& msg) { throw ParseError(msg); };
  if (!(c.tol > 0.0)) fail("tol must be positive");
  if (c.threads < 1 || c.threads > 256) fail("threads must lie in [1, 256]");
  try {
    c.grid.validate();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  if (c.command == Command::selfsim) {
    try {
      const GeneralEquationSpec g = general_equation(c);
      if (c.branch < 1 || c.branch > g.p) {
        fail("branch must lie in [1, p] with p = " + std::to_string(g.p));
      }
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    if (c.terms < 0 || c.terms > 2000) fail("terms must lie in [0, 2000]");
    if (!(c.grid.x_min > 0.0)) fail("self-similar evaluation needs x_min > 0");
    if (c.selfsim_form != "series" && c.selfsim_form != "wright") {
      fail("selfsim_form must be 'series' or 'wright'");
    }
    if (c.selfsim_form == "wright" && (c.m != 0.0 || c.k != 0.0)) {
      fail("selfsim_form = wright requires m = k = 0");
    }
    return;
  }
  EquationSpec eq;
  try {
    eq = equation(c);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  if (c.kernel_index < 0 || c.kernel_index >= eq.s_count) {
    fail("kernel_index must lie in [0, " + std::to_string(eq.s_count - 1) + "]");
  }
  if (c.growth_M && !(*c.growth_M > 0.0)) fail("growth_M must be positive");
  if (c.growth_N && !(*c.growth_N >= 0.0)) fail("growth_N must be >= 0");
  if (c.command == Command::solve) {
    try {
      (void)make_initial_data(c, eq);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
}

}  // namespace hilfer::cli
