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

// Initial-data presets and tabulated data files.

#pragma once

#include <string>
#include <vector>

#include "hilfer/cauchy.hpp"

namespace hilfer::cli {

struct RunConfig;

struct DataSource {
  RealFunction f;
  double sup = 0.0;  // bound on |f|
};

// gaussian: e^{-x^2}; bump: e^{-1/(1-x^2)} on |x| < 1; poly-decay: 1/(1+x^2);
// zero. Anything else is read as a two-column table file (x value), linearly
// interpolated and zero outside its range.
DataSource make_data(const std::string& name);

const std::vector<std::string>& preset_names();

// Data for the s_count functions of eq with the configured or derived growth
// certificate; throws std::invalid_argument when N >= sigma.
InitialData make_initial_data(const RunConfig& cfg, const EquationSpec& eq);

}  // namespace hilfer::cli
