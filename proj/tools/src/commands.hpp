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

#include <iosfwd>
#include <string>

#include "config.hpp"
#include "json.hpp"

namespace hilfer::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumeric = 3 };

// CSV rows `x,y,value,err` in grid order (y outer, x inner).
int run_eval_kernel(const RunConfig& cfg, std::ostream& csv);
int run_solve(const RunConfig& cfg, std::ostream& csv, nlohmann::json& summary);
int run_selfsim(const RunConfig& cfg, std::ostream& csv);
int run_verify(const RunConfig& cfg, nlohmann::json& report);

// Embedded copies of tests/fixtures.
extern const char* const kWrightFixtures;
extern const char* const kGenWrightFixtures;
extern const char* const kMittagLefflerFixtures;

}  // namespace hilfer::cli
