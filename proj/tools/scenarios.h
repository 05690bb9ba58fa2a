// Copyright 2026 The apk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef APK_TOOLS_SCENARIOS_H_
#define APK_TOOLS_SCENARIOS_H_

#include <array>
#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace apk::tools {

// Expected values in column order: WOR mean, WR mean, WOR variance,
// WR variance.
using ScenarioValues = std::array<double, 4>;

inline constexpr std::array<const char*, 4> kScenarioColumns = {
    "wor_mean", "wr_mean", "wor_variance", "wr_variance"};

// One paired comparison: WOR{N, m} against WR{p = m/N} at cutoff k.
struct ScenarioConfig {
  std::string label;
  std::size_t total = 0;
  std::size_t relevant = 0;
  double p = 0.0;
  std::size_t k = 0;
  std::optional<ScenarioValues> expected;
};

inline constexpr double kScenarioCheckTolerance = 1e-5;

// Built-in grid A1..D (N = 50) with its published five-decimal reference
// values.
std::vector<ScenarioConfig> default_scenarios();

// Line format: `label N m p k [wor_mean wr_mean wor_var wr_var]`. Blank lines
// and lines starting with '#' are skipped. Throws ParseError or
// ValidationError (p must equal m/N, k <= N).
std::vector<ScenarioConfig> parse_scenarios(std::istream& in,
                                            const std::string& source);

ScenarioValues compute_scenario(const ScenarioConfig& config);

}  // namespace apk::tools

#endif  // APK_TOOLS_SCENARIOS_H_
