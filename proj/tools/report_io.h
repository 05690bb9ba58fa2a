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

#ifndef APK_TOOLS_REPORT_IO_H_
#define APK_TOOLS_REPORT_IO_H_

#include <ostream>
#include <string>

#include "apk/baseline.h"
#include "apk/evaluation.h"
#include "apk/exact_oracle.h"
#include "apk/stochastic.h"
#include "json.hpp"

namespace apk::tools {

// Shortest text that parses back to the same double.
std::string format_exact(double value);
// Six significant digits, for screen output.
std::string format_screen(double value);

// Header `bin_lo,bin_hi,count`, LF line endings.
void write_histogram_csv(std::ostream& out, const HistogramData& hist);
// Header `ap_value,probability`.
void write_distribution_csv(std::ostream& out, const ExactDistribution& dist);

nlohmann::json to_json(const EvaluationReport& report);
// Inverse of to_json. Throws nlohmann::json::exception on missing fields.
EvaluationReport report_from_json(const nlohmann::json& j);

}  // namespace apk::tools

#endif  // APK_TOOLS_REPORT_IO_H_
