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

#include "report_io.h"

#include <array>
#include <charconv>

namespace apk::tools {

std::string format_exact(double value) {
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::string format_screen(double value) {
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 6);
  return std::string(buf.data(), res.ptr);
}

void write_histogram_csv(std::ostream& out, const HistogramData& hist) {
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t b = 0; b < hist.counts.size(); ++b) {
    out << format_exact(hist.bin_edges[b]) << ','
        << format_exact(hist.bin_edges[b + 1]) << ',' << hist.counts[b]
        << '\n';
  }
}

void write_distribution_csv(std::ostream& out, const ExactDistribution& dist) {
  out << "ap_value,probability\n";
  for (const auto& s : dist.support) {
    out << format_exact(s.ap_value) << ',' << format_exact(s.probability)
        << '\n';
  }
}

nlohmann::json to_json(const EvaluationReport& r) {
  nlohmann::json j;
  j["per_user_ap"] = r.per_user_ap;
  j["map_at_k"] = r.map_at_k;
  j["baseline_mean"] = r.baseline_mean;
  j["baseline_variance_of_map"] = r.baseline_variance_of_map;
  j["z_score"] = r.z_score ? nlohmann::json(*r.z_score) : nlohmann::json();
  j["model_used"] = r.model_used;
  j["pooled_p"] = r.pooled_p ? nlohmann::json(*r.pooled_p) : nlohmann::json();
  j["k"] = r.k;
  j["norm"] = std::string(to_string(r.norm));
  j["user_count"] = r.user_count;
  j["warnings"] = r.warnings;
  return j;
}

EvaluationReport report_from_json(const nlohmann::json& j) {
  EvaluationReport r;
  r.per_user_ap = j.at("per_user_ap").get<std::map<std::string, double>>();
  r.map_at_k = j.at("map_at_k").get<double>();
  r.baseline_mean = j.at("baseline_mean").get<double>();
  r.baseline_variance_of_map = j.at("baseline_variance_of_map").get<double>();
  if (!j.at("z_score").is_null()) r.z_score = j.at("z_score").get<double>();
  r.model_used = j.at("model_used").get<std::string>();
  if (!j.at("pooled_p").is_null()) r.pooled_p = j.at("pooled_p").get<double>();
  r.k = j.at("k").get<std::size_t>();
  r.norm = parse_normalization(j.at("norm").get<std::string>());
  r.user_count = j.at("user_count").get<std::size_t>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

}  // namespace apk::tools
