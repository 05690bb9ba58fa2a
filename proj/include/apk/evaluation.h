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

#ifndef APK_EVALUATION_H_
#define APK_EVALUATION_H_

// Run/qrels ingestion and scoring of observed MAP@k against the chance
// baseline of a random ranking.

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "apk/metric.h"
#include "apk/model.h"

namespace apk {

// Query id -> document ids in ranking order.
struct RankedRun {
  std::map<std::string, std::vector<std::string>> queries;
};

// Query id -> ids of relevant documents. Judged queries with no relevant
// document are kept with an empty set.
struct JudgmentSet {
  std::map<std::string, std::set<std::string>> relevant;
  std::vector<std::string> warnings;
};

// Six whitespace-separated columns per row: `qid Q0 docid rank score tag`.
// Rows are ordered by ascending rank, then descending score, then docid.
// Throws ParseError (with line number) or ValidationError on a duplicate
// (qid, docid).
RankedRun parse_run(std::istream& in, const std::string& source = "<run>");
RankedRun parse_run(const std::filesystem::path& path);

// Four columns per row: `qid 0 docid rel`. rel >= 1 is relevant; rel > 1 is
// coerced to 1 with a warning.
JudgmentSet parse_qrels(std::istream& in, const std::string& source = "<qrels>");
JudgmentSet parse_qrels(const std::filesystem::path& path);

// Per-user WOR{N, m_u}, m_u being the user's judged relevant count.
struct AutoWor {
  std::size_t total = 0;
};
// WR{p_hat}, p_hat = relevant hits in the top k over k * users.
struct AutoWr {};

using BaselineChoice = std::variant<AutoWor, AutoWr, ModelSpec>;

struct EvaluationReport {
  std::map<std::string, double> per_user_ap;
  double map_at_k = 0.0;
  double baseline_mean = 0.0;
  double baseline_variance_of_map = 0.0;
  std::optional<double> z_score;  // absent when the null variance is 0
  std::string model_used;
  std::optional<double> pooled_p;  // set for AutoWr
  std::size_t k = 0;
  NormalizationMode norm = NormalizationMode::kByMinMK;
  std::size_t user_count = 0;
  std::vector<std::string> warnings;
};

// Relevance vector of one ranked list: membership of each ranked doc, then
// one trailing 1 per judged-relevant document missing from the list, so
// kByMinMK sees the query's full relevant count.
RelevanceVector relevance_of(const std::vector<std::string>& ranked,
                             const std::set<std::string>& relevant);

// Throws ValidationError when the run is empty, a query ranks fewer than k
// documents, a run query is unjudged, or AutoWor sees m > N.
EvaluationReport evaluate(const RankedRun& run, const JudgmentSet& judgments,
                          std::size_t k, NormalizationMode norm,
                          const BaselineChoice& baseline_model);

}  // namespace apk

#endif  // APK_EVALUATION_H_
