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

#include "apk/evaluation.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include "apk/baseline.h"
#include "apk/errors.h"

namespace apk {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

// Calls row(fields, line_number) for every non-blank line.
template <typename Row>
void for_each_row(std::istream& in, Row row) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    row(fields, line_no);
  }
}

struct RunRow {
  std::string doc;
  long long rank;
  double score;
};

}  // namespace

RankedRun parse_run(std::istream& in, const std::string& source) {
  std::map<std::string, std::vector<RunRow>> rows;
  std::map<std::string, std::set<std::string>> seen;
  for_each_row(in, [&](const std::vector<std::string_view>& f,
                       std::size_t line) {
    if (f.size() != 6) {
      throw ParseError(source, line,
                       "expected 6 columns (qid Q0 docid rank score tag), got " +
                           std::to_string(f.size()));
    }
    RunRow row{std::string(f[2]), 0, 0.0};
    if (!parse_number(f[3], row.rank)) {
      throw ParseError(source, line, "rank is not an integer");
    }
    if (!parse_number(f[4], row.score) || !std::isfinite(row.score)) {
      throw ParseError(source, line, "score is not a finite number");
    }
    std::string qid(f[0]);
    if (!seen[qid].insert(row.doc).second) {
      throw ValidationError(source + ":" + std::to_string(line) +
                            ": duplicate document '" + row.doc +
                            "' for query '" + qid + "'");
    }
    rows[qid].push_back(std::move(row));
  });

  RankedRun run;
  for (auto& [qid, list] : rows) {
    std::sort(list.begin(), list.end(), [](const RunRow& a, const RunRow& b) {
      if (a.rank != b.rank) return a.rank < b.rank;
      if (a.score != b.score) return a.score > b.score;
      return a.doc < b.doc;
    });
    auto& docs = run.queries[qid];
    docs.reserve(list.size());
    for (auto& r : list) docs.push_back(std::move(r.doc));
  }
  return run;
}

RankedRun parse_run(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_run(in, path.string());
}

JudgmentSet parse_qrels(std::istream& in, const std::string& source) {
  JudgmentSet out;
  for_each_row(in, [&](const std::vector<std::string_view>& f,
                       std::size_t line) {
    if (f.size() != 4) {
      throw ParseError(source, line,
                       "expected 4 columns (qid 0 docid rel), got " +
                           std::to_string(f.size()));
    }
    long long rel = 0;
    if (!parse_number(f[3], rel)) {
      throw ParseError(source, line, "relevance is not an integer");
    }
    auto& docs = out.relevant[std::string(f[0])];
    if (rel > 1) {
      out.warnings.push_back(source + ":" + std::to_string(line) +
                             ": graded relevance " + std::to_string(rel) +
                             " treated as relevant");
    }
    if (rel >= 1) docs.insert(std::string(f[2]));
  });
  return out;
}

JudgmentSet parse_qrels(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_qrels(in, path.string());
}

RelevanceVector relevance_of(const std::vector<std::string>& ranked,
                             const std::set<std::string>& relevant) {
  std::vector<std::uint8_t> indicators;
  indicators.reserve(ranked.size() + relevant.size());
  std::size_t found = 0;
  for (const auto& doc : ranked) {
    const bool hit = relevant.contains(doc);
    indicators.push_back(hit ? 1 : 0);
    found += hit ? 1 : 0;
  }
  indicators.insert(indicators.end(), relevant.size() - found, 1);
  return RelevanceVector(std::move(indicators));
}

EvaluationReport evaluate(const RankedRun& run, const JudgmentSet& judgments,
                          std::size_t k, NormalizationMode norm,
                          const BaselineChoice& baseline_model) {
  if (run.queries.empty()) throw ValidationError("run contains no queries");
  if (k == 0) throw ValidationError("cutoff k must be at least 1");

  EvaluationReport report;
  report.k = k;
  report.norm = norm;
  report.warnings = judgments.warnings;

  struct User {
    const std::string* qid;
    RelevanceVector rel;
  };
  std::vector<User> users;
  users.reserve(run.queries.size());
  std::size_t top_hits = 0;
  for (const auto& [qid, docs] : run.queries) {
    if (docs.size() < k) {
      throw ValidationError("query '" + qid + "' ranks " +
                            std::to_string(docs.size()) +
                            " documents, fewer than k=" + std::to_string(k));
    }
    const auto judged = judgments.relevant.find(qid);
    if (judged == judgments.relevant.end()) {
      throw ValidationError("query '" + qid + "' has no relevance judgments");
    }
    users.push_back({&qid, relevance_of(docs, judged->second)});
    const auto top = users.back().rel.indicators().first(k);
    top_hits += static_cast<std::size_t>(
        std::count(top.begin(), top.end(), std::uint8_t{1}));
  }
  for (const auto& [qid, unused] : judgments.relevant) {
    if (!run.queries.contains(qid)) {
      report.warnings.push_back("judged query '" + qid +
                                "' is absent from the run; ignored");
    }
  }

  const double user_count = static_cast<double>(users.size());
  std::optional<NormalizationMode> model_norm;
  double ap_sum = 0.0;
  double mean_sum = 0.0;
  double var_sum = 0.0;
  for (const auto& user : users) {
    const double ap = ap_at_k(user.rel, CutoffK(k), norm);
    report.per_user_ap[*user.qid] = ap;
    ap_sum += ap;

    ModelSpec model;
    if (const auto* wor = std::get_if<AutoWor>(&baseline_model)) {
      const std::size_t m = user.rel.relevant_count();
      if (m > wor->total) {
        throw ValidationError("query '" + *user.qid + "' has m=" +
                              std::to_string(m) + " relevant documents, more "
                              "than N=" + std::to_string(wor->total));
      }
      if (k > wor->total) {
        throw ValidationError("k=" + std::to_string(k) + " exceeds N=" +
                              std::to_string(wor->total));
      }
      model = WorModel{wor->total, m};
    } else if (std::holds_alternative<AutoWr>(baseline_model)) {
      model = WrModel{static_cast<double>(top_hits) /
                      (static_cast<double>(k) * user_count)};
    } else {
      model = std::get<ModelSpec>(baseline_model);
    }
    const BaselineMoments moments = baseline(model, k);
    mean_sum += moments.mean;
    var_sum += moments.variance;
    model_norm = native_normalization(model);
    if (report.model_used.empty()) {
      if (std::holds_alternative<AutoWor>(baseline_model)) {
        report.model_used =
            "WOR(N=" + std::to_string(std::get<AutoWor>(baseline_model).total) +
            ",m=per-query)";
      } else {
        report.model_used = describe(model);
      }
      if (const auto* wr = std::get_if<WrModel>(&model);
          wr && std::holds_alternative<AutoWr>(baseline_model)) {
        report.pooled_p = wr->p;
      }
    }
  }

  report.user_count = users.size();
  report.map_at_k = ap_sum / user_count;
  report.baseline_mean = mean_sum / user_count;
  report.baseline_variance_of_map = var_sum / (user_count * user_count);
  if (report.baseline_variance_of_map > 0.0) {
    report.z_score = (report.map_at_k - report.baseline_mean) /
                     std::sqrt(report.baseline_variance_of_map);
  }
  if (model_norm && *model_norm != norm) {
    report.warnings.push_back(
        "baseline model assumes norm=" + std::string(to_string(*model_norm)) +
        " but AP@k used norm=" + std::string(to_string(norm)));
  }
  return report;
}

}  // namespace apk
