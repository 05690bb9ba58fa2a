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

#include "apk/metric.h"

#include <algorithm>
#include <string>

#include "apk/errors.h"

namespace apk {

RelevanceVector::RelevanceVector(std::vector<std::uint8_t> indicators)
    : indicators_(std::move(indicators)) {
  if (indicators_.empty()) {
    throw PreconditionError("relevance vector must have at least one entry");
  }
  for (std::uint8_t v : indicators_) {
    if (v > 1) {
      throw PreconditionError("relevance indicators must be 0 or 1");
    }
    relevant_count_ += v;
  }
}

RelevanceVector::RelevanceVector(std::initializer_list<int> indicators)
    : RelevanceVector([&] {
        std::vector<std::uint8_t> out;
        out.reserve(indicators.size());
        for (int v : indicators) {
          if (v != 0 && v != 1) {
            throw PreconditionError("relevance indicators must be 0 or 1");
          }
          out.push_back(static_cast<std::uint8_t>(v));
        }
        return out;
      }()) {}

std::string_view to_string(NormalizationMode norm) {
  return norm == NormalizationMode::kByK ? "byk" : "bymin";
}

NormalizationMode parse_normalization(std::string_view text) {
  if (text == "byk") return NormalizationMode::kByK;
  if (text == "bymin") return NormalizationMode::kByMinMK;
  throw PreconditionError("unknown normalization '" + std::string(text) +
                          "' (expected byk or bymin)");
}

CutoffK::CutoffK(std::size_t k) : k_(k) {
  if (k == 0) throw PreconditionError("cutoff k must be at least 1");
}

double precision_at(const RelevanceVector& rel, std::size_t i) {
  if (i == 0 || i > rel.length()) {
    throw IndexError("rank index " + std::to_string(i) + " outside [1, " +
                     std::to_string(rel.length()) + "]");
  }
  const auto prefix = rel.indicators().first(i);
  const auto hits = std::count(prefix.begin(), prefix.end(), std::uint8_t{1});
  return static_cast<double>(hits) / static_cast<double>(i);
}

double ap_at_k(std::span<const std::uint8_t> top, std::size_t k,
               NormalizationMode norm, std::size_t total_relevant) {
  if (k == 0 || k > top.size()) {
    throw PreconditionError("cutoff k=" + std::to_string(k) +
                            " exceeds ranked list length " +
                            std::to_string(top.size()));
  }
  // One pass: hits is the running prefix count, so P@i * rel(i) = hits / i.
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (top[i] != 0) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
  }
  if (hits == 0) return 0.0;
  if (norm == NormalizationMode::kByMinMK && total_relevant < hits) {
    throw PreconditionError("total relevant count is below the hits in top k");
  }
  const std::size_t denominator = norm == NormalizationMode::kByK
                                      ? k
                                      : std::min(total_relevant, k);
  return sum / static_cast<double>(denominator);
}

double ap_at_k(const RelevanceVector& rel, CutoffK k, NormalizationMode norm) {
  return ap_at_k(rel.indicators(), k.value(), norm, rel.relevant_count());
}

double map_at_k(std::span<const RelevanceVector> users, CutoffK k,
                NormalizationMode norm) {
  if (users.empty()) throw PreconditionError("MAP@k needs at least one user");
  double total = 0.0;
  for (const auto& rel : users) total += ap_at_k(rel, k, norm);
  return total / static_cast<double>(users.size());
}

}  // namespace apk
