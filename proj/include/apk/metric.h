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

#ifndef APK_METRIC_H_
#define APK_METRIC_H_

// Precision, average precision and mean average precision at a rank cutoff
// over binary relevance vectors.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace apk {

// Ordered binary relevance indicators for one ranked list. Position 0 is the
// top of the ranking.
class RelevanceVector {
 public:
  // Throws PreconditionError if empty or any element is not 0 or 1.
  explicit RelevanceVector(std::vector<std::uint8_t> indicators);
  RelevanceVector(std::initializer_list<int> indicators);

  std::size_t length() const { return indicators_.size(); }
  std::size_t relevant_count() const { return relevant_count_; }
  // View into this object; not available on temporaries.
  std::span<const std::uint8_t> indicators() const& { return indicators_; }
  std::span<const std::uint8_t> indicators() const&& = delete;
  bool operator[](std::size_t i) const { return indicators_[i] != 0; }

  bool operator==(const RelevanceVector&) const = default;

 private:
  std::vector<std::uint8_t> indicators_;
  std::size_t relevant_count_ = 0;
};

enum class NormalizationMode {
  kByK,      // divide by the cutoff k
  kByMinMK,  // divide by min(m, k), m = relevant items in the whole vector
};

std::string_view to_string(NormalizationMode norm);
// Accepts "byk" and "bymin". Throws PreconditionError otherwise.
NormalizationMode parse_normalization(std::string_view text);

// A rank cutoff k >= 1.
class CutoffK {
 public:
  explicit CutoffK(std::size_t k);
  std::size_t value() const { return k_; }

 private:
  std::size_t k_;
};

// Fraction of relevant items among the first `i` positions (1-based).
// Throws IndexError if i is 0 or exceeds the vector length.
double precision_at(const RelevanceVector& rel, std::size_t i);

// AP@k. Returns 0 when the vector holds no relevant item.
// Throws PreconditionError if k exceeds the vector length.
double ap_at_k(const RelevanceVector& rel, CutoffK k, NormalizationMode norm);

// AP@k over the top of a ranking whose remainder is not materialized;
// `total_relevant` is the relevant count of the full ranking and is only
// consulted by kByMinMK. `top` must hold at least k indicators, each 0 or 1.
double ap_at_k(std::span<const std::uint8_t> top, std::size_t k,
               NormalizationMode norm, std::size_t total_relevant);

// Mean of ap_at_k over users. Throws PreconditionError on an empty set or a
// vector shorter than k.
double map_at_k(std::span<const RelevanceVector> users, CutoffK k,
                NormalizationMode norm);

}  // namespace apk

#endif  // APK_METRIC_H_
