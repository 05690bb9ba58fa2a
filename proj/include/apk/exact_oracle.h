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

#ifndef APK_EXACT_ORACLE_H_
#define APK_EXACT_ORACLE_H_

// Exact finite distribution of AP@k by exhaustive enumeration. Used as ground
// truth for the closed forms in baseline.h.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "apk/metric.h"

namespace apk {

inline constexpr std::size_t kMaxEnumerationCutoff = 24;
inline constexpr std::size_t kMaxPlacementItems = 24;

struct SupportPoint {
  double ap_value = 0.0;
  double probability = 0.0;
};

struct ExactDistribution {
  std::vector<SupportPoint> support;  // ascending ap_value, distinct values
  double mean = 0.0;
  double variance = 0.0;
};

// C(n, r). Exact 128-bit arithmetic for n <= 60, log-gamma otherwise.
double binomial(std::size_t n, std::size_t r);

// Exact integer C(n, r) for n <= 60. Throws CapacityError above that.
unsigned __int128 binomial_exact(std::size_t n, std::size_t r);

// WOR{N, m}: enumerates the 2^k top-k patterns, each weighted by
// C(N-k, m-s) / C(N, m) where s is the pattern's relevant count. kByMinMK
// normalizes with the true total m. Throws CapacityError for k > 24 and
// PreconditionError for k > N or m > N.
ExactDistribution exact_wor(std::size_t total, std::size_t relevant,
                            std::size_t k, NormalizationMode norm);

// WR{p}: enumerates the 2^k patterns with weight p^s (1-p)^(k-s). kByMinMK
// takes m as the pattern's own relevant count.
ExactDistribution exact_wr(double p, std::size_t k, NormalizationMode norm);

// WOR{N, m} by walking every one of the C(N, m) full placements with equal
// weight. Independent of the pattern weighting in exact_wor. Throws
// CapacityError for N > 24.
ExactDistribution exact_wor_by_placement(std::size_t total,
                                         std::size_t relevant, std::size_t k,
                                         NormalizationMode norm);

}  // namespace apk

#endif  // APK_EXACT_ORACLE_H_
