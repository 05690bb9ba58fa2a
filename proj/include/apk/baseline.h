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

#ifndef APK_BASELINE_H_
#define APK_BASELINE_H_

// Exact expectation and variance of AP@k under random rankings.
//
// Offline (WOR) moments use min(m, k) normalization, online (WR) moments use
// k normalization. No closed form is offered for the crossed pairings.

#include <cstddef>

#include "apk/model.h"

namespace apk {

struct BaselineMoments {
  double mean = 0.0;
  double variance = 0.0;
};

// Rational coefficients of the WOR variance in m and N, plus M = min(m, k).
struct WorCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  double f = 0.0;
  double g = 0.0;
  double normalizer = 0.0;  // M
};

// E(AP@k) under WOR{N, m}. Requires 1 <= k <= N and m <= N.
double wor_expectation(std::size_t total, std::size_t relevant, std::size_t k);

// Requires N >= 4, 1 <= m <= N, 1 <= k <= N.
WorCoefficients wor_coefficients(std::size_t total, std::size_t relevant,
                                 std::size_t k);

// Var(AP@k) under WOR{N, m}. For N < 4 the value comes from exhaustive
// enumeration since the coefficients are undefined there.
double wor_variance(std::size_t total, std::size_t relevant, std::size_t k);

// E(AP@k) under WR{p}: p (p + (1 - p) H_k / k).
double wr_expectation(double p, std::size_t k);

// Var(AP@k) under WR{p}.
double wr_variance(double p, std::size_t k);

// Dispatches to the matching pair above. Rounding noise below zero in the
// variance is clamped to 0.
BaselineMoments baseline(const ModelSpec& model, std::size_t k);

}  // namespace apk

#endif  // APK_BASELINE_H_
