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

#ifndef APK_HARMONIC_H_
#define APK_HARMONIC_H_

#include <cstddef>

namespace apk {

// H_k = sum 1/i and H_k^(2) = sum 1/i^2 over i = 1..k.
struct HarmonicPair {
  double h1 = 0.0;
  double h2 = 0.0;
};

// Exact partial sums by direct summation, smallest terms first.
// Throws PreconditionError for k = 0.
HarmonicPair harmonic_numbers(std::size_t k);

struct HarmonicApprox {
  double value = 0.0;        // ln k + gamma + 1/(2k)
  double error_bound = 0.0;  // 1/(8k^2); 0 <= value - H_k <= error_bound
};

// Asymptotic approximation of H_k. Never substituted for harmonic_numbers.
HarmonicApprox harmonic_approx(std::size_t k);

// Closed forms of three double sums over 1 <= i < l <= k:
//   sum 1/i     = k (H_k - 1)
//   sum 1/l     = k - H_k
//   sum 1/(i l) = (H_k^2 - H_k^(2)) / 2
struct PairSums {
  double inner_over_i = 0.0;
  double inner_over_l = 0.0;
  double over_product = 0.0;
};

PairSums pair_sums(std::size_t k);

}  // namespace apk

#endif  // APK_HARMONIC_H_
