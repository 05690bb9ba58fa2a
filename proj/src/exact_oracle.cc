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

#include "apk/exact_oracle.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "apk/errors.h"

namespace apk {
namespace {

constexpr std::size_t kExactBinomialLimit = 60;

struct WeightedValue {
  double value;
  double weight;
};

// Sorts, merges values equal up to summation order, and computes moments.
ExactDistribution collapse(std::vector<WeightedValue> draws) {
  std::sort(draws.begin(), draws.end(),
            [](const auto& x, const auto& y) { return x.value < y.value; });
  ExactDistribution out;
  for (const auto& d : draws) {
    if (d.weight == 0.0) continue;
    if (!out.support.empty() &&
        d.value - out.support.back().ap_value <= 1e-12) {
      out.support.back().probability += d.weight;
    } else {
      out.support.push_back({d.value, d.weight});
    }
  }
  for (const auto& s : out.support) out.mean += s.ap_value * s.probability;
  for (const auto& s : out.support) {
    const double dev = s.ap_value - out.mean;
    out.variance += dev * dev * s.probability;
  }
  return out;
}

void check_cutoff(std::size_t k) {
  if (k == 0) throw PreconditionError("cutoff k must be at least 1");
  if (k > kMaxEnumerationCutoff) {
    throw CapacityError("enumeration supports k <= " +
                        std::to_string(kMaxEnumerationCutoff) + ", got " +
                        std::to_string(k));
  }
}

// Expands the low k bits of `mask` into indicators, position 0 = bit 0.
void unpack(std::uint32_t mask, std::size_t k,
            std::array<std::uint8_t, kMaxEnumerationCutoff>& buf) {
  for (std::size_t i = 0; i < k; ++i) buf[i] = (mask >> i) & 1u;
}

}  // namespace

unsigned __int128 binomial_exact(std::size_t n, std::size_t r) {
  if (n > kExactBinomialLimit) {
    throw CapacityError("exact binomial supports n <= 60");
  }
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  // acc stays an integer: C(n-r+i, i) after step i.
  for (std::size_t i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return acc;
}

double binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0.0;
  if (n <= kExactBinomialLimit) {
    return static_cast<double>(binomial_exact(n, r));
  }
  const double x = static_cast<double>(n);
  const double y = static_cast<double>(r);
  return std::round(
      std::exp(std::lgamma(x + 1) - std::lgamma(y + 1) - std::lgamma(x - y + 1)));
}

ExactDistribution exact_wor(std::size_t total, std::size_t relevant,
                            std::size_t k, NormalizationMode norm) {
  check_cutoff(k);
  if (k > total) throw PreconditionError("WOR enumeration requires k <= N");
  if (relevant > total) throw PreconditionError("WOR requires m <= N");

  const double placements = binomial(total, relevant);
  const std::size_t s_min = relevant > total - k ? relevant - (total - k) : 0;
  const std::size_t s_max = std::min(relevant, k);

  // Weight depends only on s, so tabulate it once.
  std::vector<double> weight_by_s(k + 1, 0.0);
  for (std::size_t s = s_min; s <= s_max; ++s) {
    weight_by_s[s] = binomial(total - k, relevant - s) / placements;
  }

  std::array<std::uint8_t, kMaxEnumerationCutoff> buf{};
  std::vector<WeightedValue> draws;
  const std::uint32_t patterns = std::uint32_t{1} << k;
  for (std::uint32_t mask = 0; mask < patterns; ++mask) {
    const auto s = static_cast<std::size_t>(std::popcount(mask));
    if (s < s_min || s > s_max) continue;
    unpack(mask, k, buf);
    const double ap =
        ap_at_k(std::span<const std::uint8_t>(buf.data(), k), k, norm,
                relevant);
    draws.push_back({ap, weight_by_s[s]});
  }
  return collapse(std::move(draws));
}

ExactDistribution exact_wr(double p, std::size_t k, NormalizationMode norm) {
  check_cutoff(k);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw PreconditionError("WR requires 0 <= p <= 1");
  }
  std::vector<double> weight_by_s(k + 1);
  for (std::size_t s = 0; s <= k; ++s) {
    weight_by_s[s] = std::pow(p, static_cast<double>(s)) *
                     std::pow(1 - p, static_cast<double>(k - s));
  }
  std::array<std::uint8_t, kMaxEnumerationCutoff> buf{};
  std::vector<WeightedValue> draws;
  const std::uint32_t patterns = std::uint32_t{1} << k;
  draws.reserve(patterns);
  for (std::uint32_t mask = 0; mask < patterns; ++mask) {
    const auto s = static_cast<std::size_t>(std::popcount(mask));
    unpack(mask, k, buf);
    const double ap =
        ap_at_k(std::span<const std::uint8_t>(buf.data(), k), k, norm, s);
    draws.push_back({ap, weight_by_s[s]});
  }
  return collapse(std::move(draws));
}

ExactDistribution exact_wor_by_placement(std::size_t total,
                                         std::size_t relevant, std::size_t k,
                                         NormalizationMode norm) {
  if (total > kMaxPlacementItems) {
    throw CapacityError("placement enumeration supports N <= " +
                        std::to_string(kMaxPlacementItems));
  }
  if (total == 0 || relevant > total) {
    throw PreconditionError("WOR requires N >= 1 and m <= N");
  }
  if (k == 0 || k > total) {
    throw PreconditionError("WOR enumeration requires 1 <= k <= N");
  }
  // Lexicographically smallest arrangement: zeros first, then ones.
  std::vector<std::uint8_t> indicators(total, 0);
  std::fill(indicators.end() - static_cast<std::ptrdiff_t>(relevant),
            indicators.end(), std::uint8_t{1});

  std::vector<double> values;
  do {
    values.push_back(ap_at_k(RelevanceVector(indicators), CutoffK(k), norm));
  } while (std::next_permutation(indicators.begin(), indicators.end()));

  const double w = 1.0 / static_cast<double>(values.size());
  std::vector<WeightedValue> draws;
  draws.reserve(values.size());
  for (double v : values) draws.push_back({v, w});
  return collapse(std::move(draws));
}

}  // namespace apk
