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

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "apk/errors.h"
#include "test_oracles.h"

namespace apk {
namespace {

using NM = NormalizationMode;

double probability_sum(const ExactDistribution& d) {
  double s = 0.0;
  for (const auto& p : d.support) s += p.probability;
  return s;
}

TEST(BinomialTest, ExactAndLogGammaAgree) {
  EXPECT_EQ(binomial_exact(5, 2), 10u);
  EXPECT_EQ(binomial_exact(60, 30), 118264581564861424ULL);
  EXPECT_EQ(binomial_exact(7, 9), 0u);
  EXPECT_THROW(binomial_exact(61, 3), CapacityError);
  EXPECT_EQ(binomial(50, 25), 126410606437752.0);
  // lgamma route for n > 60, spot-checked against exact products.
  EXPECT_NEAR(binomial(100, 3), 161700.0, 1e-6);
  EXPECT_NEAR(binomial(200, 2) / 19900.0, 1.0, 1e-12);
}

TEST(ExactWorTest, PointMasses) {
  const auto all = exact_wor(5, 5, 3, NM::kByMinMK);
  ASSERT_EQ(all.support.size(), 1u);
  EXPECT_DOUBLE_EQ(all.support[0].ap_value, 1.0);
  EXPECT_DOUBLE_EQ(all.support[0].probability, 1.0);
  const auto none = exact_wor(5, 0, 3, NM::kByMinMK);
  ASSERT_EQ(none.support.size(), 1u);
  EXPECT_EQ(none.support[0].ap_value, 0.0);
  EXPECT_EQ(none.mean, 0.0);
  EXPECT_EQ(none.variance, 0.0);
}

TEST(ExactWorTest, ReferenceScenario) {
  const auto d = exact_wor(50, 25, 5, NM::kByMinMK);
  EXPECT_NEAR(d.mean, 0.36139, 1e-5);
  EXPECT_NEAR(d.mean, 0.36139455782312924, 1e-13);
  EXPECT_NEAR(d.variance, 0.05467042458175918, 1e-13);
}

TEST(ExactWorTest, CapacityAndPreconditions) {
  EXPECT_THROW(exact_wor(50, 25, 25, NM::kByMinMK), CapacityError);
  EXPECT_THROW(exact_wor(5, 2, 6, NM::kByMinMK), PreconditionError);
  EXPECT_THROW(exact_wor(5, 6, 3, NM::kByMinMK), PreconditionError);
  EXPECT_THROW(exact_wor_by_placement(25, 2, 3, NM::kByK), CapacityError);
}

TEST(ExactWrTest, PointMassAndReference) {
  const auto one = exact_wr(1.0, 4, NM::kByK);
  ASSERT_EQ(one.support.size(), 1u);
  EXPECT_DOUBLE_EQ(one.support[0].ap_value, 1.0);

  const auto d = exact_wr(0.5, 5, NM::kByK);
  EXPECT_NEAR(d.mean, 0.36416, 1e-5);
  EXPECT_NEAR(d.variance, 0.05884, 1e-5);
  EXPECT_THROW(exact_wr(0.5, 25, NM::kByK), CapacityError);
  EXPECT_THROW(exact_wr(1.1, 3, NM::kByK), PreconditionError);
}

TEST(ExactWrTest, TwoPositionSupport) {
  const auto d = exact_wr(0.5, 2, NM::kByK);
  ASSERT_EQ(d.support.size(), 4u);
  const double values[] = {0.0, 0.25, 0.5, 1.0};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_DOUBLE_EQ(d.support[i].ap_value, values[i]);
    EXPECT_DOUBLE_EQ(d.support[i].probability, 0.25);
  }
}

TEST(ExactWrTest, MatchesIndependentEnumeration) {
  for (double p : {0.04, 0.3, 0.9}) {
    for (int k = 1; k <= 10; ++k) {
      const auto d = exact_wr(p, k, NM::kByK);
      const auto brute = testing::bernoulli_moments(p, k);
      EXPECT_NEAR(d.mean, brute.mean, 1e-13);
      EXPECT_NEAR(d.variance, brute.variance, 1e-13);
    }
  }
}

TEST(ExactDistributionTest, WeightsSumToOneAndMomentsRecompute) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      for (std::size_t k = 1; k <= n; ++k) {
        for (auto norm : {NM::kByK, NM::kByMinMK}) {
          const auto d = exact_wor(n, m, k, norm);
          ASSERT_NEAR(probability_sum(d), 1.0, 1e-12);
          double mean = 0.0, second = 0.0;
          for (const auto& s : d.support) {
            mean += s.ap_value * s.probability;
            second += s.ap_value * s.ap_value * s.probability;
          }
          ASSERT_NEAR(d.mean, mean, 1e-14);
          ASSERT_NEAR(d.variance, second - mean * mean, 1e-13);
        }
      }
    }
  }
  for (double p : {0.0, 0.2, 0.77, 1.0}) {
    ASSERT_NEAR(probability_sum(exact_wr(p, 12, NM::kByMinMK)), 1.0, 1e-12);
  }
}

TEST(ExactDistributionTest, SupportValuesAreAttainable) {
  // Every support value must be the AP of some top-k pattern.
  const std::size_t n = 9, m = 4, k = 6;
  std::set<long long> attainable;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (std::popcount(mask) > static_cast<int>(m)) continue;
    std::vector<int> rel(k);
    for (std::size_t i = 0; i < k; ++i) rel[i] = (mask >> i) & 1;
    attainable.insert(std::llround(testing::brute_ap(rel, k, 4) * 1e9));
  }
  for (const auto& s : exact_wor(n, m, k, NM::kByMinMK).support) {
    EXPECT_TRUE(attainable.contains(std::llround(s.ap_value * 1e9)))
        << s.ap_value;
  }
}

TEST(ExactDistributionTest, PatternWeightingMatchesPlacements) {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      for (std::size_t k = 1; k <= n; ++k) {
        for (auto norm : {NM::kByK, NM::kByMinMK}) {
          const auto a = exact_wor(n, m, k, norm);
          const auto b = exact_wor_by_placement(n, m, k, norm);
          ASSERT_NEAR(a.mean, b.mean, 1e-12);
          ASSERT_NEAR(a.variance, b.variance, 1e-12);
        }
      }
    }
  }
}

TEST(ExactDistributionTest, WrApproachesWorForLargeN) {
  const auto wor = exact_wor(200, 100, 5, NM::kByMinMK);
  const auto wr = exact_wr(0.5, 5, NM::kByK);
  EXPECT_LT(std::abs(wor.mean - wr.mean), 0.01);
}

}  // namespace
}  // namespace apk
