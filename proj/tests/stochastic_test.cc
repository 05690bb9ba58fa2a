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

#include "apk/stochastic.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <gtest/gtest.h>

#include "apk/baseline.h"
#include "apk/errors.h"

namespace apk {
namespace {

using NM = NormalizationMode;

TEST(StreamRngTest, DeterministicAndStreamSeparated) {
  StreamRng a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
    EXPECT_NE(x, d());
  }
}

TEST(StreamRngTest, BelowIsUniform) {
  StreamRng rng(9, 3);
  std::vector<int> counts(7, 0);
  const int n = 70000;
  for (int i = 0; i < n; ++i) ++counts[rng.below(7)];
  for (int c : counts) EXPECT_NEAR(c / double(n), 1.0 / 7, 0.01);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(SampleWorTest, Degenerate) {
  StreamRng rng(1, 0);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(sample_wor(5, 0, rng), RelevanceVector({0, 0, 0, 0, 0}));
    EXPECT_EQ(sample_wor(5, 5, rng), RelevanceVector({1, 1, 1, 1, 1}));
  }
  EXPECT_THROW(sample_wor(5, 6, rng), PreconditionError);
}

TEST(SampleWorTest, PlacementsUniform) {
  StreamRng rng(2024, 0);
  std::map<std::vector<std::uint8_t>, int> freq;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto rel = sample_wor(4, 2, rng);
    ASSERT_EQ(rel.relevant_count(), 2u);
    const auto ind = rel.indicators();
    ++freq[std::vector<std::uint8_t>(ind.begin(), ind.end())];
  }
  ASSERT_EQ(freq.size(), 6u);
  for (const auto& [pattern, count] : freq) {
    EXPECT_NEAR(count / double(n), 1.0 / 6, 0.01);
  }
}

TEST(SampleWorTest, PrefixHasSameLawAsFullPlacement) {
  // Top-3 pattern frequencies of N=6, m=3 from both samplers.
  StreamRng full_rng(5, 0), prefix_rng(5, 1);
  std::map<std::vector<std::uint8_t>, double> full, prefix;
  const int n = 120000;
  for (int i = 0; i < n; ++i) {
    const auto a = sample_wor(6, 3, full_rng);
    const auto top = a.indicators().first(3);
    full[std::vector<std::uint8_t>(top.begin(), top.end())] += 1.0 / n;
    const auto b = sample_wor_prefix(6, 3, 3, prefix_rng);
    prefix[std::vector<std::uint8_t>(b.indicators().begin(),
                                     b.indicators().end())] += 1.0 / n;
  }
  ASSERT_EQ(full.size(), 8u);
  ASSERT_EQ(prefix.size(), 8u);
  for (const auto& [pattern, f] : full) {
    // Exact pattern probability: C(3, 3 - s) / C(6, 3).
    const int s = std::accumulate(pattern.begin(), pattern.end(), 0);
    const double binom3[] = {1, 3, 3, 1};
    const double exact = binom3[3 - s] / 20.0;
    EXPECT_NEAR(f, exact, 0.006);
    EXPECT_NEAR(prefix[pattern], exact, 0.006);
  }
}

TEST(SampleWrTest, DegenerateAndFrequency) {
  StreamRng rng(11, 0);
  EXPECT_EQ(sample_wr(3, 0.0, rng), RelevanceVector({0, 0, 0}));
  EXPECT_EQ(sample_wr(3, 1.0, rng), RelevanceVector({1, 1, 1}));
  int hits = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) hits += sample_wr(1, 0.3, rng)[0] ? 1 : 0;
  EXPECT_NEAR(hits / double(n), 0.3, 0.01);
  EXPECT_THROW(sample_wr(0, 0.5, rng), PreconditionError);
  EXPECT_THROW(sample_wr(4, -0.5, rng), PreconditionError);
}

TEST(SampleWrTest, CountWithinFiveSigma) {
  StreamRng rng(12, 0);
  const int n = 100000;
  const std::size_t k = 20;
  const double p = 0.2;
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += sample_wr(k, p, rng).relevant_count();
  const double mean = total / n;
  const double sd = std::sqrt(k * p * (1 - p) / n);
  EXPECT_LT(std::abs(mean - k * p), 5 * sd);
}

TEST(RunningMomentsTest, MergeEqualsSequential) {
  RunningMoments all, left, right;
  for (int i = 0; i < 1000; ++i) {
    const double x = std::sin(i * 0.37) + i * 1e-3;
    all.add(x);
    (i < 313 ? left : right).add(x);
  }
  left.merge(right);
  EXPECT_EQ(left.count, all.count);
  EXPECT_NEAR(left.mean, all.mean, 1e-13);
  EXPECT_NEAR(left.m2, all.m2, 1e-10);
}

TEST(MonteCarloTest, DegenerateModel) {
  const auto s = monte_carlo(WrModel{1.0}, 10, NM::kByK, 5000, 3);
  EXPECT_EQ(s.mean, 1.0);
  EXPECT_EQ(s.variance, 0.0);
  EXPECT_EQ(s.std_error, 0.0);
  EXPECT_EQ(s.n, 5000u);
}

TEST(MonteCarloTest, Preconditions) {
  EXPECT_THROW(monte_carlo(WrModel{0.5}, 5, NM::kByK, 1, 1), PreconditionError);
  EXPECT_THROW(monte_carlo(WorModel{5, 2}, 6, NM::kByK, 10, 1),
               PreconditionError);
  EXPECT_THROW(histogram(WrModel{0.5}, 5, NM::kByK, 10, 1, 1),
               PreconditionError);
}

TEST(MonteCarloTest, IdenticalAcrossWorkerCounts) {
  const ModelSpec model = WorModel{50, 25};
  const auto one = monte_carlo(model, 5, NM::kByMinMK, 50000, 99, {1});
  for (unsigned w : {2u, 3u, 8u}) {
    const auto many = monte_carlo(model, 5, NM::kByMinMK, 50000, 99, {w});
    EXPECT_EQ(one.mean, many.mean);
    EXPECT_EQ(one.variance, many.variance);
    EXPECT_EQ(one.std_error, many.std_error);
  }
  const auto h1 = histogram(model, 5, NM::kByMinMK, 30000, 4, 40, {1});
  const auto h4 = histogram(model, 5, NM::kByMinMK, 30000, 4, 40, {4});
  EXPECT_EQ(h1.counts, h4.counts);
}

TEST(MonteCarloTest, SeedsMatter) {
  const ModelSpec model = WrModel{0.3};
  const auto a = monte_carlo(model, 8, NM::kByK, 10000, 1);
  const auto b = monte_carlo(model, 8, NM::kByK, 10000, 1);
  const auto c = monte_carlo(model, 8, NM::kByK, 10000, 2);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.variance, b.variance);
  EXPECT_NE(a.mean, c.mean);
}

TEST(MonteCarloTest, ReferenceScenarioA1) {
  const auto wor = monte_carlo(WorModel{50, 25}, 5, NM::kByMinMK, 1000000, 17);
  EXPECT_LT(std::abs(wor.mean - 0.36139), 5 * wor.std_error);
  const auto wr = monte_carlo(WrModel{0.5}, 5, NM::kByK, 1000000, 17);
  EXPECT_LT(std::abs(wr.variance - 0.05884) / 0.05884, 0.05);
}

TEST(HistogramTest, Basics) {
  const auto h = histogram(WrModel{0.0}, 5, NM::kByK, 1000, 1, 10);
  ASSERT_EQ(h.bin_edges.size(), 11u);
  ASSERT_EQ(h.counts.size(), 10u);
  EXPECT_EQ(h.counts[0], 1000u);
  EXPECT_EQ(h.bin_edges.front(), 0.0);
  EXPECT_EQ(h.bin_edges.back(), 1.0);

  const auto ones = histogram(WrModel{1.0}, 5, NM::kByK, 1000, 1, 8);
  EXPECT_EQ(ones.counts.back(), 1000u);

  const auto mixed = histogram(WorModel{20, 7}, 10, NM::kByMinMK, 12345, 5);
  EXPECT_EQ(std::accumulate(mixed.counts.begin(), mixed.counts.end(),
                            std::uint64_t{0}),
            12345u);
  EXPECT_TRUE(std::is_sorted(mixed.bin_edges.begin(), mixed.bin_edges.end(),
                             std::less_equal<>()));
  EXPECT_NE(mixed.model_label.find("WOR(N=20,m=7)"), std::string::npos);
}

double bin_center_mean(const HistogramData& h) {
  double s = 0.0;
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    s += 0.5 * (h.bin_edges[b] + h.bin_edges[b + 1]) * h.counts[b];
  }
  return s / h.n;
}

TEST(HistogramTest, QualitativeShapes) {
  // Offline A3 sits above online A3.
  const auto wor = histogram(WorModel{50, 25}, 40, NM::kByMinMK, 20000, 8);
  const auto wr = histogram(WrModel{0.5}, 40, NM::kByK, 20000, 8);
  EXPECT_GT(bin_center_mean(wor), bin_center_mean(wr));
  // Online C is tighter than offline C.
  const auto c_wor = monte_carlo(WorModel{50, 2}, 20, NM::kByMinMK, 20000, 8);
  const auto c_wr = monte_carlo(WrModel{0.04}, 20, NM::kByK, 20000, 8);
  EXPECT_LT(c_wr.variance, c_wor.variance);
}

}  // namespace
}  // namespace apk
