/*
 * Copyright 2026 The FSS Analytics Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fss/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "../oracle/oracle.hpp"

namespace fss::stats {
namespace {

TEST(Quantile, FiveValues) {
  const std::vector<double> x{0, 1, 2, 3, 4};
  EXPECT_EQ(quantile_sorted(x, 0.5), 2.0);
  EXPECT_EQ(quantile_sorted(x, 0.25), 1.0);
  EXPECT_EQ(quantile_sorted(x, 0.75), 3.0);
  EXPECT_EQ(quantile_sorted(x, 0.1), 0.4);
  EXPECT_EQ(quantile_sorted(x, 1.0), 4.0);
  EXPECT_THROW(quantile_sorted(std::vector<double>{}, 0.5), std::invalid_argument);
}

TEST(Quantile, MonotoneInP) {
  std::mt19937_64 rng(5);
  std::lognormal_distribution<double> dist(0.0, 1.0);
  std::vector<double> x(257);
  for (auto& v : x) v = dist(rng);
  std::sort(x.begin(), x.end());
  double prev = -1.0;
  for (int k = 0; k <= 100; ++k) {
    const double q = quantile_sorted(x, k / 100.0);
    EXPECT_GE(q, prev);
    prev = q;
  }
}

TEST(UpperOrderIndex, CeilingWithSnap) {
  EXPECT_EQ(upper_order_index(100, 0.9), 90u);  // 99 * 0.9 = 89.1
  EXPECT_EQ(upper_order_index(11, 0.9), 9u);    // 10 * 0.9 lands on 9 up to rounding
  EXPECT_EQ(upper_order_index(1, 0.5), 0u);
}

TEST(Descriptive, SpecExamples) {
  const auto s = descriptive_stats(std::vector<double>{0, 1, 2, 3, 4});
  EXPECT_EQ(s.median, 2.0);
  EXPECT_EQ(s.q1, 1.0);
  EXPECT_EQ(s.iqr, 2.0);
  EXPECT_EQ(s.max, 4.0);
  EXPECT_EQ(s.mean, 2.0);
  EXPECT_NEAR(s.stddev, std::sqrt(2.5), 1e-15);
  EXPECT_EQ(s.skewness, 0.0);
  EXPECT_NEAR(descriptive_stats(std::vector<double>{0, 0, 3}).skewness, 1.7321, 5e-5);
  EXPECT_EQ(descriptive_stats(std::vector<double>{0, 1, 1, 1}).pct_nil, 0.25);
  const auto one = descriptive_stats(std::vector<double>{7});
  EXPECT_EQ(one.stddev, 0.0);
  EXPECT_EQ(one.skewness, 0.0);
}

TEST(Stars, Thresholds) {
  const auto& levels = default_significance_levels();
  EXPECT_EQ(count_stars(0.004, levels), 3);
  EXPECT_EQ(count_stars(0.03, levels), 2);
  EXPECT_EQ(count_stars(0.1, levels), 1);
  EXPECT_EQ(count_stars(0.5, levels), 0);
}

TEST(MannWhitney, SpecExamples) {
  const auto r = mann_whitney(std::vector<double>{1, 2, 3}, std::vector<double>{4, 5, 6});
  EXPECT_EQ(r.u_statistic, 0.0);
  EXPECT_EQ(r.p_value, 0.1);
  EXPECT_EQ(r.method, RankSumMethod::exact);
  EXPECT_EQ(r.stars, 1);
  const auto same = mann_whitney(std::vector<double>{1, 2}, std::vector<double>{1, 2});
  EXPECT_EQ(same.p_value, 1.0);
  EXPECT_EQ(same.method, RankSumMethod::normal_approx);
  const auto flat = mann_whitney(std::vector<double>{1, 1, 1}, std::vector<double>{1, 1, 1});
  EXPECT_EQ(flat.p_value, 1.0);
  EXPECT_EQ(flat.stars, 0);
  EXPECT_THROW(mann_whitney(std::vector<double>{}, std::vector<double>{1}), std::invalid_argument);
}

TEST(MannWhitney, USymmetry) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> v(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a(1 + trial % 13), b(1 + trial % 7);
    for (auto& x : a) x = v(rng);
    for (auto& x : b) x = v(rng);
    const auto ab = mann_whitney(a, b);
    const auto ba = mann_whitney(b, a);
    EXPECT_EQ(ab.u_statistic + ba.u_statistic, static_cast<double>(a.size() * b.size()));
    EXPECT_NEAR(ab.p_value, ba.p_value, 1e-12);
    EXPECT_GE(ab.p_value, 0.0);
    EXPECT_LE(ab.p_value, 1.0);
  }
}

TEST(MannWhitney, NullCountsSumToBinomial) {
  const auto counts = rank_sum_null_counts(5, 7);
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  EXPECT_EQ(total, 792u);  // C(12, 5)
  EXPECT_EQ(counts.size(), 36u);
  for (std::size_t u = 0; u < counts.size(); ++u) EXPECT_EQ(counts[u], counts[counts.size() - 1 - u]);
}

TEST(MannWhitney, ExactMatchesEnumeration) {
  std::mt19937_64 rng(17);
  for (std::size_t na = 1; na <= 9; ++na) {
    for (std::size_t nb = 1; na + nb <= 10; ++nb) {
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> pool(na + nb);
        std::iota(pool.begin(), pool.end(), 1.0);
        std::shuffle(pool.begin(), pool.end(), rng);
        const std::vector<double> a(pool.begin(), pool.begin() + static_cast<long>(na));
        const std::vector<double> b(pool.begin() + static_cast<long>(na), pool.end());
        const auto r = mann_whitney(a, b);
        ASSERT_EQ(r.method, RankSumMethod::exact);
        EXPECT_EQ(r.p_value, oracle::enumerate_rank_sum_p(a, b)) << na << " vs " << nb;
      }
    }
  }
}

TEST(MannWhitney, NormalApproxNearPermutation) {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> a(30), b(25);
  for (auto& x : a) x = n(rng) + 0.4;
  for (auto& x : b) x = n(rng);
  const auto r = mann_whitney(a, b);
  EXPECT_EQ(r.method, RankSumMethod::normal_approx);
  EXPECT_NEAR(r.p_value, oracle::permutation_rank_sum_p(a, b, 200000, 3), 0.01);
}

}  // namespace
}  // namespace fss::stats
