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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fss::stats {

/// Linear interpolation between order statistics at h = (n - 1) * p.
/// `sorted` must be ascending and non-empty.
double quantile_sorted(std::span<const double> sorted, double p);

/// Index of the smallest order statistic that is >= the p-quantile, i.e.
/// ceil((n - 1) * p) with a guard against representation error in p.
std::size_t upper_order_index(std::size_t n, double p);

struct DescriptiveSummary {
  std::size_t n = 0;
  double pct_nil = 0.0;  // fraction of exact zeros
  double mean = 0.0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double iqr = 0.0;
  double max = 0.0;
  double stddev = 0.0;    // n - 1 denominator; 0 when n == 1
  double skewness = 0.0;  // adjusted Fisher-Pearson G1; 0 when n < 3 or no spread
};

/// Throws std::invalid_argument on an empty sample.
DescriptiveSummary descriptive_stats(std::span<const double> scores);

enum class RankSumMethod { exact, normal_approx };

struct RankSumResult {
  double u_statistic = 0.0;  // U of the first sample
  double p_value = 1.0;      // two-sided
  RankSumMethod method = RankSumMethod::exact;
  int stars = 0;
};

inline const std::vector<double>& default_significance_levels() {
  static const std::vector<double> kLevels{0.10, 0.05, 0.01};
  return kLevels;
}

/// Number of levels strictly above p.
int count_stars(double p, std::span<const double> levels);

/// Largest combined size that still uses the exact null distribution.
inline constexpr std::size_t kExactRankSumLimit = 20;

/// Two-sample Wilcoxon rank-sum (Mann-Whitney) test. Ties get midranks.
/// Without ties and with n_a + n_b <= 20 the p-value is exact:
/// 2 * min(P(U <= u), P(U >= u)), capped at 1. Otherwise a normal
/// approximation with tie-corrected variance and a 0.5 continuity
/// correction. Throws std::invalid_argument if a sample is empty.
RankSumResult mann_whitney(std::span<const double> a, std::span<const double> b,
                           std::span<const double> significance_levels = default_significance_levels());

/// Null frequencies of U for samples of size m and n without ties:
/// element u counts the rank assignments giving U = u (u = 0..m*n).
std::vector<std::uint64_t> rank_sum_null_counts(std::size_t m, std::size_t n);

/// Exact two-sided p-value of an integer U from the null frequencies.
double exact_two_sided_p(const std::vector<std::uint64_t>& counts, std::uint64_t u);

}  // namespace fss::stats
