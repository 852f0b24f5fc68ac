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
#include <stdexcept>

#include "fss/summation.hpp"

namespace fss::stats {

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of an empty sample");
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  if (frac == 0.0 || sorted[lo] == sorted[lo + 1]) return sorted[lo];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::size_t upper_order_index(std::size_t n, double p) {
  if (n == 0) return 0;
  const double h = static_cast<double>(n - 1) * p;
  const double nearest = std::round(h);
  if (std::fabs(h - nearest) < 1e-9) return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(std::ceil(h));
}

DescriptiveSummary descriptive_stats(std::span<const double> scores) {
  if (scores.empty()) throw std::invalid_argument("descriptive statistics need at least one value");
  std::vector<double> x(scores.begin(), scores.end());
  std::sort(x.begin(), x.end());
  const auto n = static_cast<double>(x.size());

  DescriptiveSummary s;
  s.n = x.size();
  s.pct_nil = static_cast<double>(std::count(x.begin(), x.end(), 0.0)) / n;
  s.mean = compensated_sum(x) / n;
  s.median = quantile_sorted(x, 0.5);
  s.q1 = quantile_sorted(x, 0.25);
  s.q3 = quantile_sorted(x, 0.75);
  s.iqr = s.q3 - s.q1;
  s.max = x.back();

  CompensatedSum m2, m3;
  for (double v : x) {
    const double d = v - s.mean;
    m2.add(d * d);
    m3.add(d * d * d);
  }
  if (x.size() > 1) s.stddev = std::sqrt(m2.value() / (n - 1.0));
  const double central2 = m2.value() / n;
  const double central3 = m3.value() / n;
  if (x.size() >= 3 && central2 > 0.0) {
    s.skewness = std::sqrt(n * (n - 1.0)) / (n - 2.0) * central3 / std::pow(central2, 1.5);
  }
  return s;
}

int count_stars(double p, std::span<const double> levels) {
  return static_cast<int>(std::count_if(levels.begin(), levels.end(), [p](double level) { return p <= level; }));
}

std::vector<std::uint64_t> rank_sum_null_counts(std::size_t m, std::size_t n) {
  // ways[k][s]: subsets of size k drawn from the ranks seen so far with rank
  // sum s. The U of a subset is its rank sum minus m(m+1)/2.
  const std::size_t total = m + n;
  const std::size_t max_sum = total * (total + 1) / 2;
  std::vector<std::vector<std::uint64_t>> ways(m + 1, std::vector<std::uint64_t>(max_sum + 1, 0));
  ways[0][0] = 1;
  for (std::size_t r = 1; r <= total; ++r) {
    for (std::size_t k = std::min(r, m); k >= 1; --k) {
      for (std::size_t s = max_sum; s >= r; --s) ways[k][s] += ways[k - 1][s - r];
    }
  }
  const std::size_t offset = m * (m + 1) / 2;
  std::vector<std::uint64_t> counts(m * n + 1, 0);
  for (std::size_t u = 0; u <= m * n; ++u) counts[u] = ways[m][u + offset];
  return counts;
}

double exact_two_sided_p(const std::vector<std::uint64_t>& counts, std::uint64_t u) {
  std::uint64_t total = 0, le = 0, ge = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    total += counts[k];
    if (k <= u) le += counts[k];
    if (k >= u) ge += counts[k];
  }
  return std::min(1.0, 2.0 * static_cast<double>(std::min(le, ge)) / static_cast<double>(total));
}

RankSumResult mann_whitney(std::span<const double> a, std::span<const double> b,
                           std::span<const double> significance_levels) {
  if (a.empty() || b.empty()) throw std::invalid_argument("rank-sum test needs two non-empty samples");
  const std::size_t na = a.size(), nb = b.size(), total = na + nb;

  struct Obs {
    double value;
    bool first;
  };
  std::vector<Obs> all;
  all.reserve(total);
  for (double v : a) all.push_back({v, true});
  for (double v : b) all.push_back({v, false});
  std::sort(all.begin(), all.end(), [](const Obs& x, const Obs& y) { return x.value < y.value; });

  double rank_sum_a = 0.0;
  double tie_term = 0.0;  // sum of t^3 - t over tie groups
  bool ties = false;
  for (std::size_t i = 0; i < total;) {
    std::size_t j = i;
    while (j < total && all[j].value == all[i].value) ++j;
    const double t = static_cast<double>(j - i);
    const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (all[k].first) rank_sum_a += midrank;
    }
    if (j - i > 1) {
      ties = true;
      tie_term += t * t * t - t;
    }
    i = j;
  }

  RankSumResult r;
  const double dna = static_cast<double>(na), dnb = static_cast<double>(nb), dn = static_cast<double>(total);
  r.u_statistic = rank_sum_a - dna * (dna + 1.0) / 2.0;

  if (!ties && total <= kExactRankSumLimit) {
    r.method = RankSumMethod::exact;
    r.p_value = exact_two_sided_p(rank_sum_null_counts(na, nb), static_cast<std::uint64_t>(std::llround(r.u_statistic)));
  } else {
    r.method = RankSumMethod::normal_approx;
    const double mean = dna * dnb / 2.0;
    const double variance = dna * dnb / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
    if (variance <= 0.0) {
      r.p_value = 1.0;
    } else {
      const double z = std::max(0.0, std::fabs(r.u_statistic - mean) - 0.5) / std::sqrt(variance);
      r.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    }
  }
  r.stars = count_stars(r.p_value, significance_levels);
  return r;
}

}  // namespace fss::stats
