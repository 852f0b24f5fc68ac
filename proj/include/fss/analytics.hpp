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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fss/index.hpp"
#include "fss/productivity.hpp"
#include "fss/stats.hpp"
#include "fss/types.hpp"

namespace fss {

/// A cohort member with everything the group comparisons need.
struct ScoredMember {
  std::string professor_id;
  std::string country;
  Gender gender = Gender::female;
  Rank rank = Rank::assistant;
  std::string sc;
  std::string discipline;
  double raw_fss = 0.0;
  double norm_fss = 0.0;
  double o_norm = 0.0;
  double fo_norm = 0.0;
  double ac_norm = 0.0;
  std::optional<double> aif_norm;
};

/// Members of non-degenerate SCs, roster order.
std::vector<ScoredMember> analysis_members(const CorpusIndex& index, const ScoreTable& scores);

enum class Metric { fss, o, fo, ac, aif };
std::string_view to_string(Metric m);
std::optional<double> metric_value(const ScoredMember& m, Metric metric);

struct LabeledScore {
  double score = 0.0;
  std::string group;
};

// ---------------------------------------------------------------- deciles

struct DecileRow {
  int decile = 0;  // 1..10, ascending score
  std::size_t n = 0;
  std::map<std::string, std::size_t> group_counts;
  std::map<std::string, double> group_shares;  // all zero in an empty decile
};

struct DecileDistribution {
  std::vector<DecileRow> rows;                    // always 10
  std::map<std::string, double> expected_share;   // overall share of each group
};

/// Decile of every score (1..10). A score lands in the first decile whose
/// upper boundary, the interpolated 0.1k quantile, is >= the score, so
/// tied scores always share a decile and deciles may differ in size.
std::vector<int> decile_assignment(std::span<const double> scores);

/// Throws std::invalid_argument when fewer than 10 scores are given.
DecileDistribution decile_distribution(std::span<const LabeledScore> scores);

// ------------------------------------------------------------ top shares

struct GroupShare {
  std::size_t size = 0;
  std::size_t in_class = 0;
  double share = 0.0;
};

struct TopShareRow {
  double threshold = 0.0;
  double cut_score = 0.0;  // smallest score inside the class
  std::size_t total = 0;
  std::size_t in_class = 0;
  double total_share = 0.0;
  std::map<std::string, GroupShare> groups;
};

/// Membership in the top-x class: score >= the (1 - x) quantile, ties at
/// the cut included.
std::vector<char> top_class_membership(std::span<const double> scores, double x);

std::vector<TopShareRow> top_share_analysis(std::span<const LabeledScore> scores, std::span<const double> thresholds);

// ------------------------------------------------------------ gap tables

enum class Grouping { overall, discipline, sc, rank };
std::string_view to_string(Grouping g);
std::optional<Grouping> parse_grouping(std::string_view s);

/// Men vs women inside one country and group. Deltas are M - F computed
/// on unrounded values; the test compares the two samples.
struct GapRow {
  std::string group;
  std::string country;
  std::size_t n_m = 0;
  std::size_t n_f = 0;
  std::optional<double> mean_m, mean_f, delta_mean;
  std::optional<double> median_m, median_f, delta_median;
  std::optional<stats::RankSumResult> test;
  bool empty_cell = false;
};

/// One gender across two countries: country_a - country_b.
struct BetweenCountryRow {
  std::string group;
  Gender gender = Gender::male;
  std::string country_a;
  std::string country_b;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::optional<double> mean_a, mean_b, delta_mean;
  std::optional<double> median_a, median_b, delta_median;
  std::optional<stats::RankSumResult> test;
  bool empty_cell = false;
};

struct GapReport {
  Metric metric = Metric::fss;
  Grouping grouping = Grouping::overall;
  std::vector<GapRow> within;
  std::vector<BetweenCountryRow> between;  // every country pair, ascending
};

/// Group keys ascend (ranks run full, associate, assistant); countries
/// ascend inside each group.
GapReport gap_report_by_group(std::span<const ScoredMember> members, Grouping grouping, Metric metric,
                              std::span<const double> significance_levels);

/// Descriptive statistics per country and gender plus the tests behind
/// the median deltas.
struct DescriptiveComparison {
  struct CountryBlock {
    std::string country;
    std::optional<stats::DescriptiveSummary> m, f;
    std::optional<stats::RankSumResult> test;  // M vs F
  };
  struct PairBlock {
    std::string country_a, country_b;
    std::optional<stats::RankSumResult> test_m, test_f;  // a vs b
  };
  Metric metric = Metric::fss;
  std::vector<CountryBlock> countries;
  std::vector<PairBlock> pairs;
};

DescriptiveComparison descriptive_by_gender_country(std::span<const ScoredMember> members, Metric metric,
                                                    std::span<const double> significance_levels);

// ----------------------------------------------------- female advantage

struct FemaleAdvantageRow {
  std::string country;
  std::string discipline;  // "Total" for the country-wide row
  std::size_t n_scs = 0;
  std::size_t count = 0;   // SCs where the female mean strictly exceeds the male mean
  double share = 0.0;
};

/// Counts from an SC-level gap report. SCs whose row lacks either mean are
/// left out of numerator and denominator.
std::vector<FemaleAdvantageRow> count_categories_female_advantage(
    const GapReport& per_sc, const std::map<std::string, std::string>& sc_discipline);

// ------------------------------------------------------- representation

struct RepresentationRow {
  std::string country;
  Rank rank = Rank::full;
  std::size_t current_f = 0, current_m = 0, current_total = 0;
  std::size_t expected_f = 0, expected_m = 0, expected_total = 0;
  double current_f_share = 0.0;
  double expected_f_share = 0.0;
  double delta_f_share = 0.0;  // current - expected
};

/// Members of `country` whose SC has at least `min_per_sc` members in
/// that country.
std::vector<ScoredMember> representation_cohort(std::span<const ScoredMember> members, const std::string& country,
                                                int min_per_sc);

/// Ranks one country's cohort by descending normalized FSS (ties: raw FSS
/// descending, then professor_id ascending) and fills the full, associate
/// and assistant classes in that order with as many people as each rank
/// currently holds. Rows run full, associate, assistant.
std::vector<RepresentationRow> representation_alignment(std::span<const ScoredMember> country_members);

}  // namespace fss
