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

#include "fss/analytics.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fss/summation.hpp"

namespace fss {

std::vector<ScoredMember> analysis_members(const CorpusIndex& index, const ScoreTable& scores) {
  std::vector<ScoredMember> out;
  out.reserve(scores.rows.size());
  for (const ScoreSet& s : scores.rows) {
    if (scores.is_degenerate(s.sc)) continue;
    const ProfessorRecord& prof = index.professor(s.professor);
    ScoredMember m;
    m.professor_id = prof.professor_id;
    m.country = prof.country;
    m.gender = prof.gender;
    m.rank = prof.rank;
    m.sc = index.sc_code(s.sc);
    m.discipline = index.sc_info(s.sc).discipline;
    m.raw_fss = s.raw_fss;
    m.norm_fss = s.norm_fss;
    m.o_norm = s.o_norm;
    m.fo_norm = s.fo_norm;
    m.ac_norm = s.ac_norm;
    m.aif_norm = s.aif_norm;
    out.push_back(std::move(m));
  }
  return out;
}

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::fss: return "FSS";
    case Metric::o: return "O";
    case Metric::fo: return "FO";
    case Metric::ac: return "AC";
    case Metric::aif: return "AIF";
  }
  return "";
}

std::optional<double> metric_value(const ScoredMember& m, Metric metric) {
  switch (metric) {
    case Metric::fss: return m.norm_fss;
    case Metric::o: return m.o_norm;
    case Metric::fo: return m.fo_norm;
    case Metric::ac: return m.ac_norm;
    case Metric::aif: return m.aif_norm;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- deciles

std::vector<int> decile_assignment(std::span<const double> scores) {
  const std::size_t n = scores.size();
  if (n < 10) throw std::invalid_argument("decile distribution needs at least 10 scores");
  std::vector<double> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end());
  // The k/10 quantile lies in [x[lo], x[lo + 1]] with lo = floor((n-1)k/10)
  // and no observation strictly inside, so score <= boundary exactly when
  // score <= x[lo]. Integer arithmetic keeps this exact.
  std::array<double, 9> lower{};
  for (std::size_t k = 1; k <= 9; ++k) lower[k - 1] = sorted[(n - 1) * k / 10];
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    int d = 1;
    for (double b : lower) d += scores[i] > b ? 1 : 0;
    out[i] = d;
  }
  return out;
}

DecileDistribution decile_distribution(std::span<const LabeledScore> scores) {
  std::vector<double> values;
  values.reserve(scores.size());
  for (const auto& s : scores) values.push_back(s.score);
  const std::vector<int> decile = decile_assignment(values);

  std::set<std::string> groups;
  std::map<std::string, std::size_t> group_totals;
  for (const auto& s : scores) {
    groups.insert(s.group);
    ++group_totals[s.group];
  }

  DecileDistribution out;
  out.rows.resize(10);
  for (int d = 0; d < 10; ++d) {
    out.rows[d].decile = d + 1;
    for (const auto& g : groups) out.rows[d].group_counts[g] = 0;
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    DecileRow& row = out.rows[static_cast<std::size_t>(decile[i] - 1)];
    ++row.n;
    ++row.group_counts[scores[i].group];
  }
  for (DecileRow& row : out.rows) {
    for (const auto& [g, c] : row.group_counts) {
      row.group_shares[g] = row.n ? static_cast<double>(c) / static_cast<double>(row.n) : 0.0;
    }
  }
  for (const auto& [g, c] : group_totals) {
    out.expected_share[g] = static_cast<double>(c) / static_cast<double>(scores.size());
  }
  return out;
}

// ------------------------------------------------------------ top shares

namespace {

double top_cut(std::vector<double> sorted, double x) {
  std::sort(sorted.begin(), sorted.end());
  return sorted[stats::upper_order_index(sorted.size(), 1.0 - x)];
}

}  // namespace

std::vector<char> top_class_membership(std::span<const double> scores, double x) {
  std::vector<char> out(scores.size(), 0);
  if (scores.empty()) return out;
  const double cut = top_cut({scores.begin(), scores.end()}, x);
  for (std::size_t i = 0; i < scores.size(); ++i) out[i] = scores[i] >= cut ? 1 : 0;
  return out;
}

std::vector<TopShareRow> top_share_analysis(std::span<const LabeledScore> scores, std::span<const double> thresholds) {
  std::vector<TopShareRow> out;
  if (scores.empty()) return out;
  std::vector<double> values;
  values.reserve(scores.size());
  for (const auto& s : scores) values.push_back(s.score);
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());

  for (double x : thresholds) {
    TopShareRow row;
    row.threshold = x;
    row.cut_score = sorted[stats::upper_order_index(sorted.size(), 1.0 - x)];
    row.total = scores.size();
    for (const auto& s : scores) {
      GroupShare& g = row.groups[s.group];
      ++g.size;
      if (s.score >= row.cut_score) {
        ++g.in_class;
        ++row.in_class;
      }
    }
    row.total_share = static_cast<double>(row.in_class) / static_cast<double>(row.total);
    for (auto& [_, g] : row.groups) g.share = static_cast<double>(g.in_class) / static_cast<double>(g.size);
    out.push_back(std::move(row));
  }
  return out;
}

// ------------------------------------------------------------ gap tables

std::string_view to_string(Grouping g) {
  switch (g) {
    case Grouping::overall: return "overall";
    case Grouping::discipline: return "discipline";
    case Grouping::sc: return "sc";
    case Grouping::rank: return "rank";
  }
  return "";
}

std::optional<Grouping> parse_grouping(std::string_view s) {
  for (Grouping g : {Grouping::overall, Grouping::discipline, Grouping::sc, Grouping::rank}) {
    if (to_string(g) == s) return g;
  }
  return std::nullopt;
}

namespace {

struct SampleStats {
  std::optional<double> mean, median;
};

SampleStats summarize(std::vector<double>& xs) {
  if (xs.empty()) return {};
  std::sort(xs.begin(), xs.end());
  return {compensated_sum(xs) / static_cast<double>(xs.size()), stats::quantile_sorted(xs, 0.5)};
}

std::optional<double> difference(const std::optional<double>& a, const std::optional<double>& b) {
  if (!a || !b) return std::nullopt;
  return *a - *b;
}

// Group key and its sort position.
std::pair<int, std::string> group_key(const ScoredMember& m, Grouping grouping) {
  switch (grouping) {
    case Grouping::overall: return {0, "All"};
    case Grouping::discipline: return {0, m.discipline};
    case Grouping::sc: return {0, m.sc};
    case Grouping::rank:
      return {m.rank == Rank::full ? 0 : m.rank == Rank::associate ? 1 : 2, std::string(to_string(m.rank))};
  }
  return {0, ""};
}

using Cell = std::pair<std::vector<double>, std::vector<double>>;  // (M, F)

}  // namespace

GapReport gap_report_by_group(std::span<const ScoredMember> members, Grouping grouping, Metric metric,
                              std::span<const double> levels) {
  std::map<std::pair<int, std::string>, std::map<std::string, Cell>> cells;
  std::set<std::string> countries;
  for (const auto& m : members) countries.insert(m.country);
  for (const auto& m : members) {
    auto v = metric_value(m, metric);
    auto& by_country = cells[group_key(m, grouping)];
    for (const auto& c : countries) by_country[c];
    if (!v) continue;
    Cell& cell = by_country[m.country];
    (m.gender == Gender::male ? cell.first : cell.second).push_back(*v);
  }

  GapReport report;
  report.metric = metric;
  report.grouping = grouping;
  for (auto& [key, by_country] : cells) {
    for (auto& [country, cell] : by_country) {
      GapRow row;
      row.group = key.second;
      row.country = country;
      row.n_m = cell.first.size();
      row.n_f = cell.second.size();
      row.empty_cell = cell.first.empty() || cell.second.empty();
      if (!row.empty_cell) row.test = stats::mann_whitney(cell.first, cell.second, levels);
      auto sm = summarize(cell.first);
      auto sf = summarize(cell.second);
      row.mean_m = sm.mean;
      row.mean_f = sf.mean;
      row.median_m = sm.median;
      row.median_f = sf.median;
      row.delta_mean = difference(sm.mean, sf.mean);
      row.delta_median = difference(sm.median, sf.median);
      report.within.push_back(std::move(row));
    }
    std::vector<std::string> names;
    for (const auto& [country, _] : by_country) names.push_back(country);
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        for (Gender g : {Gender::male, Gender::female}) {
          auto& a = g == Gender::male ? by_country[names[i]].first : by_country[names[i]].second;
          auto& b = g == Gender::male ? by_country[names[j]].first : by_country[names[j]].second;
          BetweenCountryRow row;
          row.group = key.second;
          row.gender = g;
          row.country_a = names[i];
          row.country_b = names[j];
          row.n_a = a.size();
          row.n_b = b.size();
          row.empty_cell = a.empty() || b.empty();
          if (!row.empty_cell) row.test = stats::mann_whitney(a, b, levels);
          auto sa = summarize(a);
          auto sb = summarize(b);
          row.mean_a = sa.mean;
          row.mean_b = sb.mean;
          row.median_a = sa.median;
          row.median_b = sb.median;
          row.delta_mean = difference(sa.mean, sb.mean);
          row.delta_median = difference(sa.median, sb.median);
          report.between.push_back(std::move(row));
        }
      }
    }
  }
  return report;
}

DescriptiveComparison descriptive_by_gender_country(std::span<const ScoredMember> members, Metric metric,
                                                    std::span<const double> levels) {
  std::map<std::string, Cell> cells;
  for (const auto& m : members) {
    auto v = metric_value(m, metric);
    Cell& cell = cells[m.country];
    if (!v) continue;
    (m.gender == Gender::male ? cell.first : cell.second).push_back(*v);
  }
  DescriptiveComparison out;
  out.metric = metric;
  for (const auto& [country, cell] : cells) {
    DescriptiveComparison::CountryBlock block;
    block.country = country;
    if (!cell.first.empty()) block.m = stats::descriptive_stats(cell.first);
    if (!cell.second.empty()) block.f = stats::descriptive_stats(cell.second);
    if (block.m && block.f) block.test = stats::mann_whitney(cell.first, cell.second, levels);
    out.countries.push_back(std::move(block));
  }
  for (auto a = cells.begin(); a != cells.end(); ++a) {
    for (auto b = std::next(a); b != cells.end(); ++b) {
      DescriptiveComparison::PairBlock pair;
      pair.country_a = a->first;
      pair.country_b = b->first;
      if (!a->second.first.empty() && !b->second.first.empty()) {
        pair.test_m = stats::mann_whitney(a->second.first, b->second.first, levels);
      }
      if (!a->second.second.empty() && !b->second.second.empty()) {
        pair.test_f = stats::mann_whitney(a->second.second, b->second.second, levels);
      }
      out.pairs.push_back(std::move(pair));
    }
  }
  return out;
}

// ----------------------------------------------------- female advantage

std::vector<FemaleAdvantageRow> count_categories_female_advantage(
    const GapReport& per_sc, const std::map<std::string, std::string>& sc_discipline) {
  // country -> discipline -> (SCs, SCs with F ahead)
  std::map<std::string, std::map<std::string, std::pair<std::size_t, std::size_t>>> tally;
  for (const GapRow& row : per_sc.within) {
    if (!row.mean_m || !row.mean_f) continue;
    auto it = sc_discipline.find(row.group);
    const std::string discipline = it == sc_discipline.end() ? "Unclassified" : it->second;
    auto& t = tally[row.country][discipline];
    ++t.first;
    if (*row.mean_f > *row.mean_m) ++t.second;
  }
  std::vector<FemaleAdvantageRow> out;
  for (const auto& [country, by_discipline] : tally) {
    std::size_t total_scs = 0, total_count = 0;
    for (const auto& [discipline, t] : by_discipline) {
      out.push_back({country, discipline, t.first, t.second,
                     static_cast<double>(t.second) / static_cast<double>(t.first)});
      total_scs += t.first;
      total_count += t.second;
    }
    out.push_back({country, "Total", total_scs, total_count,
                   static_cast<double>(total_count) / static_cast<double>(total_scs)});
  }
  return out;
}

// ------------------------------------------------------- representation

std::vector<ScoredMember> representation_cohort(std::span<const ScoredMember> members, const std::string& country,
                                                int min_per_sc) {
  std::map<std::string, std::size_t> sc_size;
  for (const auto& m : members) {
    if (m.country == country) ++sc_size[m.sc];
  }
  std::vector<ScoredMember> out;
  for (const auto& m : members) {
    if (m.country == country && sc_size[m.sc] >= static_cast<std::size_t>(min_per_sc)) out.push_back(m);
  }
  return out;
}

std::vector<RepresentationRow> representation_alignment(std::span<const ScoredMember> cohort) {
  std::vector<const ScoredMember*> ranked;
  ranked.reserve(cohort.size());
  for (const auto& m : cohort) ranked.push_back(&m);
  std::sort(ranked.begin(), ranked.end(), [](const ScoredMember* a, const ScoredMember* b) {
    if (a->norm_fss != b->norm_fss) return a->norm_fss > b->norm_fss;
    if (a->raw_fss != b->raw_fss) return a->raw_fss > b->raw_fss;
    return a->professor_id < b->professor_id;
  });

  const std::string country = cohort.empty() ? std::string() : cohort.front().country;
  std::vector<RepresentationRow> rows;
  std::size_t next = 0;
  for (Rank rank : kAllRanks) {
    RepresentationRow row;
    row.country = country;
    row.rank = rank;
    for (const auto& m : cohort) {
      if (m.rank != rank) continue;
      ++row.current_total;
      (m.gender == Gender::female ? row.current_f : row.current_m) += 1;
    }
    for (std::size_t k = 0; k < row.current_total; ++k, ++next) {
      ++row.expected_total;
      (ranked[next]->gender == Gender::female ? row.expected_f : row.expected_m) += 1;
    }
    if (row.current_total) {
      row.current_f_share = static_cast<double>(row.current_f) / static_cast<double>(row.current_total);
      row.expected_f_share = static_cast<double>(row.expected_f) / static_cast<double>(row.expected_total);
    }
    row.delta_f_share = row.current_f_share - row.expected_f_share;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fss
