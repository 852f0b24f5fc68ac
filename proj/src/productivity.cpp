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

#include "fss/productivity.hpp"

#include <algorithm>
#include <stdexcept>

#include "fss/credit.hpp"
#include "fss/error.hpp"
#include "fss/summation.hpp"

namespace fss {

bool ScoreTable::is_degenerate(ScId sc) const {
  return std::binary_search(degenerate_scs.begin(), degenerate_scs.end(), sc);
}

double compute_raw_fss(double salary, double capital, double labour_share, int years,
                       std::span<const CreditedCitation> publications) {
  if (years < 1) throw std::invalid_argument("years of activity must be positive");
  CompensatedSum sum;
  for (const auto& p : publications) sum.add(p.normalized_citation * p.fraction);
  return sum.value() / ((labour_share * salary + capital) * years);
}

double resolve_salary(const ProfessorRecord& professor, const CostParameters& cost) {
  if (professor.salary) return *professor.salary;
  if (auto s = cost.salary_for(professor.country, professor.rank)) return *s;
  throw ComputeError("no salary for professor " + professor.professor_id + " (country " + professor.country +
                     ", rank " + std::string(to_string(professor.rank)) + ")");
}

std::vector<std::optional<double>> normalize_by_group(std::span<const std::optional<double>> values,
                                                      std::span<const std::uint32_t> groups,
                                                      std::vector<std::uint32_t>* degenerate) {
  if (values.size() != groups.size()) throw std::invalid_argument("values and groups differ in length");
  const std::uint32_t n_groups =
      groups.empty() ? 0 : *std::max_element(groups.begin(), groups.end()) + 1;

  // Members of each group in input order.
  std::vector<std::size_t> offsets(n_groups + 1, 0);
  for (auto g : groups) ++offsets[g + 1];
  for (std::uint32_t g = 0; g < n_groups; ++g) offsets[g + 1] += offsets[g];
  std::vector<std::size_t> members(values.size());
  {
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < groups.size(); ++i) members[cursor[groups[i]]++] = i;
  }

  std::vector<std::optional<double>> out(values.size());
  std::vector<char> flagged(n_groups, 0);
  const auto count = static_cast<std::ptrdiff_t>(n_groups);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t gi = 0; gi < count; ++gi) {
    const auto g = static_cast<std::size_t>(gi);
    if (offsets[g] == offsets[g + 1]) continue;
    CompensatedSum sum;
    std::size_t positive = 0;
    for (std::size_t m = offsets[g]; m < offsets[g + 1]; ++m) {
      const auto& v = values[members[m]];
      if (v && *v > 0.0) {
        sum.add(*v);
        ++positive;
      }
    }
    if (positive == 0) {
      flagged[g] = 1;
      for (std::size_t m = offsets[g]; m < offsets[g + 1]; ++m) {
        if (values[members[m]]) out[members[m]] = 0.0;
      }
      continue;
    }
    const double mean = sum.value() / static_cast<double>(positive);
    for (std::size_t m = offsets[g]; m < offsets[g + 1]; ++m) {
      const auto& v = values[members[m]];
      if (v) out[members[m]] = *v / mean;
    }
  }
  if (degenerate) {
    degenerate->clear();
    for (std::uint32_t g = 0; g < n_groups; ++g) {
      if (flagged[g]) degenerate->push_back(g);
    }
  }
  return out;
}

std::vector<double> normalize_within_sc(std::span<const double> raw, std::span<const std::uint32_t> sc,
                                        std::vector<std::uint32_t>* degenerate) {
  std::vector<std::optional<double>> values(raw.begin(), raw.end());
  auto normalized = normalize_by_group(values, sc, degenerate);
  std::vector<double> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) out[i] = *normalized[i];
  return out;
}

UnitScore aggregate_unit_fss(std::span<const double> member_norm_scores) {
  if (member_norm_scores.empty()) throw std::invalid_argument("cannot aggregate an empty unit");
  return {member_norm_scores.size(),
          compensated_sum(member_norm_scores) / static_cast<double>(member_norm_scores.size())};
}

ScoreTable compute_scores(const CorpusIndex& index, const CohortSelection& cohort, const NormalizedImpact& impact) {
  const Config& cfg = index.config();
  const std::size_t n = cohort.members.size();
  ScoreTable table;
  table.rows.resize(n);

  // Resolve salaries up front so a missing one surfaces as an exception
  // outside the parallel region.
  std::vector<double> cost(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ProfessorRecord& prof = index.professor(cohort.members[i]);
    cost[i] = cfg.analysis.labour_research_share * resolve_salary(prof, cfg.cost) + cfg.cost.capital_per_year;
  }

  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const std::uint32_t p = cohort.members[i];
    const ProfessorRecord& prof = index.professor(p);
    CompensatedSum weighted, fractions, citations, impact_factors;
    std::size_t n_pubs = 0;
    std::size_t n_if = 0;
    std::uint32_t short_links = 0;
    for (const Authorship& a : index.authorships(p)) {
      const PublicationRecord& pub = index.publication(a.pub);
      const OrderingConvention convention = index.pub_convention(a.pub);
      const double f = fractional_contribution(static_cast<int>(a.position), pub.author_count, convention,
                                               pub.collaboration, cfg.weights);
      if (uses_short_byline_rule(pub.author_count, convention, pub.collaboration)) ++short_links;
      const double c = impact.citations[a.pub];
      weighted.add(c * f);
      fractions.add(f);
      citations.add(c);
      ++n_pubs;
      if (const auto& jif = impact.impact_factors[a.pub]) {
        impact_factors.add(*jif);
        ++n_if;
      }
    }
    ScoreSet& s = table.rows[i];
    const double t = prof.years_active;
    s.professor = p;
    s.sc = cohort.classification[p]->sc;
    s.raw_fss = weighted.value() / (cost[i] * t);
    s.o_raw = static_cast<double>(n_pubs) / t;
    s.fo_raw = fractions.value() / t;
    s.ac_raw = n_pubs ? citations.value() / static_cast<double>(n_pubs) : 0.0;
    if (n_if) s.aif_raw = impact_factors.value() / static_cast<double>(n_if);
    s.short_byline_links = short_links;
  }

  std::vector<std::uint32_t> groups(n);
  std::vector<std::optional<double>> fss(n), o(n), fo(n), ac(n), aif(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ScoreSet& s = table.rows[i];
    groups[i] = s.sc;
    fss[i] = s.raw_fss;
    o[i] = s.o_raw;
    fo[i] = s.fo_raw;
    ac[i] = s.ac_raw;
    aif[i] = s.aif_raw;
  }
  auto fss_norm = normalize_by_group(fss, groups, &table.degenerate_scs);
  auto o_norm = normalize_by_group(o, groups);
  auto fo_norm = normalize_by_group(fo, groups);
  auto ac_norm = normalize_by_group(ac, groups);
  auto aif_norm = normalize_by_group(aif, groups);
  for (std::size_t i = 0; i < n; ++i) {
    ScoreSet& s = table.rows[i];
    s.norm_fss = *fss_norm[i];
    s.o_norm = *o_norm[i];
    s.fo_norm = *fo_norm[i];
    s.ac_norm = *ac_norm[i];
    s.aif_norm = aif_norm[i];
  }
  return table;
}

}  // namespace fss
