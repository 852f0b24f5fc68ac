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

#include "fss/serial.hpp"

#include <algorithm>
#include <map>

#include "fss/credit.hpp"
#include "fss/summation.hpp"

namespace fss::serial {

BaselineTable build_baselines(const CorpusIndex& index) {
  const int first = index.window_start();
  const int years = index.window_years();
  std::vector<BaselineCell> cells(index.sc_count() * static_cast<std::size_t>(years));
  std::vector<CompensatedSum> if_sums(cells.size());
  for (std::size_t p = 0; p < index.publication_count(); ++p) {
    const PublicationRecord& pub = index.publication(p);
    for (ScId sc : index.pub_scs(p)) {
      const std::size_t k = static_cast<std::size_t>(sc) * static_cast<std::size_t>(years) +
                            static_cast<std::size_t>(pub.year - first);
      if (pub.citations > 0) {
        cells[k].n_cited += 1;
        cells[k].citation_sum += pub.citations;
      }
      if (pub.journal_if) {
        cells[k].n_with_if += 1;
        if_sums[k].add(*pub.journal_if);
      }
    }
  }
  for (std::size_t k = 0; k < cells.size(); ++k) cells[k].if_sum = if_sums[k].value();
  return BaselineTable(index.sc_codes(), first, years, std::move(cells));
}

NormalizedImpact normalize_impact(const CorpusIndex& index, const BaselineTable& baselines) {
  NormalizedImpact out;
  out.citations.reserve(index.publication_count());
  out.impact_factors.reserve(index.publication_count());
  for (std::size_t p = 0; p < index.publication_count(); ++p) {
    const PublicationRecord& pub = index.publication(p);
    double cit_sum = 0.0, if_sum = 0.0;
    int cit_n = 0, if_n = 0;
    for (ScId sc : index.pub_scs(p)) {
      if (auto m = baselines.citation_mean(sc, pub.year)) {
        cit_sum += *m;
        ++cit_n;
      }
      if (auto m = baselines.if_mean(sc, pub.year)) {
        if_sum += *m;
        ++if_n;
      }
    }
    out.citations.push_back(pub.citations == 0 ? 0.0 : static_cast<double>(pub.citations) / (cit_sum / cit_n));
    out.impact_factors.push_back(pub.journal_if ? std::optional<double>(*pub.journal_if / (if_sum / if_n))
                                                : std::nullopt);
  }
  return out;
}

std::vector<std::optional<ScAssignment>> classify_professors(const CorpusIndex& index,
                                                             std::span<const double> normalized_citations,
                                                             const std::vector<char>& eligible) {
  std::vector<std::optional<ScAssignment>> out(index.professor_count());
  for (std::size_t p = 0; p < index.professor_count(); ++p) {
    if (!eligible[p]) continue;
    std::map<ScId, std::vector<double>> per_sc;
    for (const Authorship& a : index.authorships(p)) {
      for (ScId sc : index.pub_scs(a.pub)) per_sc[sc].push_back(normalized_citations[a.pub]);
    }
    if (per_sc.empty()) continue;
    std::size_t top = 0;
    for (const auto& [_, v] : per_sc) top = std::max(top, v.size());
    std::vector<std::pair<ScId, double>> tied;
    for (auto& [sc, v] : per_sc) {
      if (v.size() != top) continue;
      std::sort(v.begin(), v.end());
      tied.emplace_back(sc, compensated_sum(v));
    }
    auto best = tied.front();
    for (const auto& cand : tied) {
      if (cand.second > best.second) best = cand;
    }
    out[p] = ScAssignment{best.first, tied.size() > 1};
  }
  return out;
}

ScoreTable compute_scores(const CorpusIndex& index, const CohortSelection& cohort, const NormalizedImpact& impact) {
  const Config& cfg = index.config();
  ScoreTable table;
  for (std::uint32_t p : cohort.members) {
    const ProfessorRecord& prof = index.professor(p);
    const double cost = cfg.analysis.labour_research_share * resolve_salary(prof, cfg.cost) + cfg.cost.capital_per_year;
    CompensatedSum weighted, fractions, citations, impact_factors;
    std::size_t n_pubs = 0, n_if = 0;
    std::uint32_t short_links = 0;
    for (const Authorship& a : index.authorships(p)) {
      const PublicationRecord& pub = index.publication(a.pub);
      const auto convention = index.pub_convention(a.pub);
      const double f = fractional_contribution(static_cast<int>(a.position), pub.author_count, convention,
                                               pub.collaboration, cfg.weights);
      short_links += uses_short_byline_rule(pub.author_count, convention, pub.collaboration) ? 1 : 0;
      weighted.add(impact.citations[a.pub] * f);
      fractions.add(f);
      citations.add(impact.citations[a.pub]);
      ++n_pubs;
      if (impact.impact_factors[a.pub]) {
        impact_factors.add(*impact.impact_factors[a.pub]);
        ++n_if;
      }
    }
    ScoreSet s;
    const double t = prof.years_active;
    s.professor = p;
    s.sc = cohort.classification[p]->sc;
    s.raw_fss = weighted.value() / (cost * t);
    s.o_raw = static_cast<double>(n_pubs) / t;
    s.fo_raw = fractions.value() / t;
    s.ac_raw = n_pubs ? citations.value() / static_cast<double>(n_pubs) : 0.0;
    if (n_if) s.aif_raw = impact_factors.value() / static_cast<double>(n_if);
    s.short_byline_links = short_links;
    table.rows.push_back(s);
  }

  // Per-SC pools over positive values, members in row order.
  std::map<ScId, std::vector<std::size_t>> by_sc;
  for (std::size_t i = 0; i < table.rows.size(); ++i) by_sc[table.rows[i].sc].push_back(i);
  auto positive_mean = [&](const std::vector<std::size_t>& rows, auto&& get) -> std::optional<double> {
    CompensatedSum sum;
    std::size_t n = 0;
    for (std::size_t i : rows) {
      std::optional<double> v = get(table.rows[i]);
      if (v && *v > 0.0) {
        sum.add(*v);
        ++n;
      }
    }
    if (n == 0) return std::nullopt;
    return sum.value() / static_cast<double>(n);
  };
  for (const auto& [sc, rows] : by_sc) {
    auto fss_mean = positive_mean(rows, [](const ScoreSet& s) { return std::optional<double>(s.raw_fss); });
    auto o_mean = positive_mean(rows, [](const ScoreSet& s) { return std::optional<double>(s.o_raw); });
    auto fo_mean = positive_mean(rows, [](const ScoreSet& s) { return std::optional<double>(s.fo_raw); });
    auto ac_mean = positive_mean(rows, [](const ScoreSet& s) { return std::optional<double>(s.ac_raw); });
    auto aif_mean = positive_mean(rows, [](const ScoreSet& s) { return s.aif_raw; });
    if (!fss_mean) table.degenerate_scs.push_back(sc);
    for (std::size_t i : rows) {
      ScoreSet& s = table.rows[i];
      s.norm_fss = fss_mean ? s.raw_fss / *fss_mean : 0.0;
      s.o_norm = o_mean ? s.o_raw / *o_mean : 0.0;
      s.fo_norm = fo_mean ? s.fo_raw / *fo_mean : 0.0;
      s.ac_norm = ac_mean ? s.ac_raw / *ac_mean : 0.0;
      if (s.aif_raw) s.aif_norm = aif_mean ? *s.aif_raw / *aif_mean : 0.0;
    }
  }
  return table;
}

}  // namespace fss::serial
