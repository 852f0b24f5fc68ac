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

#include "fss/baselines.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "fss/summation.hpp"

namespace fss {

BaselineTable::BaselineTable(std::vector<std::string> sc_codes, int first_year, int years,
                             std::vector<BaselineCell> cells)
    : sc_codes_(std::move(sc_codes)), first_year_(first_year), years_(years), cells_(std::move(cells)) {
  if (cells_.size() != sc_codes_.size() * static_cast<std::size_t>(years_)) {
    throw std::invalid_argument("baseline cell count does not match SC x year grid");
  }
}

std::optional<double> BaselineTable::citation_mean(ScId sc, int year) const {
  if (sc >= sc_codes_.size() || year < first_year_ || year >= first_year_ + years_) return std::nullopt;
  const BaselineCell& c = cells_[slot(sc, year)];
  if (c.n_cited == 0) return std::nullopt;
  return static_cast<double>(c.citation_sum) / static_cast<double>(c.n_cited);
}

std::optional<double> BaselineTable::if_mean(ScId sc, int year) const {
  if (sc >= sc_codes_.size() || year < first_year_ || year >= first_year_ + years_) return std::nullopt;
  const BaselineCell& c = cells_[slot(sc, year)];
  if (c.n_with_if == 0) return std::nullopt;
  return c.if_sum / static_cast<double>(c.n_with_if);
}

std::optional<ScId> BaselineTable::lookup(std::string_view sc, int) const {
  auto it = std::lower_bound(sc_codes_.begin(), sc_codes_.end(), sc);
  if (it == sc_codes_.end() || *it != sc) return std::nullopt;
  return static_cast<ScId>(it - sc_codes_.begin());
}

std::optional<double> BaselineTable::citation_mean(std::string_view sc, int year) const {
  auto id = lookup(sc, year);
  return id ? citation_mean(*id, year) : std::nullopt;
}

std::optional<double> BaselineTable::if_mean(std::string_view sc, int year) const {
  auto id = lookup(sc, year);
  return id ? if_mean(*id, year) : std::nullopt;
}

BaselineTable build_baselines(const CorpusIndex& index) {
  const int first_year = index.window_start();
  const int years = index.window_years();
  const std::size_t n_keys = index.sc_count() * static_cast<std::size_t>(years);
  const std::size_t n_pubs = index.publication_count();

  // Bucket publication indices by key; within a bucket they stay ascending.
  std::vector<std::size_t> offsets(n_keys + 1, 0);
  auto key_of = [&](ScId sc, int year) {
    return static_cast<std::size_t>(sc) * static_cast<std::size_t>(years) + static_cast<std::size_t>(year - first_year);
  };
  for (std::size_t p = 0; p < n_pubs; ++p) {
    const int year = index.publication(p).year;
    for (ScId sc : index.pub_scs(p)) ++offsets[key_of(sc, year) + 1];
  }
  for (std::size_t k = 0; k < n_keys; ++k) offsets[k + 1] += offsets[k];
  std::vector<std::uint32_t> members(offsets.back());
  {
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t p = 0; p < n_pubs; ++p) {
      const int year = index.publication(p).year;
      for (ScId sc : index.pub_scs(p)) members[cursor[key_of(sc, year)]++] = static_cast<std::uint32_t>(p);
    }
  }

  std::vector<BaselineCell> cells(n_keys);
  const auto n = static_cast<std::ptrdiff_t>(n_keys);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    BaselineCell cell;
    CompensatedSum if_sum;
    for (std::size_t m = offsets[k]; m < offsets[k + 1]; ++m) {
      const PublicationRecord& pub = index.publication(members[m]);
      if (pub.citations > 0) {
        ++cell.n_cited;
        cell.citation_sum += pub.citations;
      }
      if (pub.journal_if) {
        ++cell.n_with_if;
        if_sum.add(*pub.journal_if);
      }
    }
    cell.if_sum = if_sum.value();
    cells[static_cast<std::size_t>(k)] = cell;
  }
  return BaselineTable(index.sc_codes(), first_year, years, std::move(cells));
}

BaselineTable build_baselines(std::span<const PublicationRecord> publications) {
  std::set<std::string> codes;
  int lo = 0;
  int hi = -1;
  for (const auto& p : publications) {
    codes.insert(p.sc_list.begin(), p.sc_list.end());
    if (hi < lo) {
      lo = hi = p.year;
    } else {
      lo = std::min(lo, p.year);
      hi = std::max(hi, p.year);
    }
  }
  std::vector<std::string> sc_codes(codes.begin(), codes.end());
  const int years = hi - lo + 1;
  std::vector<BaselineCell> cells(sc_codes.size() * static_cast<std::size_t>(std::max(years, 0)));
  std::vector<CompensatedSum> if_sums(cells.size());
  for (const auto& p : publications) {
    for (const auto& code : p.sc_list) {
      const auto sc = static_cast<std::size_t>(std::lower_bound(sc_codes.begin(), sc_codes.end(), code) - sc_codes.begin());
      const std::size_t k = sc * static_cast<std::size_t>(years) + static_cast<std::size_t>(p.year - lo);
      if (p.citations > 0) {
        ++cells[k].n_cited;
        cells[k].citation_sum += p.citations;
      }
      if (p.journal_if) {
        ++cells[k].n_with_if;
        if_sums[k].add(*p.journal_if);
      }
    }
  }
  for (std::size_t k = 0; k < cells.size(); ++k) cells[k].if_sum = if_sums[k].value();
  return BaselineTable(std::move(sc_codes), lo, std::max(years, 0), std::move(cells));
}

namespace {

// Mean of the available per-SC baselines, summed in sc_list order.
template <typename MeanFn>
std::optional<double> combined_baseline(std::size_t n_scs, MeanFn&& mean_of) {
  double sum = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < n_scs; ++i) {
    if (auto m = mean_of(i)) {
      sum += *m;
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return sum / count;
}

}  // namespace

double normalize_citation(const PublicationRecord& pub, const BaselineTable& baselines) {
  if (pub.citations == 0) return 0.0;
  auto base = combined_baseline(pub.sc_list.size(),
                                [&](std::size_t i) { return baselines.citation_mean(pub.sc_list[i], pub.year); });
  if (!base) throw std::logic_error("cited publication " + pub.pub_id + " has no citation baseline");
  return static_cast<double>(pub.citations) / *base;
}

std::optional<double> normalize_if(const PublicationRecord& pub, const BaselineTable& baselines) {
  if (!pub.journal_if) return std::nullopt;
  auto base = combined_baseline(pub.sc_list.size(),
                                [&](std::size_t i) { return baselines.if_mean(pub.sc_list[i], pub.year); });
  if (!base) throw std::logic_error("publication " + pub.pub_id + " has no impact-factor baseline");
  return *pub.journal_if / *base;
}

NormalizedImpact normalize_impact(const CorpusIndex& index, const BaselineTable& baselines) {
  const std::size_t n = index.publication_count();
  NormalizedImpact out;
  out.citations.resize(n);
  out.impact_factors.resize(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto p = static_cast<std::size_t>(i);
    const PublicationRecord& pub = index.publication(p);
    const auto scs = index.pub_scs(p);
    if (pub.citations == 0) {
      out.citations[p] = 0.0;
    } else {
      auto base = combined_baseline(scs.size(), [&](std::size_t k) { return baselines.citation_mean(scs[k], pub.year); });
      assert(base);
      out.citations[p] = static_cast<double>(pub.citations) / base.value();
    }
    if (pub.journal_if) {
      auto base = combined_baseline(scs.size(), [&](std::size_t k) { return baselines.if_mean(scs[k], pub.year); });
      assert(base);
      out.impact_factors[p] = *pub.journal_if / base.value();
    }
  }
  return out;
}

}  // namespace fss
