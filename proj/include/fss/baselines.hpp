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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fss/index.hpp"

namespace fss {

/// Pool statistics for one (SC, year). Citation pools hold publications
/// with at least one citation; IF pools hold publications carrying a
/// journal impact factor.
struct BaselineCell {
  std::int64_t n_cited = 0;
  std::int64_t citation_sum = 0;
  std::int64_t n_with_if = 0;
  double if_sum = 0.0;

  bool operator==(const BaselineCell&) const = default;
};

/// Dense (SC, year) table of citation and impact-factor means.
class BaselineTable {
 public:
  BaselineTable() = default;
  BaselineTable(std::vector<std::string> sc_codes, int first_year, int years, std::vector<BaselineCell> cells);

  /// Absent when the pool is empty or the key is unknown.
  std::optional<double> citation_mean(ScId sc, int year) const;
  std::optional<double> if_mean(ScId sc, int year) const;
  std::optional<double> citation_mean(std::string_view sc, int year) const;
  std::optional<double> if_mean(std::string_view sc, int year) const;

  const BaselineCell& cell(ScId sc, int year) const { return cells_[slot(sc, year)]; }
  const std::vector<std::string>& sc_codes() const noexcept { return sc_codes_; }
  int first_year() const noexcept { return first_year_; }
  int years() const noexcept { return years_; }

  bool operator==(const BaselineTable&) const = default;

 private:
  std::size_t slot(ScId sc, int year) const {
    return static_cast<std::size_t>(sc) * static_cast<std::size_t>(years_) +
           static_cast<std::size_t>(year - first_year_);
  }
  std::optional<ScId> lookup(std::string_view sc, int year) const;

  std::vector<std::string> sc_codes_;
  int first_year_ = 0;
  int years_ = 0;
  std::vector<BaselineCell> cells_;
};

/// Parallel build over (SC, year) keys. Each key sums its pool in
/// ascending publication order, so the table is identical for any thread
/// count and equals serial::build_baselines bit for bit.
BaselineTable build_baselines(const CorpusIndex& index);

/// Convenience overload over bare records; the window spans the years
/// present.
BaselineTable build_baselines(std::span<const PublicationRecord> publications);

/// c / c̄. Zero for uncited papers. A multi-SC paper is divided by the
/// arithmetic mean of its SCs' citation means.
double normalize_citation(const PublicationRecord& publication, const BaselineTable& baselines);

/// journal_if over the mean of its SCs' IF means; absent without an IF.
std::optional<double> normalize_if(const PublicationRecord& publication, const BaselineTable& baselines);

/// Per-publication normalized citations and IFs for a whole corpus.
struct NormalizedImpact {
  std::vector<double> citations;
  std::vector<std::optional<double>> impact_factors;
};

NormalizedImpact normalize_impact(const CorpusIndex& index, const BaselineTable& baselines);

}  // namespace fss
