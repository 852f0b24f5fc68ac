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
#include <vector>

#include "fss/baselines.hpp"
#include "fss/cohort.hpp"
#include "fss/index.hpp"

namespace fss {

/// Scores of one cohort member. Raw values are per-year rates per unit of
/// research cost; normalized values divide by the mean over productive
/// members of the same SC.
struct ScoreSet {
  std::uint32_t professor = 0;  // roster index
  ScId sc = 0;
  double raw_fss = 0.0;
  double norm_fss = 0.0;
  double o_raw = 0.0;   // publications per year
  double fo_raw = 0.0;  // fractional publications per year
  double ac_raw = 0.0;  // mean normalized citations per publication
  std::optional<double> aif_raw;  // mean normalized IF over IF-bearing publications
  double o_norm = 0.0;
  double fo_norm = 0.0;
  double ac_norm = 0.0;
  std::optional<double> aif_norm;
  std::uint32_t short_byline_links = 0;  // credits taken from the short-byline rule

  bool operator==(const ScoreSet&) const = default;
};

struct ScoreTable {
  std::vector<ScoreSet> rows;           // one per cohort member, roster order
  std::vector<ScId> degenerate_scs;     // SCs where nobody has a positive raw FSS

  bool is_degenerate(ScId sc) const;
  bool operator==(const ScoreTable&) const = default;
};

/// One publication's contribution to a professor's FSS.
struct CreditedCitation {
  double normalized_citation = 0.0;  // c / c̄
  double fraction = 0.0;             // f
};

/// [1 / (share * salary + capital)] * (1 / years) * sum(c/c̄ * f).
/// `labour_share` is the fraction of salary charged to research.
double compute_raw_fss(double salary, double capital, double labour_share, int years,
                       std::span<const CreditedCitation> publications);

/// Salary from the roster, else the (country, rank) table. Throws
/// ComputeError when neither exists.
double resolve_salary(const ProfessorRecord& professor, const CostParameters& cost);

/// Divides each present value by the mean of the positive present values in
/// its group. Groups without a positive value map every present value to 0
/// and are reported through `degenerate` when given. Absent values stay
/// absent.
std::vector<std::optional<double>> normalize_by_group(std::span<const std::optional<double>> values,
                                                      std::span<const std::uint32_t> groups,
                                                      std::vector<std::uint32_t>* degenerate = nullptr);

/// FSS within-SC normalization over a flat score vector.
std::vector<double> normalize_within_sc(std::span<const double> raw, std::span<const std::uint32_t> sc,
                                        std::vector<std::uint32_t>* degenerate = nullptr);

/// Mean of member scores and member count.
struct UnitScore {
  std::size_t rs = 0;
  double fss_a = 0.0;
};

/// Throws std::invalid_argument for an empty unit.
UnitScore aggregate_unit_fss(std::span<const double> member_norm_scores);

/// Full per-professor scoring of a selected cohort. OpenMP over professors
/// and SCs; identical output for every thread count.
ScoreTable compute_scores(const CorpusIndex& index, const CohortSelection& cohort, const NormalizedImpact& impact);

}  // namespace fss
