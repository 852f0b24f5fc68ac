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

// Independent reference computations used only by tests. Nothing here
// calls into the engine beyond the plain record types.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fss/corpus.hpp"

namespace fss::oracle {

/// Byline weights written out case by case.
std::vector<double> byline_weights(int n, bool positional, bool extramural);

struct OracleScore {
  std::string sc;
  double raw_fss = 0.0;
  double norm_fss = 0.0;
  double o_raw = 0.0, fo_raw = 0.0, ac_raw = 0.0;
  std::optional<double> aif_raw;
  double o_norm = 0.0, fo_norm = 0.0, ac_norm = 0.0;
  std::optional<double> aif_norm;
};

struct OracleResult {
  std::map<std::string, OracleScore> scores;              // cohort members by professor_id
  std::map<std::pair<std::string, std::string>, double> unit_fss;  // (country, gender) -> mean norm_fss
};

/// Eligibility, classification, SC retention, scoring and unit
/// aggregation recomputed from the raw tables with plain loops.
OracleResult recompute(const Corpus& corpus);

/// Exact two-sided rank-sum p by enumerating every split of the pooled
/// sample (bitmask over at most 30 observations).
double enumerate_rank_sum_p(const std::vector<double>& a, const std::vector<double>& b);

/// Two-sided permutation p: share of random relabellings whose U lies at
/// least as far from its mean as the observed U.
double permutation_rank_sum_p(const std::vector<double>& a, const std::vector<double>& b, std::size_t permutations,
                              std::uint64_t seed);

}  // namespace fss::oracle
