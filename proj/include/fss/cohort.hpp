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

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fss/classification.hpp"
#include "fss/index.hpp"

namespace fss {

namespace rule {
inline constexpr const char* kMinYears = "min-years";
inline constexpr const char* kMinOnePublication = "min-one-publication";
inline constexpr const char* kExcludedSc = "excluded-sc";
inline constexpr const char* kMinScSize = "min-sc-size";
inline constexpr const char* kBothGenders = "both-genders-per-country";
inline constexpr const char* kScDropped = "sc-dropped";
}  // namespace rule

/// One excluded professor or subject category and the rule that removed it.
struct Exclusion {
  std::string key;
  std::string rule;

  bool operator==(const Exclusion&) const = default;
};

struct EligibilityResult {
  std::vector<char> eligible;  // per roster index
  std::vector<Exclusion> log;  // roster order
};

/// Keeps professors with years_active >= min_years and at least one
/// publication in the window.
EligibilityResult apply_professor_eligibility(const CorpusIndex& index);

struct ScRetention {
  std::set<std::string> retained;
  std::vector<Exclusion> sc_log;         // dropped SCs, ascending code
  std::vector<Exclusion> professor_log;  // members of dropped SCs, roster order
};

/// An SC survives when it is not excluded by configuration, counts at least
/// min_sc_size eligible professors, and has both genders in every roster
/// country.
ScRetention retain_subject_categories(const CorpusIndex& index, const std::vector<char>& eligible,
                                      std::span<const std::optional<ScAssignment>> classification);

struct CohortSelection {
  std::vector<std::uint32_t> members;  // roster indices, ascending
  std::set<std::string> retained_scs;
  std::vector<Exclusion> exclusion_log;
  std::vector<std::optional<ScAssignment>> classification;  // every eligible professor, before SC retention
};

/// Eligibility, then classification, then SC retention.
CohortSelection select_cohort(const CorpusIndex& index, std::span<const double> normalized_citations);

}  // namespace fss
