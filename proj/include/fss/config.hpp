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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fss/types.hpp"
#include "json.hpp"

namespace fss {

/// Byline shares for one collaboration type. Intramural bylines leave
/// second_penultimate_share at zero.
struct PositionalShares {
  double first_last_share = 0.0;
  double second_penultimate_share = 0.0;
  double middle_pool = 0.0;

  bool operator==(const PositionalShares&) const = default;
};

struct WeightScheme {
  PositionalShares intramural{0.40, 0.0, 0.20};
  PositionalShares extramural{0.30, 0.15, 0.10};

  bool operator==(const WeightScheme&) const = default;
};

struct SubjectCategory {
  std::string code;
  std::string name;
  std::string discipline;
  OrderingConvention convention = OrderingConvention::alphabetical;

  bool operator==(const SubjectCategory&) const = default;
};

struct CostParameters {
  std::map<std::pair<std::string, Rank>, double> salary_table;
  double capital_per_year = 0.0;

  std::optional<double> salary_for(const std::string& country, Rank rank) const {
    auto it = salary_table.find({country, rank});
    if (it == salary_table.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const CostParameters&) const = default;
};

struct AnalysisConfig {
  int window_start = 0;
  int window_end = 0;
  std::optional<std::string> census_date;  // ISO yyyy-mm-dd
  int min_years = 3;
  int min_sc_size = 10;
  int min_sc_size_per_country_representation = 4;
  std::vector<std::string> excluded_scs;
  std::vector<double> significance_levels{0.10, 0.05, 0.01};
  double labour_research_share = 0.5;
  std::vector<double> top_thresholds{0.01, 0.05, 0.10, 0.25};

  int window_years() const { return window_end - window_start + 1; }

  bool operator==(const AnalysisConfig&) const = default;
};

inline const std::vector<std::string>& default_positional_disciplines() {
  static const std::vector<std::string> kDefault{"Biology", "Biomedical research",
                                                 "Clinical medicine"};
  return kDefault;
}

/// Everything the JSON configuration file carries.
struct Config {
  AnalysisConfig analysis;
  CostParameters cost;
  WeightScheme weights;
  std::vector<SubjectCategory> subject_categories;
  std::vector<std::string> positional_disciplines = default_positional_disciplines();

  /// Looks up a subject category; SCs missing from the table are reported
  /// as discipline "Unclassified" with alphabetical ordering.
  SubjectCategory subject_category(const std::string& code) const;

  bool operator==(const Config&) const = default;
};

/// Parses and validates a configuration object. Unknown keys are rejected.
/// Throws ConfigError.
Config parse_config(const nlohmann::json& j);
Config load_config(const std::filesystem::path& path);
nlohmann::json to_json(const Config& config);

/// Checks that a scheme hands out exactly all credit on long bylines.
void validate_weight_scheme(const WeightScheme& scheme);

}  // namespace fss
