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
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fss/analytics.hpp"
#include "fss/cohort.hpp"
#include "fss/pipeline.hpp"
#include "json.hpp"

namespace fss::report {

/// A rendered CSV document: header plus display-rounded cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const Table& table, std::ostream& out);
std::string to_csv(const Table& table);

/// "*", "**", "***" or empty.
std::string stars(int count);

// Flat tables. Display values carry 2 decimals, shares are percentages
// with 1 decimal, and deltas are taken before rounding.

/// professor_id, sc_code, raw_fss, norm_fss, o_norm, fo_norm, ac_norm,
/// aif_norm at nine significant digits.
Table scores_table(const AnalysisRun& run);
Table baselines_table(const AnalysisRun& run);
Table classification_table(const AnalysisRun& run);
Table exclusions_table(const CohortSelection& cohort);
Table gap_table(const GapReport& report);
Table between_table(const GapReport& report);
Table components_table(std::span<const GapReport> reports);
Table deciles_table(const std::vector<std::pair<std::string, DecileDistribution>>& by_country);
/// decile, group, share, expected_share for one distribution.
Table decile_plot_table(const DecileDistribution& distribution);
Table female_advantage_table(std::span<const FemaleAdvantageRow> rows);

// Wide table layouts.

/// Descriptive statistics by gender and country, with the country
/// comparison columns. Median deltas carry significance stars.
Table descriptive_layout(const DescriptiveComparison& comparison);

struct CountryTopShares {
  std::string country;
  std::vector<TopShareRow> rows;
};
/// Share of each gender inside the top-x classes, per country, with the
/// country comparison columns.
Table top_share_layout(std::span<const CountryTopShares> countries);

struct CountryRepresentation {
  std::string country;
  std::vector<RepresentationRow> rows;  // full, associate, assistant
};
/// Current and expected representation by rank and country.
Table representation_layout(std::span<const CountryRepresentation> countries);

// JSON documents with full-precision values.

nlohmann::json scores_json(const AnalysisRun& run);
nlohmann::json gap_json(const GapReport& report);
nlohmann::json descriptive_json(const DescriptiveComparison& comparison);
nlohmann::json deciles_json(const std::vector<std::pair<std::string, DecileDistribution>>& by_country);
nlohmann::json top_shares_json(std::span<const CountryTopShares> countries);
nlohmann::json representation_json(std::span<const CountryRepresentation> countries);
nlohmann::json female_advantage_json(std::span<const FemaleAdvantageRow> rows);

// Run manifest.

/// Hex SHA-256 of a file's bytes. Throws Error when unreadable.
std::string sha256_file(const std::filesystem::path& path);
std::string sha256_bytes(std::string_view bytes);

struct RunManifest {
  std::string command;
  std::string engine_version = kEngineVersion;
  std::string config_digest;
  std::map<std::string, std::string> inputs;   // label -> digest
  std::map<std::string, std::string> outputs;  // file name -> digest
  std::map<std::string, std::string> facts;    // run facts such as counts
  std::string started_at;
  std::string finished_at;
};

nlohmann::json to_json(const RunManifest& manifest);

/// Current UTC time as yyyy-mm-ddThh:mm:ssZ.
std::string utc_timestamp();

}  // namespace fss::report
