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

#include "fss/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "fss/error.hpp"

namespace fss {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T get_as(const json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("invalid value for '" + key + "': " + e.what());
  }
}

template <typename T>
void read_optional(const json& j, const std::string& key, T& out) {
  if (j.contains(key)) out = get_as<T>(j, key);
}

bool valid_iso_date(const std::string& s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  const int month = std::stoi(s.substr(5, 2));
  const int day = std::stoi(s.substr(8, 2));
  return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

void require_fraction_open(double x, const std::string& what) {
  if (!(x > 0.0 && x < 1.0)) throw ConfigError(what + " must lie strictly between 0 and 1");
}

PositionalShares parse_shares(const json& j, bool extramural, const std::string& where) {
  std::set<std::string> allowed{"first_last_share", "middle_pool"};
  if (extramural) allowed.insert("second_penultimate_share");
  reject_unknown_keys(j, allowed, where);
  PositionalShares s = extramural ? WeightScheme{}.extramural : WeightScheme{}.intramural;
  read_optional(j, "first_last_share", s.first_last_share);
  read_optional(j, "middle_pool", s.middle_pool);
  if (extramural) read_optional(j, "second_penultimate_share", s.second_penultimate_share);
  return s;
}

}  // namespace

SubjectCategory Config::subject_category(const std::string& code) const {
  for (const auto& sc : subject_categories) {
    if (sc.code == code) return sc;
  }
  SubjectCategory sc;
  sc.code = code;
  sc.name = code;
  sc.discipline = "Unclassified";
  sc.convention = std::find(positional_disciplines.begin(), positional_disciplines.end(),
                            sc.discipline) != positional_disciplines.end()
                      ? OrderingConvention::positional
                      : OrderingConvention::alphabetical;
  return sc;
}

void validate_weight_scheme(const WeightScheme& scheme) {
  auto check = [](const PositionalShares& s, const char* name, bool extramural) {
    if (s.first_last_share <= 0.0 || s.second_penultimate_share < 0.0 || s.middle_pool < 0.0) {
      throw ConfigError(std::string("weight_scheme.") + name + ": shares must be positive");
    }
    if (!extramural && s.second_penultimate_share != 0.0) {
      throw ConfigError("weight_scheme.intramural has no second/penultimate share");
    }
    const double total = 2.0 * s.first_last_share + 2.0 * s.second_penultimate_share + s.middle_pool;
    if (std::fabs(total - 1.0) > 1e-12) {
      throw ConfigError(std::string("weight_scheme.") + name + ": shares must sum to 1");
    }
  };
  check(scheme.intramural, "intramural", false);
  check(scheme.extramural, "extramural", true);
}

Config parse_config(const json& j) {
  reject_unknown_keys(j,
                      {"window_start", "window_end", "census_date", "min_years", "min_sc_size",
                       "min_sc_size_per_country_representation", "excluded_scs",
                       "significance_levels", "labour_research_share", "top_thresholds",
                       "capital_per_year", "salary_table", "subject_categories",
                       "positional_disciplines", "weight_scheme"},
                      "configuration");
  Config c;
  AnalysisConfig& a = c.analysis;
  if (!j.contains("window_start") || !j.contains("window_end")) {
    throw ConfigError("configuration requires window_start and window_end");
  }
  a.window_start = get_as<int>(j, "window_start");
  a.window_end = get_as<int>(j, "window_end");
  if (j.contains("census_date")) a.census_date = get_as<std::string>(j, "census_date");
  read_optional(j, "min_years", a.min_years);
  read_optional(j, "min_sc_size", a.min_sc_size);
  read_optional(j, "min_sc_size_per_country_representation", a.min_sc_size_per_country_representation);
  read_optional(j, "excluded_scs", a.excluded_scs);
  read_optional(j, "significance_levels", a.significance_levels);
  read_optional(j, "labour_research_share", a.labour_research_share);
  read_optional(j, "top_thresholds", a.top_thresholds);

  if (a.window_start > a.window_end) throw ConfigError("window_start must not exceed window_end");
  if (a.census_date) {
    if (!valid_iso_date(*a.census_date)) throw ConfigError("census_date must be yyyy-mm-dd");
    if (*a.census_date < std::to_string(a.window_end) + "-12-31") {
      throw ConfigError("census_date precedes the end of the observation window");
    }
  }
  if (a.min_years < 1) throw ConfigError("min_years must be at least 1");
  if (a.min_sc_size < 1) throw ConfigError("min_sc_size must be at least 1");
  if (a.min_sc_size_per_country_representation < 1) {
    throw ConfigError("min_sc_size_per_country_representation must be at least 1");
  }
  if (!(a.labour_research_share > 0.0 && a.labour_research_share <= 1.0)) {
    throw ConfigError("labour_research_share must lie in (0, 1]");
  }
  for (double p : a.significance_levels) require_fraction_open(p, "significance level");
  for (double x : a.top_thresholds) require_fraction_open(x, "top threshold");

  if (!j.contains("capital_per_year")) throw ConfigError("configuration requires capital_per_year");
  c.cost.capital_per_year = get_as<double>(j, "capital_per_year");
  if (!(c.cost.capital_per_year > 0.0)) throw ConfigError("capital_per_year must be positive");

  if (j.contains("salary_table")) {
    const json& table = j.at("salary_table");
    if (!table.is_array()) throw ConfigError("salary_table must be an array");
    for (const json& row : table) {
      reject_unknown_keys(row, {"country", "rank", "salary"}, "salary_table entry");
      const auto country = get_as<std::string>(row, "country");
      const auto rank = parse_rank(get_as<std::string>(row, "rank"));
      if (!rank) throw ConfigError("salary_table entry has an unknown rank");
      const auto salary = get_as<double>(row, "salary");
      if (!(salary > 0.0)) throw ConfigError("salary_table values must be positive");
      if (!c.cost.salary_table.emplace(std::pair{country, *rank}, salary).second) {
        throw ConfigError("salary_table repeats (" + country + ", " + std::string(to_string(*rank)) + ")");
      }
    }
  }

  read_optional(j, "positional_disciplines", c.positional_disciplines);

  if (j.contains("subject_categories")) {
    const json& scs = j.at("subject_categories");
    if (!scs.is_array()) throw ConfigError("subject_categories must be an array");
    std::set<std::string> seen;
    for (const json& row : scs) {
      reject_unknown_keys(row, {"code", "name", "discipline"}, "subject_categories entry");
      SubjectCategory sc;
      sc.code = get_as<std::string>(row, "code");
      sc.name = row.contains("name") ? get_as<std::string>(row, "name") : sc.code;
      sc.discipline = get_as<std::string>(row, "discipline");
      if (!seen.insert(sc.code).second) throw ConfigError("subject category '" + sc.code + "' listed twice");
      c.subject_categories.push_back(std::move(sc));
    }
  }
  for (auto& sc : c.subject_categories) {
    const bool positional = std::find(c.positional_disciplines.begin(), c.positional_disciplines.end(),
                                      sc.discipline) != c.positional_disciplines.end();
    sc.convention = positional ? OrderingConvention::positional : OrderingConvention::alphabetical;
  }

  if (j.contains("weight_scheme")) {
    const json& ws = j.at("weight_scheme");
    reject_unknown_keys(ws, {"intramural", "extramural"}, "weight_scheme");
    if (ws.contains("intramural")) {
      c.weights.intramural = parse_shares(ws.at("intramural"), false, "weight_scheme.intramural");
    }
    if (ws.contains("extramural")) {
      c.weights.extramural = parse_shares(ws.at("extramural"), true, "weight_scheme.extramural");
    }
  }
  validate_weight_scheme(c.weights);
  return c;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("configuration file " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

json to_json(const Config& c) {
  const AnalysisConfig& a = c.analysis;
  json j;
  j["window_start"] = a.window_start;
  j["window_end"] = a.window_end;
  if (a.census_date) j["census_date"] = *a.census_date;
  j["min_years"] = a.min_years;
  j["min_sc_size"] = a.min_sc_size;
  j["min_sc_size_per_country_representation"] = a.min_sc_size_per_country_representation;
  j["excluded_scs"] = a.excluded_scs;
  j["significance_levels"] = a.significance_levels;
  j["labour_research_share"] = a.labour_research_share;
  j["top_thresholds"] = a.top_thresholds;
  j["capital_per_year"] = c.cost.capital_per_year;
  json table = json::array();
  for (const auto& [key, salary] : c.cost.salary_table) {
    table.push_back({{"country", key.first}, {"rank", std::string(to_string(key.second))}, {"salary", salary}});
  }
  j["salary_table"] = table;
  json scs = json::array();
  for (const auto& sc : c.subject_categories) {
    scs.push_back({{"code", sc.code}, {"name", sc.name}, {"discipline", sc.discipline}});
  }
  j["subject_categories"] = scs;
  j["positional_disciplines"] = c.positional_disciplines;
  j["weight_scheme"] = {
      {"intramural",
       {{"first_last_share", c.weights.intramural.first_last_share},
        {"middle_pool", c.weights.intramural.middle_pool}}},
      {"extramural",
       {{"first_last_share", c.weights.extramural.first_last_share},
        {"second_penultimate_share", c.weights.extramural.second_penultimate_share},
        {"middle_pool", c.weights.extramural.middle_pool}}}};
  return j;
}

}  // namespace fss
