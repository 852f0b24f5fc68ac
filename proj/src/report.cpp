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

#include "fss/report.hpp"

#include <array>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "fss/csv.hpp"
#include "fss/error.hpp"
#include "fss/format.hpp"

namespace fss::report {

namespace {

using nlohmann::json;

std::string opt_fixed(const std::optional<double>& x, int decimals = 2) {
  return x ? format::fixed(*x, decimals) : std::string();
}

json opt_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::string_view method_name(stats::RankSumMethod m) {
  return m == stats::RankSumMethod::exact ? "exact" : "normal_approx";
}

std::vector<std::string> test_cells(const std::optional<stats::RankSumResult>& t) {
  if (!t) return {"", "", "", ""};
  return {format::roundtrip(t->u_statistic), format::fixed(t->p_value, 4), std::string(method_name(t->method)),
          stars(t->stars)};
}

json test_json(const std::optional<stats::RankSumResult>& t) {
  if (!t) return nullptr;
  return {{"u_statistic", t->u_statistic},
          {"p_value", t->p_value},
          {"method", method_name(t->method)},
          {"stars", t->stars}};
}

std::string metric_label(Metric m) {
  switch (m) {
    case Metric::fss: return "FSS";
    case Metric::o: return "O";
    case Metric::fo: return "FO";
    case Metric::ac: return "AC";
    case Metric::aif: return "AIF";
  }
  return "FSS";
}

std::string rank_label(Rank r) {
  switch (r) {
    case Rank::full: return "Full professor";
    case Rank::associate: return "Associate professor";
    case Rank::assistant: return "Assistant professor";
  }
  return {};
}

std::vector<std::string> gap_cells(const GapRow& r) {
  std::vector<std::string> row{r.group,
                               r.country,
                               std::to_string(r.n_m),
                               std::to_string(r.n_f),
                               opt_fixed(r.mean_m),
                               opt_fixed(r.mean_f),
                               opt_fixed(r.delta_mean),
                               opt_fixed(r.median_m),
                               opt_fixed(r.median_f),
                               opt_fixed(r.delta_median)};
  for (auto& cell : test_cells(r.test)) row.push_back(std::move(cell));
  row.push_back(r.empty_cell ? "empty_cell" : "");
  return row;
}

const std::vector<std::string> kGapHeader{"group",  "country",  "n_m",          "n_f",         "mean_m",
                                          "mean_f", "delta_mean", "median_m",   "median_f",    "delta_median",
                                          "u_statistic", "p_value", "method",   "stars",       "flag"};

json summary_json(const std::optional<stats::DescriptiveSummary>& s) {
  if (!s) return nullptr;
  return {{"n", s->n},           {"pct_nil", s->pct_nil}, {"mean", s->mean}, {"median", s->median},
          {"q1", s->q1},         {"q3", s->q3},           {"iqr", s->iqr},   {"max", s->max},
          {"stddev", s->stddev}, {"skewness", s->skewness}};
}

/// Renders one descriptive statistic row of the wide layout.
struct StatRow {
  std::string label;
  std::function<double(const stats::DescriptiveSummary&)> value;
  std::function<std::string(double)> render;
  bool starred = false;
};

std::string pair_label(const std::string& a, const std::string& b) { return a + " vs " + b; }

std::string threshold_label(double x) { return fmt::format("Top {:g}%", x * 100.0); }

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  csv::write_row(out, table.header);
  for (const auto& row : table.rows) csv::write_row(out, row);
}

std::string to_csv(const Table& table) {
  std::ostringstream out;
  write_csv(table, out);
  return out.str();
}

std::string stars(int count) { return std::string(static_cast<std::size_t>(std::max(0, count)), '*'); }

Table scores_table(const AnalysisRun& run) {
  Table t;
  t.header = {"professor_id", "sc_code", "raw_fss", "norm_fss", "o_norm", "fo_norm", "ac_norm", "aif_norm"};
  t.rows.reserve(run.scores.rows.size());
  for (const auto& s : run.scores.rows) {
    t.rows.push_back({run.index.professor(s.professor).professor_id, run.index.sc_code(s.sc),
                      format::sig9(s.raw_fss), format::sig9(s.norm_fss), format::sig9(s.o_norm),
                      format::sig9(s.fo_norm), format::sig9(s.ac_norm),
                      s.aif_norm ? format::sig9(*s.aif_norm) : std::string()});
  }
  return t;
}

Table baselines_table(const AnalysisRun& run) {
  Table t;
  t.header = {"sc_code", "year", "n_cited", "citation_mean", "n_with_if", "if_mean"};
  const auto& b = run.baselines;
  for (ScId sc = 0; sc < b.sc_codes().size(); ++sc) {
    for (int year = b.first_year(); year < b.first_year() + b.years(); ++year) {
      const auto& cell = b.cell(sc, year);
      if (cell.n_cited == 0 && cell.n_with_if == 0) continue;
      const auto cm = b.citation_mean(sc, year);
      const auto im = b.if_mean(sc, year);
      t.rows.push_back({b.sc_codes()[sc], std::to_string(year), std::to_string(cell.n_cited),
                        cm ? format::roundtrip(*cm) : std::string(), std::to_string(cell.n_with_if),
                        im ? format::roundtrip(*im) : std::string()});
    }
  }
  return t;
}

Table classification_table(const AnalysisRun& run) {
  Table t;
  t.header = {"professor_id", "sc_code", "tie_broken"};
  const auto& cls = run.cohort.classification;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (!cls[i]) continue;
    const std::string& code = run.index.sc_code(cls[i]->sc);
    t.rows.push_back({run.index.professor(i).professor_id, code, cls[i]->tie_broken ? "true" : "false"});
  }
  return t;
}

Table exclusions_table(const CohortSelection& cohort) {
  Table t;
  t.header = {"entity_id", "rule_id"};
  for (const auto& e : cohort.exclusion_log) t.rows.push_back({e.key, e.rule});
  return t;
}

Table gap_table(const GapReport& report) {
  Table t;
  t.header = kGapHeader;
  for (const auto& r : report.within) t.rows.push_back(gap_cells(r));
  return t;
}

Table between_table(const GapReport& report) {
  Table t;
  t.header = {"group",      "gender",   "country_a",    "country_b",   "n_a",     "n_b",
              "mean_a",     "mean_b",   "delta_mean",   "median_a",    "median_b", "delta_median",
              "u_statistic", "p_value", "method",       "stars",       "flag"};
  for (const auto& r : report.between) {
    std::vector<std::string> row{r.group,
                                 std::string(to_string(r.gender)),
                                 r.country_a,
                                 r.country_b,
                                 std::to_string(r.n_a),
                                 std::to_string(r.n_b),
                                 opt_fixed(r.mean_a),
                                 opt_fixed(r.mean_b),
                                 opt_fixed(r.delta_mean),
                                 opt_fixed(r.median_a),
                                 opt_fixed(r.median_b),
                                 opt_fixed(r.delta_median)};
    for (auto& cell : test_cells(r.test)) row.push_back(std::move(cell));
    row.push_back(r.empty_cell ? "empty_cell" : "");
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table components_table(std::span<const GapReport> reports) {
  Table t;
  t.header = {"metric"};
  t.header.insert(t.header.end(), kGapHeader.begin(), kGapHeader.end());
  for (const auto& report : reports) {
    for (const auto& r : report.within) {
      std::vector<std::string> row{std::string(to_string(report.metric))};
      for (auto& cell : gap_cells(r)) row.push_back(std::move(cell));
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table deciles_table(const std::vector<std::pair<std::string, DecileDistribution>>& by_country) {
  std::set<std::string> groups;
  for (const auto& [_, d] : by_country) {
    for (const auto& [g, __] : d.expected_share) groups.insert(g);
  }
  Table t;
  t.header = {"country", "decile", "n"};
  for (const auto& g : groups) t.header.push_back("n_" + g);
  for (const auto& g : groups) t.header.push_back("share_" + g);
  for (const auto& g : groups) t.header.push_back("expected_" + g);
  for (const auto& [country, d] : by_country) {
    for (const auto& row : d.rows) {
      std::vector<std::string> cells{country, std::to_string(row.decile), std::to_string(row.n)};
      for (const auto& g : groups) {
        auto it = row.group_counts.find(g);
        cells.push_back(std::to_string(it == row.group_counts.end() ? 0 : it->second));
      }
      for (const auto& g : groups) {
        auto it = row.group_shares.find(g);
        cells.push_back(format::percent(it == row.group_shares.end() ? 0.0 : it->second));
      }
      for (const auto& g : groups) {
        auto it = d.expected_share.find(g);
        cells.push_back(format::percent(it == d.expected_share.end() ? 0.0 : it->second));
      }
      t.rows.push_back(std::move(cells));
    }
  }
  return t;
}

Table decile_plot_table(const DecileDistribution& distribution) {
  Table t;
  t.header = {"decile", "group", "share", "expected_share"};
  for (const auto& row : distribution.rows) {
    for (const auto& [group, expected] : distribution.expected_share) {
      auto it = row.group_shares.find(group);
      t.rows.push_back({std::to_string(row.decile), group,
                        format::roundtrip(it == row.group_shares.end() ? 0.0 : it->second),
                        format::roundtrip(expected)});
    }
  }
  return t;
}

Table female_advantage_table(std::span<const FemaleAdvantageRow> rows) {
  Table t;
  t.header = {"country", "discipline", "n_scs", "count", "share"};
  for (const auto& r : rows) {
    t.rows.push_back({r.country, r.discipline, std::to_string(r.n_scs), std::to_string(r.count),
                      format::percent(r.share)});
  }
  return t;
}

Table descriptive_layout(const DescriptiveComparison& comparison) {
  const std::string m = metric_label(comparison.metric);
  auto two = [](double x) { return format::fixed(x, 2); };
  auto pct = [](double x) { return format::percent(x); };
  auto count = [](double x) { return fmt::format("{:.0f}", x); };
  using S = stats::DescriptiveSummary;
  const std::vector<StatRow> stat_rows{
      {"No. of professors", [](const S& s) { return static_cast<double>(s.n); }, count},
      {"% with nil " + m, [](const S& s) { return s.pct_nil; }, pct},
      {"Avg. " + m, [](const S& s) { return s.mean; }, two},
      {"Median " + m, [](const S& s) { return s.median; }, two, true},
      {"Q1", [](const S& s) { return s.q1; }, two},
      {"IQR", [](const S& s) { return s.iqr; }, two},
      {"Max " + m, [](const S& s) { return s.max; }, two},
      {m + " st. dev.", [](const S& s) { return s.stddev; }, two},
      {m + " skewness", [](const S& s) { return s.skewness; }, two},
  };

  std::map<std::string, const DescriptiveComparison::CountryBlock*> by_country;
  Table t;
  t.header = {""};
  for (const auto& c : comparison.countries) {
    by_country[c.country] = &c;
    t.header.push_back(c.country + " M");
    t.header.push_back(c.country + " F");
    t.header.push_back(c.country + " Δ");
  }
  for (const auto& p : comparison.pairs) {
    t.header.push_back(pair_label(p.country_a, p.country_b) + " ΔM");
    t.header.push_back(pair_label(p.country_a, p.country_b) + " ΔF");
  }

  auto delta = [](const StatRow& row, const std::optional<S>& a, const std::optional<S>& b,
                  const std::optional<stats::RankSumResult>& test) -> std::string {
    if (!a || !b) return {};
    std::string cell = row.render(row.value(*a) - row.value(*b));
    if (row.starred && test) cell += stars(test->stars);
    return cell;
  };

  for (const auto& row : stat_rows) {
    std::vector<std::string> cells{row.label};
    for (const auto& c : comparison.countries) {
      cells.push_back(c.m ? row.render(row.value(*c.m)) : std::string());
      cells.push_back(c.f ? row.render(row.value(*c.f)) : std::string());
      cells.push_back(delta(row, c.m, c.f, c.test));
    }
    for (const auto& p : comparison.pairs) {
      const auto* a = by_country.at(p.country_a);
      const auto* b = by_country.at(p.country_b);
      cells.push_back(delta(row, a->m, b->m, p.test_m));
      cells.push_back(delta(row, a->f, b->f, p.test_f));
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

Table top_share_layout(std::span<const CountryTopShares> countries) {
  Table t;
  t.header = {""};
  for (const auto& c : countries) {
    t.header.push_back(c.country + " M");
    t.header.push_back(c.country + " F");
    t.header.push_back(c.country + " Total");
  }
  for (std::size_t i = 0; i < countries.size(); ++i) {
    for (std::size_t j = i + 1; j < countries.size(); ++j) {
      t.header.push_back(pair_label(countries[i].country, countries[j].country) + " ΔM");
      t.header.push_back(pair_label(countries[i].country, countries[j].country) + " ΔF");
    }
  }
  if (countries.empty()) return t;

  auto share = [](const TopShareRow& row, const char* g) -> std::optional<double> {
    auto it = row.groups.find(g);
    if (it == row.groups.end() || it->second.size == 0) return std::nullopt;
    return it->second.share;
  };
  auto pct = [](const std::optional<double>& x) { return x ? format::percent(*x) : std::string(); };
  auto diff = [&](const std::optional<double>& a, const std::optional<double>& b) {
    return a && b ? format::percent(*a - *b) : std::string();
  };

  for (std::size_t k = 0; k < countries.front().rows.size(); ++k) {
    std::vector<std::string> cells{threshold_label(countries.front().rows[k].threshold)};
    for (const auto& c : countries) {
      const auto& row = c.rows.at(k);
      cells.push_back(pct(share(row, "M")));
      cells.push_back(pct(share(row, "F")));
      cells.push_back(format::percent(row.total_share));
    }
    for (std::size_t i = 0; i < countries.size(); ++i) {
      for (std::size_t j = i + 1; j < countries.size(); ++j) {
        const auto& a = countries[i].rows.at(k);
        const auto& b = countries[j].rows.at(k);
        cells.push_back(diff(share(a, "M"), share(b, "M")));
        cells.push_back(diff(share(a, "F"), share(b, "F")));
      }
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

Table representation_layout(std::span<const CountryRepresentation> countries) {
  Table t;
  t.header = {"Academic rank",  "Country",    "Current F",      "Current M",        "Current Total",
              "Current F/total", "Expected F", "Expected M",    "Expected Total",   "Expected F/total",
              "F/Total Current vs Expected"};
  for (Rank rank : kAllRanks) {
    bool first = true;
    for (const auto& c : countries) {
      for (const auto& r : c.rows) {
        if (r.rank != rank) continue;
        t.rows.push_back({first ? rank_label(rank) : std::string(), c.country, std::to_string(r.current_f),
                          std::to_string(r.current_m), std::to_string(r.current_total),
                          format::percent(r.current_f_share), std::to_string(r.expected_f),
                          std::to_string(r.expected_m), std::to_string(r.expected_total),
                          format::percent(r.expected_f_share), format::percent(r.delta_f_share, 1, true)});
        first = false;
      }
    }
  }
  return t;
}

json scores_json(const AnalysisRun& run) {
  json rows = json::array();
  for (const auto& s : run.scores.rows) {
    rows.push_back({{"professor_id", run.index.professor(s.professor).professor_id},
                    {"sc_code", run.index.sc_code(s.sc)},
                    {"raw_fss", s.raw_fss},
                    {"norm_fss", s.norm_fss},
                    {"o_raw", s.o_raw},
                    {"fo_raw", s.fo_raw},
                    {"ac_raw", s.ac_raw},
                    {"aif_raw", opt_json(s.aif_raw)},
                    {"o_norm", s.o_norm},
                    {"fo_norm", s.fo_norm},
                    {"ac_norm", s.ac_norm},
                    {"aif_norm", opt_json(s.aif_norm)},
                    {"short_byline_links", s.short_byline_links}});
  }
  json degenerate = json::array();
  for (ScId sc : run.scores.degenerate_scs) degenerate.push_back(run.index.sc_code(sc));
  return {{"scores", rows}, {"degenerate_scs", degenerate}};
}

json gap_json(const GapReport& report) {
  json within = json::array();
  for (const auto& r : report.within) {
    within.push_back({{"group", r.group},
                      {"country", r.country},
                      {"n_m", r.n_m},
                      {"n_f", r.n_f},
                      {"mean_m", opt_json(r.mean_m)},
                      {"mean_f", opt_json(r.mean_f)},
                      {"delta_mean", opt_json(r.delta_mean)},
                      {"median_m", opt_json(r.median_m)},
                      {"median_f", opt_json(r.median_f)},
                      {"delta_median", opt_json(r.delta_median)},
                      {"test", test_json(r.test)},
                      {"empty_cell", r.empty_cell}});
  }
  json between = json::array();
  for (const auto& r : report.between) {
    between.push_back({{"group", r.group},
                       {"gender", to_string(r.gender)},
                       {"country_a", r.country_a},
                       {"country_b", r.country_b},
                       {"n_a", r.n_a},
                       {"n_b", r.n_b},
                       {"mean_a", opt_json(r.mean_a)},
                       {"mean_b", opt_json(r.mean_b)},
                       {"delta_mean", opt_json(r.delta_mean)},
                       {"median_a", opt_json(r.median_a)},
                       {"median_b", opt_json(r.median_b)},
                       {"delta_median", opt_json(r.delta_median)},
                       {"test", test_json(r.test)},
                       {"empty_cell", r.empty_cell}});
  }
  return {{"metric", to_string(report.metric)},
          {"grouping", to_string(report.grouping)},
          {"within", within},
          {"between", between}};
}

json descriptive_json(const DescriptiveComparison& comparison) {
  json countries = json::array();
  for (const auto& c : comparison.countries) {
    countries.push_back({{"country", c.country}, {"M", summary_json(c.m)}, {"F", summary_json(c.f)},
                         {"test", test_json(c.test)}});
  }
  json pairs = json::array();
  for (const auto& p : comparison.pairs) {
    pairs.push_back({{"country_a", p.country_a}, {"country_b", p.country_b}, {"test_m", test_json(p.test_m)},
                     {"test_f", test_json(p.test_f)}});
  }
  return {{"metric", to_string(comparison.metric)}, {"countries", countries}, {"pairs", pairs}};
}

json deciles_json(const std::vector<std::pair<std::string, DecileDistribution>>& by_country) {
  json out = json::array();
  for (const auto& [country, d] : by_country) {
    json rows = json::array();
    for (const auto& r : d.rows) {
      rows.push_back({{"decile", r.decile}, {"n", r.n}, {"group_counts", r.group_counts},
                      {"group_shares", r.group_shares}});
    }
    out.push_back({{"country", country}, {"rows", rows}, {"expected_share", d.expected_share}});
  }
  return out;
}

json top_shares_json(std::span<const CountryTopShares> countries) {
  json out = json::array();
  for (const auto& c : countries) {
    json rows = json::array();
    for (const auto& r : c.rows) {
      json groups = json::object();
      for (const auto& [g, s] : r.groups) groups[g] = {{"size", s.size}, {"in_class", s.in_class}, {"share", s.share}};
      rows.push_back({{"threshold", r.threshold},
                      {"cut_score", r.cut_score},
                      {"total", r.total},
                      {"in_class", r.in_class},
                      {"total_share", r.total_share},
                      {"groups", groups}});
    }
    out.push_back({{"country", c.country}, {"rows", rows}});
  }
  return out;
}

json representation_json(std::span<const CountryRepresentation> countries) {
  json out = json::array();
  for (const auto& c : countries) {
    json rows = json::array();
    for (const auto& r : c.rows) {
      rows.push_back({{"rank", to_string(r.rank)},
                      {"current_f", r.current_f},
                      {"current_m", r.current_m},
                      {"current_total", r.current_total},
                      {"expected_f", r.expected_f},
                      {"expected_m", r.expected_m},
                      {"expected_total", r.expected_total},
                      {"current_f_share", r.current_f_share},
                      {"expected_f_share", r.expected_f_share},
                      {"delta_f_share", r.delta_f_share}});
    }
    out.push_back({{"country", c.country}, {"rows", rows}});
  }
  return out;
}

json female_advantage_json(std::span<const FemaleAdvantageRow> rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"country", r.country},
                   {"discipline", r.discipline},
                   {"n_scs", r.n_scs},
                   {"count", r.count},
                   {"share", r.share}});
  }
  return out;
}

std::string sha256_bytes(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::string bytes;
  in.seekg(0, std::ios::end);
  bytes.resize(static_cast<std::size_t>(in.tellg()));
  in.seekg(0, std::ios::beg);
  in.read(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!in) throw Error("cannot read " + path.string());
  return sha256_bytes(bytes);
}

json to_json(const RunManifest& m) {
  return {{"command", m.command},
          {"engine_version", m.engine_version},
          {"config_digest", m.config_digest},
          {"inputs", m.inputs},
          {"outputs", m.outputs},
          {"facts", m.facts},
          {"timestamps", {{"started_at", m.started_at}, {"finished_at", m.finished_at}}}};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  return fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}Z", tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday,
                     tm.tm_hour, tm.tm_min, tm.tm_sec);
}

}  // namespace fss::report
