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

#include "fss/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <omp.h>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "fss/analytics.hpp"
#include "fss/corpus.hpp"
#include "fss/error.hpp"
#include "fss/pipeline.hpp"
#include "fss/report.hpp"
#include "fss/synth.hpp"

namespace fss::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct InputOptions {
  std::string roster, pubs, authorship, config;
};

struct OutputOptions {
  std::string out;
  std::string format = "csv";
  std::string country;
  std::string grouping = "overall";
  std::string metric = "fss";
  int threads = 0;
};

void add_inputs(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--roster", in.roster, "Professor roster CSV")->required()->check(CLI::ExistingFile);
  cmd->add_option("--pubs", in.pubs, "Publications CSV")->required()->check(CLI::ExistingFile);
  cmd->add_option("--authorship", in.authorship, "Authorship links CSV")->required()->check(CLI::ExistingFile);
  cmd->add_option("--config", in.config, "Configuration JSON")->required()->check(CLI::ExistingFile);
}

void add_threads(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--threads", o.threads, "Worker threads (default: OpenMP runtime)")->check(CLI::PositiveNumber);
}

void add_outputs(CLI::App* cmd, OutputOptions& o, bool analysis) {
  cmd->add_option("--out", o.out, "Output file")->required();
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_threads(cmd, o);
  if (analysis) {
    cmd->add_option("--country", o.country, "Restrict the analysis to one country");
    cmd->add_option("--grouping", o.grouping, "overall, discipline, sc or rank")
        ->check(CLI::IsMember({"overall", "discipline", "sc", "rank"}));
    cmd->add_option("--metric", o.metric, "fss, o, fo, ac or aif")->check(CLI::IsMember({"fss", "o", "fo", "ac", "aif"}));
  }
}

CorpusPaths paths_of(const InputOptions& in) {
  return {in.roster, in.pubs, in.authorship, in.config};
}

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Output files of one command, written in order and recorded for the
/// manifest.
class OutputSet {
 public:
  explicit OutputSet(fs::path main) : main_(std::move(main)) {
    stem_ = main_.parent_path() / main_.stem();
  }

  const fs::path& main() const { return main_; }
  fs::path side(const std::string& suffix) const { return fs::path(stem_.string() + "." + suffix); }

  void write(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path.string());
    f << content;
    f.close();
    if (!f) throw Error("failed writing " + path.string());
    digests_[path.filename().string()] = report::sha256_bytes(content);
  }

  const std::map<std::string, std::string>& digests() const { return digests_; }

 private:
  fs::path main_;
  fs::path stem_;
  std::map<std::string, std::string> digests_;
};

report::RunManifest start_manifest(const std::string& command, const InputOptions& in) {
  report::RunManifest m;
  m.command = command;
  m.started_at = report::utc_timestamp();
  m.config_digest = report::sha256_file(in.config);
  m.inputs = {{"roster", report::sha256_file(in.roster)},
              {"publications", report::sha256_file(in.pubs)},
              {"authorship", report::sha256_file(in.authorship)},
              {"config", m.config_digest}};
  return m;
}

void finish_manifest(report::RunManifest& m, OutputSet& outputs, const AnalysisRun& run) {
  m.outputs = outputs.digests();
  std::size_t short_links = 0;
  for (const auto& s : run.scores.rows) short_links += s.short_byline_links;
  m.facts = {{"professors", std::to_string(run.index.professor_count())},
             {"publications", std::to_string(run.index.publication_count())},
             {"cohort", std::to_string(run.cohort.members.size())},
             {"analysed", std::to_string(run.members.size())},
             {"degenerate_scs", std::to_string(run.scores.degenerate_scs.size())},
             {"short_byline_links", std::to_string(short_links)}};
  m.finished_at = report::utc_timestamp();
  const fs::path path = outputs.side("manifest.json");
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << report::to_json(m).dump(2) << '\n';
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void apply_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

std::unique_ptr<AnalysisRun> analyse(const InputOptions& in) { return run_analysis(load_corpus(paths_of(in))); }

/// Members of the requested country, or everyone.
std::vector<ScoredMember> select_members(const AnalysisRun& run, const std::string& country) {
  if (country.empty()) return run.members;
  const auto& all = run.index.countries();
  if (std::find(all.begin(), all.end(), country) == all.end()) {
    throw UsageError("country '" + country + "' does not appear in the roster");
  }
  std::vector<ScoredMember> out;
  for (const auto& m : run.members) {
    if (m.country == country) out.push_back(m);
  }
  return out;
}

std::vector<std::string> countries_of(const std::vector<ScoredMember>& members) {
  std::set<std::string> s;
  for (const auto& m : members) s.insert(m.country);
  return {s.begin(), s.end()};
}

Metric metric_of(const std::string& name) {
  if (name == "o") return Metric::o;
  if (name == "fo") return Metric::fo;
  if (name == "ac") return Metric::ac;
  if (name == "aif") return Metric::aif;
  return Metric::fss;
}

int cmd_validate(const InputOptions& in, std::ostream& out, std::ostream& err) {
  const Corpus corpus = read_corpus(paths_of(in));
  const ValidationReport report = validate_corpus(corpus);
  for (const auto& v : report) out << v.rule << '\t' << v.key << '\t' << v.detail << '\n';
  if (!report.empty()) {
    err << report.size() << " violation(s)\n";
    return kExitViolations;
  }
  out << fmt::format("ok: {} professors, {} publications, {} authorship links\n", corpus.professors.size(),
                     corpus.publications.size(), corpus.links.size());
  return kExitOk;
}

int cmd_compute(const InputOptions& in, const OutputOptions& o, std::ostream& out) {
  apply_threads(o.threads);
  auto manifest = start_manifest("compute", in);
  auto run = analyse(in);
  OutputSet outputs(o.out);
  if (o.format == "json") {
    outputs.write(outputs.main(), dump(report::scores_json(*run)));
  } else {
    outputs.write(outputs.main(), report::to_csv(report::scores_table(*run)));
  }
  outputs.write(outputs.side("baselines.csv"), report::to_csv(report::baselines_table(*run)));
  outputs.write(outputs.side("classification.csv"), report::to_csv(report::classification_table(*run)));
  outputs.write(outputs.side("exclusions.csv"), report::to_csv(report::exclusions_table(run->cohort)));
  finish_manifest(manifest, outputs, *run);
  out << fmt::format("scored {} professors -> {}\n", run->scores.rows.size(), o.out);
  return kExitOk;
}

int cmd_gap(const AnalysisRun& run, const OutputOptions& o, OutputSet& outputs) {
  const auto members = select_members(run, o.country);
  const auto grouping = *parse_grouping(o.grouping);
  const Metric metric = metric_of(o.metric);
  const auto& levels = run.index.config().analysis.significance_levels;
  const GapReport gap = gap_report_by_group(members, grouping, metric, levels);

  std::optional<DescriptiveComparison> descriptive;
  if (grouping == Grouping::overall) descriptive = descriptive_by_gender_country(members, metric, levels);
  std::vector<FemaleAdvantageRow> advantage;
  if (grouping == Grouping::sc) {
    std::map<std::string, std::string> sc_discipline;
    for (const auto& m : members) sc_discipline[m.sc] = m.discipline;
    advantage = count_categories_female_advantage(gap, sc_discipline);
  }

  if (o.format == "json") {
    json doc{{"gap", report::gap_json(gap)}};
    if (descriptive) doc["descriptive"] = report::descriptive_json(*descriptive);
    if (grouping == Grouping::sc) doc["female_advantage"] = report::female_advantage_json(advantage);
    outputs.write(outputs.main(), dump(doc));
    return kExitOk;
  }
  outputs.write(outputs.main(), report::to_csv(report::gap_table(gap)));
  outputs.write(outputs.side("between.csv"), report::to_csv(report::between_table(gap)));
  if (descriptive) {
    outputs.write(outputs.side("descriptive.csv"), report::to_csv(report::descriptive_layout(*descriptive)));
  }
  if (grouping == Grouping::sc) {
    outputs.write(outputs.side("female_advantage.csv"), report::to_csv(report::female_advantage_table(advantage)));
  }
  return kExitOk;
}

int cmd_deciles(const AnalysisRun& run, const OutputOptions& o, OutputSet& outputs) {
  const auto members = select_members(run, o.country);
  const Metric metric = metric_of(o.metric);
  std::vector<std::pair<std::string, DecileDistribution>> by_country;
  for (const auto& country : countries_of(members)) {
    std::vector<LabeledScore> scores;
    for (const auto& m : members) {
      if (m.country != country) continue;
      if (auto v = metric_value(m, metric)) scores.push_back({*v, std::string(to_string(m.gender))});
    }
    if (scores.size() < 10) {
      throw ComputeError(fmt::format("country {} has {} scored members; deciles need at least 10", country,
                                     scores.size()));
    }
    by_country.emplace_back(country, decile_distribution(scores));
  }
  if (o.format == "json") {
    outputs.write(outputs.main(), dump(report::deciles_json(by_country)));
    return kExitOk;
  }
  outputs.write(outputs.main(), report::to_csv(report::deciles_table(by_country)));
  for (const auto& [country, d] : by_country) {
    outputs.write(outputs.side(country + ".plot.csv"), report::to_csv(report::decile_plot_table(d)));
  }
  return kExitOk;
}

int cmd_top(const AnalysisRun& run, const OutputOptions& o, OutputSet& outputs) {
  const auto members = select_members(run, o.country);
  const Metric metric = metric_of(o.metric);
  const auto& thresholds = run.index.config().analysis.top_thresholds;
  std::vector<report::CountryTopShares> countries;
  for (const auto& country : countries_of(members)) {
    std::vector<LabeledScore> scores;
    for (const auto& m : members) {
      if (m.country != country) continue;
      if (auto v = metric_value(m, metric)) scores.push_back({*v, std::string(to_string(m.gender))});
    }
    countries.push_back({country, top_share_analysis(scores, thresholds)});
  }
  if (o.format == "json") {
    outputs.write(outputs.main(), dump(report::top_shares_json(countries)));
  } else {
    outputs.write(outputs.main(), report::to_csv(report::top_share_layout(countries)));
  }
  return kExitOk;
}

int cmd_components(const AnalysisRun& run, const OutputOptions& o, OutputSet& outputs) {
  const auto members = select_members(run, o.country);
  const auto grouping = *parse_grouping(o.grouping);
  const auto& levels = run.index.config().analysis.significance_levels;
  std::vector<GapReport> reports;
  for (Metric m : {Metric::o, Metric::fo, Metric::ac, Metric::aif}) {
    reports.push_back(gap_report_by_group(members, grouping, m, levels));
  }
  if (o.format == "json") {
    json doc = json::array();
    for (const auto& r : reports) doc.push_back(report::gap_json(r));
    outputs.write(outputs.main(), dump(doc));
  } else {
    outputs.write(outputs.main(), report::to_csv(report::components_table(reports)));
  }
  return kExitOk;
}

int cmd_representation(const AnalysisRun& run, const OutputOptions& o, OutputSet& outputs) {
  const auto members = select_members(run, o.country);
  const int min_per_sc = run.index.config().analysis.min_sc_size_per_country_representation;
  std::vector<report::CountryRepresentation> countries;
  for (const auto& country : countries_of(members)) {
    const auto cohort = representation_cohort(members, country, min_per_sc);
    countries.push_back({country, representation_alignment(cohort)});
  }
  if (o.format == "json") {
    outputs.write(outputs.main(), dump(report::representation_json(countries)));
  } else {
    outputs.write(outputs.main(), report::to_csv(report::representation_layout(countries)));
  }
  return kExitOk;
}

int cmd_simulate(const std::string& spec_path, std::optional<std::uint64_t> seed, const std::string& dir,
                 std::ostream& out) {
  std::ifstream in(spec_path);
  if (!in) throw UsageError("cannot open " + spec_path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(spec_path + ": " + e.what());
  }
  synth::SynthSpec spec = synth::parse_spec(j);
  if (seed) spec.seed = *seed;
  const Corpus corpus = synth::generate_corpus(spec);
  const fs::path root(dir);
  fs::create_directories(root);
  const auto paths = CorpusPaths::in_directory(root);
  write_corpus(corpus, paths);

  report::RunManifest m;
  m.command = "simulate";
  m.started_at = report::utc_timestamp();
  m.inputs = {{"spec", report::sha256_bytes(synth::to_json(spec).dump())}};
  for (const auto& p : {paths.roster, paths.publications, paths.authorship, paths.config}) {
    m.outputs[p.filename().string()] = report::sha256_file(p);
  }
  m.config_digest = m.outputs[paths.config.filename().string()];
  m.facts = {{"seed", std::to_string(spec.seed)},
             {"professors", std::to_string(corpus.professors.size())},
             {"publications", std::to_string(corpus.publications.size())},
             {"links", std::to_string(corpus.links.size())}};
  m.finished_at = report::utc_timestamp();
  std::ofstream f(root / "manifest.json", std::ios::binary);
  if (!f) throw Error("cannot write manifest in " + dir);
  f << report::to_json(m).dump(2) << '\n';
  out << fmt::format("wrote {} professors, {} publications, {} links to {}\n", corpus.professors.size(),
                     corpus.publications.size(), corpus.links.size(), dir);
  return kExitOk;
}

void print_violations(const ValidationReport& report, std::ostream& err) {
  for (const auto& v : report) err << v.rule << '\t' << v.key << '\t' << v.detail << '\n';
  err << report.size() << " violation(s)\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional Scientific Strength productivity and gender-gap analytics", "fss"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kEngineVersion));

  InputOptions in;
  OutputOptions o;

  auto* validate = app.add_subcommand("validate", "Check corpus invariants");
  add_inputs(validate, in);

  auto* compute = app.add_subcommand("compute", "Score every cohort member");
  add_inputs(compute, in);
  add_outputs(compute, o, false);

  auto* report_cmd = app.add_subcommand("report", "Analysis tables");
  report_cmd->require_subcommand(1);
  const std::vector<std::string> kinds{"gap", "deciles", "top", "components", "representation"};
  std::map<std::string, CLI::App*> report_subs;
  for (const auto& kind : kinds) {
    auto* sub = report_cmd->add_subcommand(kind, "Write the " + kind + " report");
    add_inputs(sub, in);
    add_outputs(sub, o, true);
    report_subs[kind] = sub;
  }

  std::string spec_path, sim_dir;
  std::optional<std::uint64_t> seed;
  auto* simulate = app.add_subcommand("simulate", "Generate a synthetic corpus");
  simulate->add_option("--spec", spec_path, "Synthetic spec JSON")->required()->check(CLI::ExistingFile);
  simulate->add_option("--seed", seed, "Override the spec seed");
  simulate->add_option("--out", sim_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(in, out, err);
    if (*compute) return cmd_compute(in, o, out);
    if (*simulate) return cmd_simulate(spec_path, seed, sim_dir, out);
    for (const auto& [kind, sub] : report_subs) {
      if (!*sub) continue;
      apply_threads(o.threads);
      auto manifest = start_manifest("report " + kind, in);
      auto run_ptr = analyse(in);
      OutputSet outputs(o.out);
      int code = kExitOk;
      if (kind == "gap") code = cmd_gap(*run_ptr, o, outputs);
      if (kind == "deciles") code = cmd_deciles(*run_ptr, o, outputs);
      if (kind == "top") code = cmd_top(*run_ptr, o, outputs);
      if (kind == "components") code = cmd_components(*run_ptr, o, outputs);
      if (kind == "representation") code = cmd_representation(*run_ptr, o, outputs);
      finish_manifest(manifest, outputs, *run_ptr);
      out << fmt::format("{} report -> {}\n", kind, o.out);
      return code;
    }
  } catch (const ValidationError& e) {
    print_violations(e.report(), err);
    return kExitViolations;
  } catch (const ReferenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolations;
  } catch (const DuplicateKeyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolations;
  } catch (const ComputeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolations;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fss::cli
