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

#include "fss/synth.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include <fmt/format.h>

namespace fss::synth {

namespace {

using nlohmann::json;

constexpr std::array<const char*, 11> kDisciplines{
    "Mathematics", "Physics", "Chemistry", "Earth and Space sciences", "Biology", "Biomedical research",
    "Clinical medicine", "Psychology", "Engineering", "Political and social sciences", "Economics"};

constexpr std::array<double, 3> kBaseSalary{40000.0, 55000.0, 75000.0};  // assistant, associate, full

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

enum class Stream : std::uint64_t { gender = 1, rank, sc, latent, lottery, eligibility, career, publications, scales };

class Rng {
 public:
  Rng(std::uint64_t seed, Stream stream, std::uint64_t item = 0)
      : engine_(splitmix(splitmix(seed ^ splitmix(static_cast<std::uint64_t>(stream))) + item)) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer on [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Box-Muller, one variate per call.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  std::int64_t poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean < 30.0) {
      const double limit = std::exp(-mean);
      std::int64_t k = 0;
      double prod = uniform();
      while (prod > limit) {
        ++k;
        prod *= uniform();
      }
      return k;
    }
    return std::max<std::int64_t>(0, std::llround(mean + std::sqrt(mean) * normal()));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Integer counts proportional to weights summing exactly to total
/// (largest remainder; ties go to the earlier slot).
std::vector<std::size_t> apportion(std::size_t total, const std::vector<double>& weights) {
  const double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<std::size_t> out(weights.size(), 0);
  if (weights.empty() || wsum <= 0.0) return out;
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double exact = static_cast<double>(total) * weights[i] / wsum;
    out[i] = static_cast<std::size_t>(std::floor(exact));
    assigned += out[i];
    remainders.emplace_back(exact - std::floor(exact), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < total; ++k, ++assigned) ++out[remainders[k % remainders.size()].second];
  return out;
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw SynthError(where + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) throw SynthError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw SynthError(std::string("invalid value for '") + key + "': " + e.what());
  }
}

LogNormal parse_lognormal(const json& j, LogNormal d, const std::string& where) {
  reject_unknown(j, {"location", "scale"}, where);
  read(j, "location", d.location);
  read(j, "scale", d.scale);
  return d;
}

struct ProfessorPlan {
  std::size_t country = 0;
  Gender gender = Gender::female;
  Rank rank = Rank::assistant;
  std::size_t sc = 0;
  double latent = 1.0;
  bool short_career = false;
  bool unpublished = false;
};

}  // namespace

SynthSpec parse_spec(const json& j) {
  reject_unknown(j,
                 {"seed", "n_professors", "countries", "gender_share", "rank_mix", "n_scs", "sc_size_distribution",
                  "productivity_model", "tail_gap", "uncited_rate", "if_coverage", "window_start", "window_end",
                  "publications_per_year", "mean_coauthors", "coauthor_rate", "extramural_rate", "multi_sc_rate",
                  "ineligible_rate", "min_sc_size"},
                 "synthetic spec");
  SynthSpec s;
  read(j, "seed", s.seed);
  read(j, "n_professors", s.n_professors);
  if (j.contains("countries")) {
    s.countries.clear();
    for (const json& c : j.at("countries")) {
      reject_unknown(c, {"code", "size"}, "countries entry");
      CountrySpec cs;
      read(c, "code", cs.code);
      read(c, "size", cs.size);
      s.countries.push_back(cs);
    }
  } else {
    s.countries = {{"IT", s.n_professors}};
  }
  read(j, "gender_share", s.gender_share);
  if (j.contains("rank_mix")) {
    const json& r = j.at("rank_mix");
    reject_unknown(r, {"assistant", "associate", "full"}, "rank_mix");
    read(r, "assistant", s.rank_mix[0]);
    read(r, "associate", s.rank_mix[1]);
    read(r, "full", s.rank_mix[2]);
  }
  read(j, "n_scs", s.n_scs);
  if (j.contains("sc_size_distribution")) {
    reject_unknown(j.at("sc_size_distribution"), {"zipf_exponent"}, "sc_size_distribution");
    read(j.at("sc_size_distribution"), "zipf_exponent", s.sc_size_exponent);
  }
  if (j.contains("productivity_model")) {
    const json& p = j.at("productivity_model");
    reject_unknown(p, {"F", "M"}, "productivity_model");
    if (p.contains("F")) s.productivity_female = parse_lognormal(p.at("F"), s.productivity_female, "productivity_model.F");
    if (p.contains("M")) s.productivity_male = parse_lognormal(p.at("M"), s.productivity_male, "productivity_model.M");
  }
  if (j.contains("tail_gap")) {
    reject_unknown(j.at("tail_gap"), {"multiplier", "top_fraction"}, "tail_gap");
    read(j.at("tail_gap"), "multiplier", s.tail_gap.multiplier);
    read(j.at("tail_gap"), "top_fraction", s.tail_gap.top_fraction);
  }
  read(j, "uncited_rate", s.uncited_rate);
  read(j, "if_coverage", s.if_coverage);
  read(j, "window_start", s.window_start);
  read(j, "window_end", s.window_end);
  read(j, "publications_per_year", s.publications_per_year);
  read(j, "mean_coauthors", s.mean_coauthors);
  read(j, "coauthor_rate", s.coauthor_rate);
  read(j, "extramural_rate", s.extramural_rate);
  read(j, "multi_sc_rate", s.multi_sc_rate);
  read(j, "ineligible_rate", s.ineligible_rate);
  read(j, "min_sc_size", s.min_sc_size);
  check_spec(s);
  return s;
}

json to_json(const SynthSpec& s) {
  json countries = json::array();
  for (const auto& c : s.countries) countries.push_back({{"code", c.code}, {"size", c.size}});
  return {{"seed", s.seed},
          {"n_professors", s.n_professors},
          {"countries", countries},
          {"gender_share", s.gender_share},
          {"rank_mix", {{"assistant", s.rank_mix[0]}, {"associate", s.rank_mix[1]}, {"full", s.rank_mix[2]}}},
          {"n_scs", s.n_scs},
          {"sc_size_distribution", {{"zipf_exponent", s.sc_size_exponent}}},
          {"productivity_model",
           {{"F", {{"location", s.productivity_female.location}, {"scale", s.productivity_female.scale}}},
            {"M", {{"location", s.productivity_male.location}, {"scale", s.productivity_male.scale}}}}},
          {"tail_gap", {{"multiplier", s.tail_gap.multiplier}, {"top_fraction", s.tail_gap.top_fraction}}},
          {"uncited_rate", s.uncited_rate},
          {"if_coverage", s.if_coverage},
          {"window_start", s.window_start},
          {"window_end", s.window_end},
          {"publications_per_year", s.publications_per_year},
          {"mean_coauthors", s.mean_coauthors},
          {"coauthor_rate", s.coauthor_rate},
          {"extramural_rate", s.extramural_rate},
          {"multi_sc_rate", s.multi_sc_rate},
          {"ineligible_rate", s.ineligible_rate},
          {"min_sc_size", s.min_sc_size}};
}

void check_spec(const SynthSpec& s) {
  auto fraction = [](double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) throw SynthError(std::string(name) + " must lie in [0, 1]");
  };
  fraction(s.gender_share, "gender_share");
  for (double r : s.rank_mix) fraction(r, "rank_mix entry");
  fraction(s.tail_gap.top_fraction, "tail_gap.top_fraction");
  fraction(s.uncited_rate, "uncited_rate");
  fraction(s.if_coverage, "if_coverage");
  fraction(s.coauthor_rate, "coauthor_rate");
  fraction(s.extramural_rate, "extramural_rate");
  fraction(s.multi_sc_rate, "multi_sc_rate");
  fraction(s.ineligible_rate, "ineligible_rate");
  if (std::fabs(s.rank_mix[0] + s.rank_mix[1] + s.rank_mix[2] - 1.0) > 1e-9) {
    throw SynthError("rank_mix must sum to 1");
  }
  if (s.countries.empty()) throw SynthError("at least one country is required");
  std::set<std::string> codes;
  std::size_t total = 0;
  for (const auto& c : s.countries) {
    if (c.code.empty() || !codes.insert(c.code).second) throw SynthError("country codes must be unique and non-empty");
    total += c.size;
  }
  if (total != s.n_professors) throw SynthError("country sizes must sum to n_professors");
  if (s.n_scs == 0) throw SynthError("n_scs must be positive");
  if (s.window_start > s.window_end) throw SynthError("window_start must not exceed window_end");
  if (s.tail_gap.multiplier <= 0.0) throw SynthError("tail_gap.multiplier must be positive");
  if (s.productivity_female.scale < 0.0 || s.productivity_male.scale < 0.0) {
    throw SynthError("productivity scale must be non-negative");
  }
  if (s.publications_per_year <= 0.0 || s.mean_coauthors < 0.0) throw SynthError("publication rates must be positive");
  if (s.min_sc_size < 1) throw SynthError("min_sc_size must be positive");
  const std::size_t viable = std::max<std::size_t>(static_cast<std::size_t>(s.min_sc_size), 2 * s.countries.size());
  if (s.n_professors < s.n_scs * viable) {
    throw SynthError(fmt::format("n_professors {} cannot fill {} SCs of at least {} professors", s.n_professors,
                                 s.n_scs, viable));
  }
}

Corpus generate_corpus(const SynthSpec& spec) {
  check_spec(spec);
  const std::size_t n_countries = spec.countries.size();
  const std::size_t n_scs = spec.n_scs;
  const int window_years = spec.window_end - spec.window_start + 1;

  // Quotas: women per country (largest remainder over the national
  // targets so the total matches round(share * n)), ranks per country,
  // and SC sizes per (country, gender) with one seat guaranteed per SC.
  std::vector<double> female_targets;
  for (const auto& c : spec.countries) female_targets.push_back(spec.gender_share * static_cast<double>(c.size));
  const auto total_female = static_cast<std::size_t>(std::llround(spec.gender_share * static_cast<double>(spec.n_professors)));
  std::vector<std::size_t> females = apportion(total_female, female_targets);

  std::vector<double> sc_weights(n_scs);
  for (std::size_t k = 0; k < n_scs; ++k) sc_weights[k] = 1.0 / std::pow(static_cast<double>(k + 1), spec.sc_size_exponent);

  std::vector<ProfessorPlan> plan;
  plan.reserve(spec.n_professors);
  std::vector<std::size_t> sc_totals(n_scs, 0);
  for (std::size_t c = 0; c < n_countries; ++c) {
    const std::size_t size = spec.countries[c].size;
    const std::size_t n_f = females[c];
    const std::size_t n_m = size - n_f;
    if (n_f < n_scs || n_m < n_scs) {
      throw SynthError(fmt::format("country {} has too few women or men to seat both genders in {} SCs",
                                   spec.countries[c].code, n_scs));
    }
    std::vector<ProfessorPlan> national(size);
    for (auto& p : national) p.country = c;

    Rng gender_rng(spec.seed, Stream::gender, c);
    std::vector<std::size_t> order(size);
    std::iota(order.begin(), order.end(), 0);
    gender_rng.shuffle(order);
    for (std::size_t i = 0; i < size; ++i) national[order[i]].gender = i < n_f ? Gender::female : Gender::male;

    Rng rank_rng(spec.seed, Stream::rank, c);
    const auto rank_counts = apportion(size, {spec.rank_mix[0], spec.rank_mix[1], spec.rank_mix[2]});
    std::vector<Rank> ranks;
    for (std::size_t r = 0; r < 3; ++r) ranks.insert(ranks.end(), rank_counts[r], static_cast<Rank>(r));
    rank_rng.shuffle(ranks);
    for (std::size_t i = 0; i < size; ++i) national[i].rank = ranks[i];

    for (Gender g : {Gender::female, Gender::male}) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < size; ++i) {
        if (national[i].gender == g) members.push_back(i);
      }
      auto extra = apportion(members.size() - n_scs, sc_weights);
      std::vector<std::size_t> seats;
      for (std::size_t k = 0; k < n_scs; ++k) seats.insert(seats.end(), extra[k] + 1, k);
      Rng sc_rng(spec.seed, Stream::sc, 2 * c + (g == Gender::male ? 1 : 0));
      sc_rng.shuffle(seats);
      for (std::size_t i = 0; i < members.size(); ++i) {
        national[members[i]].sc = seats[i];
        ++sc_totals[seats[i]];
      }
    }
    plan.insert(plan.end(), national.begin(), national.end());
  }
  for (std::size_t k = 0; k < n_scs; ++k) {
    if (sc_totals[k] < static_cast<std::size_t>(spec.min_sc_size)) {
      throw SynthError(fmt::format("SC {} would hold only {} professors", k + 1, sc_totals[k]));
    }
  }

  // Latent productivity and the male tail boost.
  for (std::size_t i = 0; i < plan.size(); ++i) {
    Rng rng(spec.seed, Stream::latent, i);
    const LogNormal& d = plan[i].gender == Gender::female ? spec.productivity_female : spec.productivity_male;
    plan[i].latent = std::exp(d.location + d.scale * rng.normal());
  }
  if (spec.tail_gap.top_fraction > 0.0 && spec.tail_gap.multiplier != 1.0) {
    for (std::size_t c = 0; c < n_countries; ++c) {
      std::vector<std::pair<double, std::size_t>> lottery;
      for (std::size_t i = 0; i < plan.size(); ++i) {
        if (plan[i].country == c && plan[i].gender == Gender::male) {
          Rng rng(spec.seed, Stream::lottery, i);
          lottery.emplace_back(rng.uniform(), i);
        }
      }
      std::sort(lottery.begin(), lottery.end(), std::greater<>());
      const auto boosted = static_cast<std::size_t>(
          std::llround(spec.tail_gap.top_fraction * static_cast<double>(lottery.size())));
      for (std::size_t k = 0; k < boosted; ++k) plan[lottery[k].second].latent *= spec.tail_gap.multiplier;
    }
  }

  // Ineligible professors, never the last eligible member of a
  // (country, SC, gender) cell and never pushing an SC under min_sc_size.
  {
    std::vector<std::size_t> cell_left(n_countries * n_scs * 2, 0);
    auto cell = [&](const ProfessorPlan& p) {
      return (p.country * n_scs + p.sc) * 2 + (p.gender == Gender::male ? 1 : 0);
    };
    for (const auto& p : plan) ++cell_left[cell(p)];
    std::vector<std::size_t> sc_left = sc_totals;
    for (std::size_t i = 0; i < plan.size(); ++i) {
      Rng rng(spec.seed, Stream::eligibility, i);
      if (!rng.bernoulli(spec.ineligible_rate)) continue;
      ProfessorPlan& p = plan[i];
      if (cell_left[cell(p)] <= 1 || sc_left[p.sc] <= static_cast<std::size_t>(spec.min_sc_size)) continue;
      --cell_left[cell(p)];
      --sc_left[p.sc];
      if (rng.bernoulli(0.5) || window_years < 3) {
        p.short_career = true;
      } else {
        p.unpublished = true;
      }
    }
  }

  Corpus corpus;
  Config& cfg = corpus.config;
  cfg.analysis.window_start = spec.window_start;
  cfg.analysis.window_end = spec.window_end;
  cfg.analysis.census_date = fmt::format("{}-10-31", spec.window_end + 3);
  cfg.analysis.min_sc_size = spec.min_sc_size;
  cfg.analysis.min_years = std::min(3, window_years);
  cfg.cost.capital_per_year = 20000.0;
  for (std::size_t c = 0; c < n_countries; ++c) {
    const double factor = 1.0 + 0.25 * static_cast<double>(c);
    for (std::size_t r = 0; r < 3; ++r) {
      cfg.cost.salary_table[{spec.countries[c].code, static_cast<Rank>(r)}] = kBaseSalary[r] * factor;
    }
  }
  std::vector<std::string> sc_codes(n_scs);
  for (std::size_t k = 0; k < n_scs; ++k) {
    sc_codes[k] = fmt::format("SC{:03d}", k + 1);
    SubjectCategory sc;
    sc.code = sc_codes[k];
    sc.name = fmt::format("Subject category {}", k + 1);
    sc.discipline = kDisciplines[k % kDisciplines.size()];
    sc.convention = std::find(cfg.positional_disciplines.begin(), cfg.positional_disciplines.end(), sc.discipline) !=
                            cfg.positional_disciplines.end()
                        ? OrderingConvention::positional
                        : OrderingConvention::alphabetical;
    cfg.subject_categories.push_back(std::move(sc));
  }

  // Field-level citation and impact scales.
  std::vector<double> sc_citation_scale(n_scs), sc_if_scale(n_scs);
  {
    Rng rng(spec.seed, Stream::scales);
    for (std::size_t k = 0; k < n_scs; ++k) {
      sc_citation_scale[k] = std::exp(0.5 * rng.normal()) * 2.0;
      sc_if_scale[k] = std::exp(0.4 * rng.normal()) * 2.5;
    }
  }

  const int min_years = cfg.analysis.min_years;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const ProfessorPlan& p = plan[i];
    Rng rng(spec.seed, Stream::career, i);
    ProfessorRecord r;
    r.professor_id = fmt::format("P{:07d}", i + 1);
    r.country = spec.countries[p.country].code;
    r.gender = p.gender;
    r.rank = p.rank;
    if (p.short_career) {
      r.years_active = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, min_years - 1))));
    } else if (rng.bernoulli(0.7)) {
      r.years_active = window_years;
    } else {
      r.years_active = min_years + static_cast<int>(rng.below(static_cast<std::uint64_t>(window_years - min_years + 1)));
    }
    corpus.professors.push_back(std::move(r));
  }

  // Co-author pools: published professors per (country, SC).
  std::vector<std::vector<std::size_t>> pool(n_countries * n_scs);
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (!plan[i].unpublished) pool[plan[i].country * n_scs + plan[i].sc].push_back(i);
  }

  std::size_t pub_counter = 0;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const ProfessorPlan& p = plan[i];
    if (p.unpublished) continue;
    Rng rng(spec.seed, Stream::publications, i);
    const int years = corpus.professors[i].years_active;
    const auto n_pubs = std::max<std::int64_t>(1, rng.poisson(p.latent * spec.publications_per_year * years));
    const double quality = std::sqrt(p.latent);
    const auto& peers = pool[p.country * n_scs + p.sc];
    for (std::int64_t k = 0; k < n_pubs; ++k) {
      PublicationRecord pub;
      pub.pub_id = fmt::format("W{:08d}", ++pub_counter);
      pub.year = spec.window_start + static_cast<int>(rng.below(static_cast<std::uint64_t>(window_years)));
      pub.sc_list.push_back(sc_codes[p.sc]);
      if (k > 0 && n_scs > 1 && rng.bernoulli(spec.multi_sc_rate)) {
        std::size_t other = rng.below(n_scs - 1);
        if (other >= p.sc) ++other;
        pub.sc_list.push_back(sc_codes[other]);
      }
      pub.author_count = 1 + static_cast<int>(std::min<std::int64_t>(rng.poisson(spec.mean_coauthors), 49));
      pub.collaboration = rng.bernoulli(spec.extramural_rate) ? Collaboration::extramural : Collaboration::intramural;
      if (rng.bernoulli(spec.uncited_rate)) {
        pub.citations = 0;
      } else {
        const double age = static_cast<double>(spec.window_end + 3 - pub.year);
        pub.citations = 1 + rng.poisson(sc_citation_scale[p.sc] * (0.5 + 0.5 * age) * quality);
      }
      if (rng.bernoulli(spec.if_coverage)) {
        const double jif = sc_if_scale[p.sc] * std::exp(0.3 * rng.normal() + 0.1 * std::log(p.latent));
        pub.journal_if = std::round(jif * 1000.0) / 1000.0;
      }
      const int lead_position = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(pub.author_count)));
      corpus.links.push_back({pub.pub_id, corpus.professors[i].professor_id, lead_position});
      if (pub.author_count >= 2 && peers.size() >= 2 && rng.bernoulli(spec.coauthor_rate)) {
        std::size_t peer = peers[rng.below(peers.size())];
        if (peer == i) peer = peers[(std::find(peers.begin(), peers.end(), i) - peers.begin() + 1) % peers.size()];
        int position = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(pub.author_count - 1)));
        if (position >= lead_position) ++position;
        corpus.links.push_back({pub.pub_id, corpus.professors[peer].professor_id, position});
      }
      corpus.publications.push_back(std::move(pub));
    }
  }
  return corpus;
}

}  // namespace fss::synth
