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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "fss/analytics.hpp"
#include "fss/pipeline.hpp"

namespace fss::synth {
namespace {

std::string serialize(const Corpus& c) {
  std::ostringstream out;
  write_roster(c.professors, out);
  write_publications(c.publications, out);
  write_authorship(c.links, out);
  return out.str();
}

SynthSpec two_countries(std::uint64_t seed) {
  SynthSpec s;
  s.seed = seed;
  s.n_professors = 2000;
  s.countries = {{"IT", 1400}, {"NO", 600}};
  s.n_scs = 25;
  return s;
}

TEST(Synth, Deterministic) {
  const auto s = two_countries(42);
  EXPECT_EQ(serialize(generate_corpus(s)), serialize(generate_corpus(s)));
  auto other = s;
  other.seed = 43;
  EXPECT_NE(serialize(generate_corpus(s)), serialize(generate_corpus(other)));
}

TEST(Synth, QuotaGenderCount) {
  SynthSpec s;
  s.n_professors = 1000;
  s.countries = {{"IT", 1000}};
  s.gender_share = 0.5;
  const Corpus c = generate_corpus(s);
  ASSERT_EQ(c.professors.size(), 1000u);
  std::size_t f = 0;
  for (const auto& p : c.professors) f += p.gender == Gender::female;
  EXPECT_EQ(f, 500u);
}

TEST(Synth, ValidAndMostlyRetained) {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    auto s = two_countries(seed);
    s.multi_sc_rate = 0.3;
    s.sc_size_exponent = 0.8;
    const Corpus c = generate_corpus(s);
    EXPECT_TRUE(validate_corpus(c).empty()) << "seed " << seed;
    auto run = run_analysis(c);
    EXPECT_GE(run->cohort.members.size() * 10, c.professors.size() * 9) << "seed " << seed;
  }
}

TEST(Synth, InfeasibleSpecsThrow) {
  SynthSpec s;
  s.n_professors = 100;
  s.countries = {{"IT", 100}};
  s.n_scs = 20;
  EXPECT_THROW(check_spec(s), SynthError);  // 20 SCs of at least 10
  s.n_scs = 5;
  s.gender_share = 0.02;  // two women for five SCs
  EXPECT_THROW(generate_corpus(s), SynthError);
  SynthSpec bad_sizes;
  bad_sizes.countries = {{"IT", 10}};
  EXPECT_THROW(check_spec(bad_sizes), SynthError);
  SynthSpec bad_mix;
  bad_mix.rank_mix = {0.5, 0.5, 0.5};
  EXPECT_THROW(check_spec(bad_mix), SynthError);
}

TEST(Synth, JsonRoundTripAndStrictKeys) {
  auto s = two_countries(7);
  s.tail_gap = {3.0, 0.05};
  s.productivity_male = {0.1, 1.1};
  s.sc_size_exponent = 1.2;
  EXPECT_EQ(parse_spec(to_json(s)), s);
  auto j = to_json(s);
  j["tail_gap"]["extra"] = 1;
  EXPECT_THROW(parse_spec(j), SynthError);
  EXPECT_THROW(parse_spec(nlohmann::json{{"seed", "x"}}), SynthError);
}

TEST(Synth, TailGapDepressesFemaleTopShare) {
  // Pooled over 20 seeds: women inside the top 10% against their overall share.
  std::size_t top = 0, top_f = 0, all = 0, all_f = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SynthSpec s;
    s.seed = seed;
    s.n_professors = 2000;
    s.countries = {{"IT", 2000}};
    s.tail_gap = {2.0, 0.10};
    auto run = run_analysis(generate_corpus(s));
    std::vector<LabeledScore> scores;
    for (const auto& m : run->members) scores.push_back({m.norm_fss, m.gender == Gender::female ? "F" : "M"});
    const std::vector<double> x{0.10};
    const auto row = top_share_analysis(scores, x).front();
    top += row.in_class;
    top_f += row.groups.at("F").in_class;
    all += row.total;
    all_f += row.groups.at("F").size;
  }
  const double p = static_cast<double>(all_f) / static_cast<double>(all);
  const double observed = static_cast<double>(top_f) / static_cast<double>(top);
  const double z = (observed - p) / std::sqrt(p * (1 - p) / static_cast<double>(top));
  EXPECT_LT(z, -2.0) << "top share " << observed << " overall " << p;
}

}  // namespace
}  // namespace fss::synth
