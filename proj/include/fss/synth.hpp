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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fss/corpus.hpp"
#include "json.hpp"

namespace fss::synth {

struct CountrySpec {
  std::string code;
  std::size_t size = 0;

  bool operator==(const CountrySpec&) const = default;
};

struct LogNormal {
  double location = 0.0;
  double scale = 0.8;

  bool operator==(const LogNormal&) const = default;
};

/// A quota of men, chosen by an independent lottery, whose latent
/// productivity is multiplied by `multiplier`. The lottery is what lets the
/// boost move men from every part of the distribution into the tail.
struct TailGap {
  double multiplier = 1.0;
  double top_fraction = 0.0;

  bool operator==(const TailGap&) const = default;
};

struct SynthSpec {
  std::uint64_t seed = 1;
  std::size_t n_professors = 1000;
  std::vector<CountrySpec> countries{{"IT", 1000}};
  double gender_share = 0.35;                    // fraction F
  std::array<double, 3> rank_mix{0.3, 0.4, 0.3};  // assistant, associate, full
  std::size_t n_scs = 20;
  double sc_size_exponent = 0.0;  // Zipf exponent of SC sizes; 0 gives equal sizes
  LogNormal productivity_female{};
  LogNormal productivity_male{};
  TailGap tail_gap{};
  double uncited_rate = 0.05;
  double if_coverage = 0.9;
  int window_start = 2011;
  int window_end = 2015;
  double publications_per_year = 1.2;
  double mean_coauthors = 3.0;      // extra byline names per paper, Poisson
  double coauthor_rate = 0.3;       // chance a paper carries a second roster member
  double extramural_rate = 0.6;
  double multi_sc_rate = 0.15;
  double ineligible_rate = 0.02;
  int min_sc_size = 10;

  bool operator==(const SynthSpec&) const = default;
};

class SynthError : public Error {
 public:
  using Error::Error;
};

/// Unknown keys are rejected. Throws SynthError.
SynthSpec parse_spec(const nlohmann::json& j);
nlohmann::json to_json(const SynthSpec& spec);

/// Throws SynthError when the spec is invalid or cannot satisfy the cohort
/// rules (every SC needs both genders in every country and min_sc_size
/// members overall).
void check_spec(const SynthSpec& spec);

/// Deterministic for a fixed spec. Randomness comes from std::mt19937_64
/// streams seeded from (seed, stream, item) through SplitMix64 mixing, and
/// every distribution is implemented here, so output does not depend on
/// the standard library's distribution classes.
Corpus generate_corpus(const SynthSpec& spec);

}  // namespace fss::synth
