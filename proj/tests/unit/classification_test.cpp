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

#include "fss/classification.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "fss/baselines.hpp"
#include "fss/serial.hpp"
#include "fss/synth.hpp"

namespace fss {
namespace {

struct Portfolio {
  std::vector<std::vector<std::string>> scs;
  std::vector<double> cites;

  std::vector<PortfolioItem> items() const {
    std::vector<PortfolioItem> out;
    for (std::size_t i = 0; i < scs.size(); ++i) out.push_back({scs[i], cites[i]});
    return out;
  }
};

TEST(Classification, MostRecurrentSc) {
  Portfolio p{{{"A"}, {"A", "B"}, {"A"}}, {0, 0, 0}};
  auto r = assign_subject_category(p.items());
  EXPECT_EQ(r.sc_code, "A");
  EXPECT_FALSE(r.tie_broken);
  Portfolio single{{{"A"}}, {0}};
  EXPECT_EQ(assign_subject_category(single.items()).sc_code, "A");
}

TEST(Classification, TieBrokenByCitationsThenCode) {
  // Two papers each; A totals 1.7 normalized citations, B 0.9.
  Portfolio p{{{"B"}, {"A"}, {"B"}, {"A"}}, {0.4, 1.0, 0.5, 0.7}};
  auto r = assign_subject_category(p.items());
  EXPECT_EQ(r.sc_code, "A");
  EXPECT_TRUE(r.tie_broken);

  Portfolio flat{{{"C"}, {"B"}}, {1.0, 1.0}};
  auto f = assign_subject_category(flat.items());
  EXPECT_EQ(f.sc_code, "B");
  EXPECT_TRUE(f.tie_broken);
}

TEST(Classification, EmptyPortfolioThrows) {
  EXPECT_THROW(assign_subject_category(std::span<const PortfolioItem>{}), std::invalid_argument);
}

TEST(Classification, PermutationInvarianceAndStability) {
  std::mt19937_64 rng(5);
  const std::vector<std::string> codes{"A", "B", "C", "D"};
  for (int trial = 0; trial < 300; ++trial) {
    Portfolio p;
    const int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      std::vector<std::string> scs{codes[rng() % 4]};
      if (rng() % 3 == 0) {
        const auto& extra = codes[rng() % 4];
        if (extra != scs[0]) scs.push_back(extra);
      }
      p.scs.push_back(scs);
      p.cites.push_back(static_cast<double>(rng() % 5) / 2.0);
    }
    const auto base = assign_subject_category(p.items());
    std::vector<std::size_t> order(p.scs.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Portfolio shuffled;
    for (auto i : order) {
      shuffled.scs.push_back(p.scs[i]);
      shuffled.cites.push_back(p.cites[i]);
    }
    EXPECT_EQ(assign_subject_category(shuffled.items()), base);

    Portfolio grown = p;
    grown.scs.push_back({base.sc_code});
    grown.cites.push_back(static_cast<double>(rng() % 5));
    EXPECT_EQ(assign_subject_category(grown.items()).sc_code, base.sc_code);
  }
}

TEST(Classification, ParallelMatchesSerialAndIsTotal) {
  synth::SynthSpec spec;
  spec.n_professors = 2000;
  spec.countries = {{"IT", 1200}, {"NO", 800}};
  spec.n_scs = 25;
  spec.multi_sc_rate = 0.5;
  const Corpus c = synth::generate_corpus(spec);
  CorpusIndex index(c);
  const auto impact = normalize_impact(index, build_baselines(index));
  std::vector<char> eligible(index.professor_count(), 0);
  for (std::size_t p = 0; p < index.professor_count(); ++p) eligible[p] = !index.authorships(p).empty();
  const auto par = classify_professors(index, impact.citations, eligible);
  const auto ser = serial::classify_professors(index, impact.citations, eligible);
  EXPECT_EQ(par, ser);
  for (std::size_t p = 0; p < index.professor_count(); ++p) EXPECT_EQ(par[p].has_value(), eligible[p] != 0);
}

}  // namespace
}  // namespace fss
