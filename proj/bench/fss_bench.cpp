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

// Parallel kernels against their serial references on a synthetic corpus.
// Run with --benchmark_filter and OMP_NUM_THREADS as needed.

#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "fss/baselines.hpp"
#include "fss/classification.hpp"
#include "fss/cohort.hpp"
#include "fss/productivity.hpp"
#include "fss/serial.hpp"
#include "fss/synth.hpp"

namespace fss {
namespace {

struct Fixture {
  Corpus corpus;
  std::unique_ptr<CorpusIndex> index;
  BaselineTable baselines;
  NormalizedImpact impact;
  EligibilityResult eligibility;
  CohortSelection cohort;
};

const Fixture& fixture(std::size_t professors) {
  static std::map<std::size_t, std::unique_ptr<Fixture>> cache;
  auto& slot = cache[professors];
  if (!slot) {
    synth::SynthSpec s;
    s.n_professors = professors;
    s.countries = {{"IT", professors * 7 / 10}, {"NO", professors - professors * 7 / 10}};
    s.n_scs = professors / 500;
    slot = std::make_unique<Fixture>();
    slot->corpus = synth::generate_corpus(s);
    slot->index = std::make_unique<CorpusIndex>(slot->corpus);
    slot->baselines = build_baselines(*slot->index);
    slot->impact = normalize_impact(*slot->index, slot->baselines);
    slot->eligibility = apply_professor_eligibility(*slot->index);
    slot->cohort = select_cohort(*slot->index, slot->impact.citations);
  }
  return *slot;
}

template <bool Parallel>
void BM_Baselines(benchmark::State& state) {
  const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? build_baselines(*f.index) : serial::build_baselines(*f.index));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.corpus.publications.size()));
}

template <bool Parallel>
void BM_NormalizeImpact(benchmark::State& state) {
  const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? normalize_impact(*f.index, f.baselines)
                                      : serial::normalize_impact(*f.index, f.baselines));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.corpus.publications.size()));
}

template <bool Parallel>
void BM_Classify(benchmark::State& state) {
  const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        Parallel ? classify_professors(*f.index, f.impact.citations, f.eligibility.eligible)
                 : serial::classify_professors(*f.index, f.impact.citations, f.eligibility.eligible));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.corpus.professors.size()));
}

template <bool Parallel>
void BM_Scores(benchmark::State& state) {
  const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? compute_scores(*f.index, f.cohort, f.impact)
                                      : serial::compute_scores(*f.index, f.cohort, f.impact));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.cohort.members.size()));
}

void sizes(benchmark::internal::Benchmark* b) {
  b->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();
}

BENCHMARK(BM_Baselines<false>)->Name("baselines/serial")->Apply(sizes);
BENCHMARK(BM_Baselines<true>)->Name("baselines/openmp")->Apply(sizes);
BENCHMARK(BM_NormalizeImpact<false>)->Name("normalize_impact/serial")->Apply(sizes);
BENCHMARK(BM_NormalizeImpact<true>)->Name("normalize_impact/openmp")->Apply(sizes);
BENCHMARK(BM_Classify<false>)->Name("classify/serial")->Apply(sizes);
BENCHMARK(BM_Classify<true>)->Name("classify/openmp")->Apply(sizes);
BENCHMARK(BM_Scores<false>)->Name("scores/serial")->Apply(sizes);
BENCHMARK(BM_Scores<true>)->Name("scores/openmp")->Apply(sizes);

}  // namespace
}  // namespace fss

BENCHMARK_MAIN();
