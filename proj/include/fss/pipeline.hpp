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

#include <memory>
#include <vector>

#include "fss/analytics.hpp"
#include "fss/baselines.hpp"
#include "fss/cohort.hpp"
#include "fss/corpus.hpp"
#include "fss/index.hpp"
#include "fss/productivity.hpp"

namespace fss {

inline constexpr const char* kEngineVersion = "1.0.0";

/// Every intermediate of one analysis run. Owns the corpus the index
/// points into, so it is neither copyable nor movable.
struct AnalysisRun {
  explicit AnalysisRun(Corpus c) : corpus(std::move(c)), index(corpus) {}
  AnalysisRun(const AnalysisRun&) = delete;
  AnalysisRun& operator=(const AnalysisRun&) = delete;

  Corpus corpus;
  CorpusIndex index;
  BaselineTable baselines;
  NormalizedImpact impact;
  CohortSelection cohort;
  ScoreTable scores;
  std::vector<ScoredMember> members;  // analysis population
};

/// Baselines, normalization, cohort selection, scoring. The corpus must
/// already satisfy validate_corpus.
std::unique_ptr<AnalysisRun> run_analysis(Corpus corpus);

/// The same stages through the single-threaded reference kernels.
std::unique_ptr<AnalysisRun> run_analysis_serial(Corpus corpus);

}  // namespace fss
