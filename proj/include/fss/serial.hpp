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

// Single-threaded reference versions of the OpenMP kernels. They follow
// the same per-key summation order, so their output must match the
// parallel kernels bit for bit; tests and the benchmark rely on that.

#include "fss/baselines.hpp"
#include "fss/classification.hpp"
#include "fss/cohort.hpp"
#include "fss/productivity.hpp"

namespace fss::serial {

BaselineTable build_baselines(const CorpusIndex& index);

NormalizedImpact normalize_impact(const CorpusIndex& index, const BaselineTable& baselines);

std::vector<std::optional<ScAssignment>> classify_professors(const CorpusIndex& index,
                                                             std::span<const double> normalized_citations,
                                                             const std::vector<char>& eligible);

ScoreTable compute_scores(const CorpusIndex& index, const CohortSelection& cohort, const NormalizedImpact& impact);

}  // namespace fss::serial
