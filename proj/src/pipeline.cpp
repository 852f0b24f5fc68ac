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

#include "fss/pipeline.hpp"

#include "fss/serial.hpp"

namespace fss {

std::unique_ptr<AnalysisRun> run_analysis(Corpus corpus) {
  auto run = std::make_unique<AnalysisRun>(std::move(corpus));
  run->baselines = build_baselines(run->index);
  run->impact = normalize_impact(run->index, run->baselines);
  run->cohort = select_cohort(run->index, run->impact.citations);
  run->scores = compute_scores(run->index, run->cohort, run->impact);
  run->members = analysis_members(run->index, run->scores);
  return run;
}

std::unique_ptr<AnalysisRun> run_analysis_serial(Corpus corpus) {
  auto run = std::make_unique<AnalysisRun>(std::move(corpus));
  run->baselines = serial::build_baselines(run->index);
  run->impact = serial::normalize_impact(run->index, run->baselines);
  run->cohort = select_cohort(run->index, run->impact.citations);
  run->scores = serial::compute_scores(run->index, run->cohort, run->impact);
  run->members = analysis_members(run->index, run->scores);
  return run;
}

}  // namespace fss
