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

#include "fss/cohort.hpp"

#include <algorithm>
#include <map>

namespace fss {

EligibilityResult apply_professor_eligibility(const CorpusIndex& index) {
  const AnalysisConfig& cfg = index.config().analysis;
  EligibilityResult out;
  out.eligible.assign(index.professor_count(), 0);
  for (std::size_t p = 0; p < index.professor_count(); ++p) {
    const ProfessorRecord& prof = index.professor(p);
    if (prof.years_active < cfg.min_years) {
      out.log.push_back({prof.professor_id, rule::kMinYears});
      continue;
    }
    const auto links = index.authorships(p);
    const bool published = std::any_of(links.begin(), links.end(), [&](const Authorship& a) {
      const int year = index.publication(a.pub).year;
      return year >= cfg.window_start && year <= cfg.window_end;
    });
    if (!published) {
      out.log.push_back({prof.professor_id, rule::kMinOnePublication});
      continue;
    }
    out.eligible[p] = 1;
  }
  return out;
}

ScRetention retain_subject_categories(const CorpusIndex& index, const std::vector<char>& eligible,
                                      std::span<const std::optional<ScAssignment>> classification) {
  const AnalysisConfig& cfg = index.config().analysis;
  const auto& countries = index.countries();

  struct Census {
    std::size_t total = 0;
    std::map<std::string, std::pair<std::size_t, std::size_t>> by_country;  // (F, M)
  };
  std::map<ScId, Census> census;
  for (std::size_t p = 0; p < index.professor_count(); ++p) {
    if (!eligible[p] || !classification[p]) continue;
    const ProfessorRecord& prof = index.professor(p);
    Census& c = census[classification[p]->sc];
    ++c.total;
    auto& fm = c.by_country[prof.country];
    (prof.gender == Gender::female ? fm.first : fm.second) += 1;
  }

  ScRetention out;
  std::vector<char> dropped(index.sc_count(), 0);
  for (const auto& [sc, c] : census) {
    const std::string& code = index.sc_code(sc);
    const char* failed = nullptr;
    if (std::find(cfg.excluded_scs.begin(), cfg.excluded_scs.end(), code) != cfg.excluded_scs.end()) {
      failed = rule::kExcludedSc;
    } else if (c.total < static_cast<std::size_t>(cfg.min_sc_size)) {
      failed = rule::kMinScSize;
    } else {
      for (const auto& country : countries) {
        auto it = c.by_country.find(country);
        if (it == c.by_country.end() || it->second.first == 0 || it->second.second == 0) {
          failed = rule::kBothGenders;
          break;
        }
      }
    }
    if (failed) {
      dropped[sc] = 1;
      out.sc_log.push_back({code, failed});
    } else {
      out.retained.insert(code);
    }
  }
  for (std::size_t p = 0; p < index.professor_count(); ++p) {
    if (eligible[p] && classification[p] && dropped[classification[p]->sc]) {
      out.professor_log.push_back({index.professor(p).professor_id, rule::kScDropped});
    }
  }
  return out;
}

CohortSelection select_cohort(const CorpusIndex& index, std::span<const double> normalized_citations) {
  CohortSelection out;
  EligibilityResult eligibility = apply_professor_eligibility(index);
  out.classification = classify_professors(index, normalized_citations, eligibility.eligible);
  ScRetention retention = retain_subject_categories(index, eligibility.eligible, out.classification);

  for (std::size_t p = 0; p < index.professor_count(); ++p) {
    if (!eligibility.eligible[p] || !out.classification[p]) continue;
    if (retention.retained.count(index.sc_code(out.classification[p]->sc))) {
      out.members.push_back(static_cast<std::uint32_t>(p));
    }
  }
  out.retained_scs = std::move(retention.retained);
  out.exclusion_log = std::move(eligibility.log);
  out.exclusion_log.insert(out.exclusion_log.end(), retention.sc_log.begin(), retention.sc_log.end());
  out.exclusion_log.insert(out.exclusion_log.end(), retention.professor_log.begin(), retention.professor_log.end());
  return out;
}

}  // namespace fss
