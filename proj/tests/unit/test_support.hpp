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

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fss/corpus.hpp"

namespace fss::testing {

/// Window 2011-2015, capital 10, flat salary 100 for every (country, rank)
/// seen by the builder, min_sc_size 1.
inline Config small_config() {
  Config c;
  c.analysis.window_start = 2011;
  c.analysis.window_end = 2015;
  c.analysis.min_sc_size = 1;
  c.cost.capital_per_year = 10.0;
  return c;
}

class CorpusBuilder {
 public:
  CorpusBuilder() { corpus_.config = small_config(); }
  explicit CorpusBuilder(Config config) { corpus_.config = std::move(config); }

  CorpusBuilder& professor(const std::string& id, const std::string& country, Gender g, Rank r = Rank::associate,
                           int years = 5, std::optional<double> salary = 100.0) {
    ProfessorRecord p;
    p.professor_id = id;
    p.country = country;
    p.gender = g;
    p.rank = r;
    p.years_active = years;
    p.salary = salary;
    corpus_.professors.push_back(p);
    return *this;
  }

  CorpusBuilder& publication(const std::string& id, int year, std::vector<std::string> scs, std::int64_t citations,
                             std::optional<double> journal_if = std::nullopt, int authors = 1,
                             Collaboration collab = Collaboration::intramural) {
    PublicationRecord p;
    p.pub_id = id;
    p.year = year;
    p.sc_list = std::move(scs);
    p.citations = citations;
    p.journal_if = journal_if;
    p.author_count = authors;
    p.collaboration = collab;
    corpus_.publications.push_back(p);
    return *this;
  }

  CorpusBuilder& link(const std::string& pub, const std::string& prof, int position = 1) {
    corpus_.links.push_back({pub, prof, position});
    return *this;
  }

  CorpusBuilder& subject(const std::string& code, const std::string& discipline) {
    SubjectCategory sc;
    sc.code = code;
    sc.name = code;
    sc.discipline = discipline;
    const auto& pd = corpus_.config.positional_disciplines;
    sc.convention = std::find(pd.begin(), pd.end(), discipline) != pd.end() ? OrderingConvention::positional
                                                                             : OrderingConvention::alphabetical;
    corpus_.config.subject_categories.push_back(sc);
    return *this;
  }

  Config& config() { return corpus_.config; }
  Corpus build() const { return corpus_; }

 private:
  Corpus corpus_;
};

/// A fresh directory under the system temp path, unique per test.
std::filesystem::path scratch_dir(const std::string& name);

}  // namespace fss::testing
