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
#include <map>
#include <stdexcept>

#include "fss/summation.hpp"

namespace fss {

namespace {

struct Tally {
  std::size_t count = 0;
  std::vector<double> citations;
};

// Sorting before summing makes the impact sum independent of input order.
double order_free_sum(std::vector<double>& xs) {
  std::sort(xs.begin(), xs.end());
  return compensated_sum(xs);
}

// Keys iterate in ascending order, so the first maximum wins the final tie.
template <typename Key>
std::pair<Key, bool> pick(std::map<Key, Tally>& tallies) {
  std::size_t best_count = 0;
  for (const auto& [_, t] : tallies) best_count = std::max(best_count, t.count);
  const Key* best = nullptr;
  double best_impact = 0.0;
  std::size_t tied = 0;
  for (auto& [key, t] : tallies) {
    if (t.count != best_count) continue;
    ++tied;
    const double impact = order_free_sum(t.citations);
    if (!best || impact > best_impact) {
      best = &key;
      best_impact = impact;
    }
  }
  return {*best, tied > 1};
}

}  // namespace

SubjectAssignment assign_subject_category(std::span<const PortfolioItem> portfolio) {
  std::map<std::string, Tally> tallies;
  for (const auto& item : portfolio) {
    for (const auto& sc : item.sc_list) {
      Tally& t = tallies[sc];
      ++t.count;
      t.citations.push_back(item.normalized_citation);
    }
  }
  if (tallies.empty()) throw std::invalid_argument("cannot classify an empty publication portfolio");
  auto [code, tie] = pick(tallies);
  return {code, tie};
}

std::vector<std::optional<ScAssignment>> classify_professors(const CorpusIndex& index,
                                                             std::span<const double> normalized_citations,
                                                             const std::vector<char>& eligible) {
  const std::size_t n = index.professor_count();
  std::vector<std::optional<ScAssignment>> out(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto p = static_cast<std::size_t>(i);
    if (!eligible[p]) continue;
    std::map<ScId, Tally> tallies;
    for (const Authorship& a : index.authorships(p)) {
      for (ScId sc : index.pub_scs(a.pub)) {
        Tally& t = tallies[sc];
        ++t.count;
        t.citations.push_back(normalized_citations[a.pub]);
      }
    }
    if (tallies.empty()) continue;
    auto [sc, tie] = pick(tallies);
    out[p] = ScAssignment{sc, tie};
  }
  return out;
}

}  // namespace fss
