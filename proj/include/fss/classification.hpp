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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fss/index.hpp"

namespace fss {

struct PortfolioItem {
  std::span<const std::string> sc_list;
  double normalized_citation = 0.0;
};

struct SubjectAssignment {
  std::string sc_code;
  bool tie_broken = false;

  bool operator==(const SubjectAssignment&) const = default;
};

struct ScAssignment {
  ScId sc = 0;
  bool tie_broken = false;

  bool operator==(const ScAssignment&) const = default;
};

/// The most frequent SC over the portfolio, each paper counting once for
/// every SC it lists. Ties go to the SC with the larger sum of normalized
/// citations, then to the smallest code. Independent of item order.
/// Throws std::invalid_argument on an empty portfolio.
SubjectAssignment assign_subject_category(std::span<const PortfolioItem> portfolio);

/// Assigns every professor flagged in `eligible`; others stay empty.
std::vector<std::optional<ScAssignment>> classify_professors(const CorpusIndex& index,
                                                             std::span<const double> normalized_citations,
                                                             const std::vector<char>& eligible);

}  // namespace fss
