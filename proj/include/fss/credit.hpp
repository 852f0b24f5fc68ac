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

#include <vector>

#include "fss/config.hpp"
#include "fss/types.hpp"

namespace fss {

/// Share of a publication's credit owed to the author at `position`
/// (1-based) of an `author_count`-long byline.
///
/// Alphabetical bylines split credit evenly. Positional bylines follow the
/// weight scheme: the first and last authors take first_last_share each,
/// on extramural papers the second and penultimate authors take
/// second_penultimate_share each, and the middle pool is split evenly over
/// the remaining authors.
///
/// Bylines too short to hold every named slot (intramural n = 2, extramural
/// n = 2..4) keep the named slots that exist and are rescaled to sum to 1:
///   intramural n=2 -> (0.5, 0.5)
///   extramural n=2 -> (0.5, 0.5)
///   extramural n=3 -> the middle author holds both the second and the
///                     penultimate slot and receives second_penultimate_share
///                     plus half the middle pool; defaults give
///                     (0.375, 0.25, 0.375)
///   extramural n=4 -> (fl, sp, sp, fl) rescaled, defaults (1/3, 1/6, 1/6, 1/3)
///
/// Throws std::out_of_range unless 1 <= position <= author_count.
double fractional_contribution(int position, int author_count, OrderingConvention convention,
                               Collaboration collaboration, const WeightScheme& scheme = {});

/// All positions of one byline.
std::vector<double> byline_weights(int author_count, OrderingConvention convention, Collaboration collaboration,
                                   const WeightScheme& scheme = {});

/// True for positional bylines whose weights come from the short-byline
/// rescaling rather than the scheme as written.
constexpr bool uses_short_byline_rule(int author_count, OrderingConvention convention,
                                      Collaboration collaboration) {
  if (convention != OrderingConvention::positional || author_count < 2) return false;
  return collaboration == Collaboration::intramural ? author_count < 3 : author_count < 5;
}

}  // namespace fss
