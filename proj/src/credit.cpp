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

#include "fss/credit.hpp"

#include <stdexcept>
#include <string>

namespace fss {

namespace {

double intramural_weight(int position, int n, const PositionalShares& s) {
  if (n == 2) return 0.5;
  if (position == 1 || position == n) return s.first_last_share;
  return s.middle_pool / (n - 2);
}

double extramural_weight(int position, int n, const PositionalShares& s) {
  const bool end = position == 1 || position == n;
  switch (n) {
    case 2:
      return 0.5;
    case 3: {
      const double middle = s.second_penultimate_share + s.middle_pool / 2.0;
      const double total = 2.0 * s.first_last_share + middle;
      return (end ? s.first_last_share : middle) / total;
    }
    case 4: {
      const double total = 2.0 * (s.first_last_share + s.second_penultimate_share);
      return (end ? s.first_last_share : s.second_penultimate_share) / total;
    }
    default:
      if (end) return s.first_last_share;
      if (position == 2 || position == n - 1) return s.second_penultimate_share;
      return s.middle_pool / (n - 4);
  }
}

}  // namespace

double fractional_contribution(int position, int author_count, OrderingConvention convention,
                               Collaboration collaboration, const WeightScheme& scheme) {
  if (author_count < 1 || position < 1 || position > author_count) {
    throw std::out_of_range("byline position " + std::to_string(position) + " outside 1.." +
                            std::to_string(author_count));
  }
  if (author_count == 1) return 1.0;
  if (convention == OrderingConvention::alphabetical) return 1.0 / author_count;
  return collaboration == Collaboration::intramural
             ? intramural_weight(position, author_count, scheme.intramural)
             : extramural_weight(position, author_count, scheme.extramural);
}

std::vector<double> byline_weights(int author_count, OrderingConvention convention, Collaboration collaboration,
                                   const WeightScheme& scheme) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(author_count));
  for (int p = 1; p <= author_count; ++p) {
    out.push_back(fractional_contribution(p, author_count, convention, collaboration, scheme));
  }
  return out;
}

}  // namespace fss
