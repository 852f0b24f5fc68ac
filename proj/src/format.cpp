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

#include "fss/format.hpp"

#include <fmt/format.h>

namespace fss::format {

namespace {

std::string strip_negative_zero(std::string s) {
  if (s.empty() || s[0] != '-') return s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const char c = s[i];
    if (c != '0' && c != '.') return s;
  }
  return s.substr(1);
}

}  // namespace

std::string roundtrip(double x) { return fmt::format("{}", x); }

std::string sig9(double x) { return strip_negative_zero(fmt::format("{:.9g}", x)); }

std::string fixed(double x, int decimals) {
  return strip_negative_zero(fmt::format("{:.{}f}", x, decimals));
}

std::string percent(double fraction, int decimals, bool with_sign) {
  std::string s = fixed(100.0 * fraction, decimals);
  if (with_sign && s[0] != '-') {
    bool nonzero = s.find_first_not_of("0.") != std::string::npos;
    if (nonzero) s.insert(s.begin(), '+');
  }
  return s + "%";
}

}  // namespace fss::format
