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

#include <cstdint>
#include <optional>
#include <string_view>

namespace fss {

enum class Gender : std::uint8_t { female, male };
enum class Rank : std::uint8_t { assistant, associate, full };
enum class Collaboration : std::uint8_t { intramural, extramural };
enum class OrderingConvention : std::uint8_t { alphabetical, positional };

inline constexpr Rank kAllRanks[] = {Rank::full, Rank::associate, Rank::assistant};

constexpr std::string_view to_string(Gender g) { return g == Gender::female ? "F" : "M"; }

constexpr std::string_view to_string(Rank r) {
  switch (r) {
    case Rank::assistant: return "assistant";
    case Rank::associate: return "associate";
    case Rank::full: return "full";
  }
  return "";
}

constexpr std::string_view to_string(Collaboration c) {
  return c == Collaboration::intramural ? "intramural" : "extramural";
}

constexpr std::string_view to_string(OrderingConvention c) {
  return c == OrderingConvention::alphabetical ? "alphabetical" : "positional";
}

constexpr std::optional<Gender> parse_gender(std::string_view s) {
  if (s == "F") return Gender::female;
  if (s == "M") return Gender::male;
  return std::nullopt;
}

constexpr std::optional<Rank> parse_rank(std::string_view s) {
  if (s == "assistant") return Rank::assistant;
  if (s == "associate") return Rank::associate;
  if (s == "full") return Rank::full;
  return std::nullopt;
}

constexpr std::optional<Collaboration> parse_collaboration(std::string_view s) {
  if (s == "intramural") return Collaboration::intramural;
  if (s == "extramural") return Collaboration::extramural;
  return std::nullopt;
}

}  // namespace fss
