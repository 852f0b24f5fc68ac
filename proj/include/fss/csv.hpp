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

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fss::csv {

/// Column lookup built from a header row. Names are matched exactly;
/// column order in the file is free.
class Header {
 public:
  Header() = default;
  explicit Header(const std::vector<std::string>& names);

  std::optional<std::size_t> find(std::string_view name) const;
  bool has_duplicates() const;
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
};

/// Streams a CSV file (RFC 4180 quoting, LF or CRLF line ends). The first
/// record is the header. The callback receives the 1-based physical line
/// number where each record starts. Blank lines are skipped. Throws
/// ParseError on unterminated quotes or I/O failure.
void for_each_record(
    const std::filesystem::path& path,
    const std::function<void(const Header&, std::size_t line, const std::vector<std::string>& fields)>& fn);

std::string escape(std::string_view field);

/// Writes one record, quoting fields as needed.
void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace fss::csv
