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

#include "fss/csv.hpp"

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "fss/error.hpp"

namespace fss::csv {

Header::Header(const std::vector<std::string>& names) : names_(names) {}

std::optional<std::size_t> Header::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool Header::has_duplicates() const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) return true;
    }
  }
  return false;
}

void for_each_record(
    const std::filesystem::path& path,
    const std::function<void(const Header&, std::size_t, const std::vector<std::string>&)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::string data;
  in.seekg(0, std::ios::end);
  data.resize(static_cast<std::size_t>(in.tellg()));
  in.seekg(0, std::ios::beg);
  in.read(data.data(), static_cast<std::streamsize>(data.size()));
  if (!in) throw ParseError(path.string(), 0, "read failed");
  if (data.size() >= 3 && data.compare(0, 3, "\xEF\xBB\xBF") == 0) data.erase(0, 3);

  Header header;
  bool have_header = false;
  std::vector<std::string> fields;
  std::string field;
  std::size_t line = 1;
  std::size_t pos = 0;
  const std::size_t n = data.size();

  while (pos < n) {
    const std::size_t record_line = line;
    fields.clear();
    field.clear();
    bool record_done = false;
    bool any_content = false;
    while (!record_done) {
      if (pos < n && data[pos] == '"') {
        any_content = true;
        ++pos;
        for (;;) {
          if (pos >= n) throw ParseError(path.string(), record_line, "unterminated quoted field");
          char c = data[pos++];
          if (c == '"') {
            if (pos < n && data[pos] == '"') {
              field.push_back('"');
              ++pos;
            } else {
              break;
            }
          } else {
            if (c == '\n') ++line;
            field.push_back(c);
          }
        }
      }
      const std::size_t start = pos;
      while (pos < n && data[pos] != ',' && data[pos] != '\n' && data[pos] != '\r') ++pos;
      if (pos > start) {
        any_content = true;
        field.append(data, start, pos - start);
      }
      if (pos >= n) {
        fields.push_back(std::move(field));
        record_done = true;
      } else if (data[pos] == ',') {
        any_content = true;
        fields.push_back(std::move(field));
        field.clear();
        ++pos;
      } else {
        if (data[pos] == '\r') ++pos;
        if (pos < n && data[pos] == '\n') ++pos;
        ++line;
        fields.push_back(std::move(field));
        record_done = true;
      }
    }
    if (!any_content) continue;
    if (!have_header) {
      header = Header(fields);
      if (header.has_duplicates()) {
        throw ParseError(path.string(), record_line, "duplicate column name in header");
      }
      have_header = true;
      continue;
    }
    if (fields.size() != header.size()) {
      std::ostringstream msg;
      msg << "expected " << header.size() << " fields, found " << fields.size();
      throw ParseError(path.string(), record_line, msg.str());
    }
    fn(header, record_line, fields);
  }
  if (!have_header) throw ParseError(path.string(), 1, "missing header row");
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << escape(fields[i]);
  }
  out << '\n';
}

}  // namespace fss::csv
