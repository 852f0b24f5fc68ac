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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fss/config.hpp"
#include "fss/error.hpp"
#include "fss/types.hpp"

namespace fss {

struct ProfessorRecord {
  std::string professor_id;
  std::string country;
  Gender gender = Gender::female;
  Rank rank = Rank::assistant;
  int years_active = 0;
  std::optional<double> salary;
  std::optional<std::string> assigned_sc;

  bool operator==(const ProfessorRecord&) const = default;
};

struct PublicationRecord {
  std::string pub_id;
  int year = 0;
  std::vector<std::string> sc_list;
  std::int64_t citations = 0;
  std::optional<double> journal_if;
  int author_count = 1;
  Collaboration collaboration = Collaboration::intramural;

  bool operator==(const PublicationRecord&) const = default;
};

struct AuthorshipLink {
  std::string pub_id;
  std::string professor_id;
  int position = 1;

  bool operator==(const AuthorshipLink&) const = default;
};

struct Corpus {
  Config config;
  std::vector<ProfessorRecord> professors;
  std::vector<PublicationRecord> publications;
  std::vector<AuthorshipLink> links;

  bool operator==(const Corpus&) const = default;
};

struct CorpusPaths {
  std::filesystem::path roster;
  std::filesystem::path publications;
  std::filesystem::path authorship;
  std::filesystem::path config;

  /// roster.csv, publications.csv, authorship.csv and config.json inside dir.
  static CorpusPaths in_directory(const std::filesystem::path& dir);
};

struct Violation {
  std::string rule;
  std::string key;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

/// Thrown by load_corpus when the corpus parses but breaks an invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Parses the three tables and the configuration without checking any
/// cross-record invariant. Throws ParseError or ConfigError.
Corpus read_corpus(const CorpusPaths& paths);

/// Every violated type invariant, ordered by (rule, key). Pure.
ValidationReport validate_corpus(const Corpus& corpus);

/// read_corpus followed by validate_corpus. A dangling link raises
/// ReferenceError, a duplicate key DuplicateKeyError, anything else
/// ValidationError.
Corpus load_corpus(const CorpusPaths& paths);

/// Writes the corpus back in the input format. Lossless.
void write_corpus(const Corpus& corpus, const CorpusPaths& paths);

void write_roster(const std::vector<ProfessorRecord>& roster, std::ostream& out);
void write_publications(const std::vector<PublicationRecord>& pubs, std::ostream& out);
void write_authorship(const std::vector<AuthorshipLink>& links, std::ostream& out);

}  // namespace fss
