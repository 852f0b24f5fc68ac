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

#include "fss/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "fss/csv.hpp"
#include "fss/format.hpp"

namespace fss {

namespace {

struct Row {
  const std::filesystem::path& file;
  const csv::Header& header;
  std::size_t line;
  const std::vector<std::string>& fields;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(file.string(), line, what); }

  const std::string* optional_field(std::string_view name) const {
    auto idx = header.find(name);
    return idx ? &fields[*idx] : nullptr;
  }

  const std::string& field(std::string_view name) const {
    const std::string* f = optional_field(name);
    if (!f) fail("missing column '" + std::string(name) + "'");
    return *f;
  }

  template <typename Int>
  Int integer(std::string_view name) const {
    const std::string& s = field(name);
    Int value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      fail("column '" + std::string(name) + "': not an integer: '" + s + "'");
    }
    return value;
  }

  std::optional<double> optional_real(std::string_view name) const {
    const std::string* s = optional_field(name);
    if (!s || s->empty()) return std::nullopt;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s->data(), s->data() + s->size(), value);
    if (ec != std::errc() || ptr != s->data() + s->size()) {
      fail("column '" + std::string(name) + "': not a number: '" + *s + "'");
    }
    return value;
  }
};

void require_columns(const std::filesystem::path& file, const csv::Header& header,
                     std::initializer_list<std::string_view> required,
                     std::initializer_list<std::string_view> optional) {
  for (auto name : required) {
    if (!header.find(name)) throw ParseError(file.string(), 1, "missing column '" + std::string(name) + "'");
  }
  for (const auto& name : header.names()) {
    bool known = std::find(required.begin(), required.end(), name) != required.end() ||
                 std::find(optional.begin(), optional.end(), name) != optional.end();
    if (!known) throw ParseError(file.string(), 1, "unknown column '" + name + "'");
  }
}

std::vector<std::string> split_sc_list(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    auto semi = s.find(';', start);
    out.push_back(s.substr(start, semi - start));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

std::string join_sc_list(const std::vector<std::string>& scs) {
  std::string out;
  for (std::size_t i = 0; i < scs.size(); ++i) {
    if (i) out.push_back(';');
    out += scs[i];
  }
  return out;
}

std::vector<ProfessorRecord> read_roster(const std::filesystem::path& path) {
  std::vector<ProfessorRecord> out;
  bool checked = false;
  csv::for_each_record(path, [&](const csv::Header& h, std::size_t line, const std::vector<std::string>& f) {
    if (!checked) {
      require_columns(path, h, {"professor_id", "country", "gender", "rank", "years_active"}, {"salary"});
      checked = true;
    }
    Row row{path, h, line, f};
    ProfessorRecord p;
    p.professor_id = row.field("professor_id");
    p.country = row.field("country");
    auto gender = parse_gender(row.field("gender"));
    if (!gender) row.fail("gender must be F or M");
    p.gender = *gender;
    auto rank = parse_rank(row.field("rank"));
    if (!rank) row.fail("rank must be assistant, associate or full");
    p.rank = *rank;
    p.years_active = row.integer<int>("years_active");
    p.salary = row.optional_real("salary");
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<PublicationRecord> read_publications(const std::filesystem::path& path) {
  std::vector<PublicationRecord> out;
  bool checked = false;
  csv::for_each_record(path, [&](const csv::Header& h, std::size_t line, const std::vector<std::string>& f) {
    if (!checked) {
      require_columns(path, h,
                      {"pub_id", "year", "sc_list", "citations", "author_count", "collaboration_type"},
                      {"journal_if"});
      checked = true;
    }
    Row row{path, h, line, f};
    PublicationRecord p;
    p.pub_id = row.field("pub_id");
    p.year = row.integer<int>("year");
    p.sc_list = split_sc_list(row.field("sc_list"));
    p.citations = row.integer<std::int64_t>("citations");
    p.journal_if = row.optional_real("journal_if");
    p.author_count = row.integer<int>("author_count");
    auto collab = parse_collaboration(row.field("collaboration_type"));
    if (!collab) row.fail("collaboration_type must be intramural or extramural");
    p.collaboration = *collab;
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<AuthorshipLink> read_authorship(const std::filesystem::path& path) {
  std::vector<AuthorshipLink> out;
  bool checked = false;
  csv::for_each_record(path, [&](const csv::Header& h, std::size_t line, const std::vector<std::string>& f) {
    if (!checked) {
      require_columns(path, h, {"pub_id", "professor_id", "position"}, {});
      checked = true;
    }
    Row row{path, h, line, f};
    AuthorshipLink l;
    l.pub_id = row.field("pub_id");
    l.professor_id = row.field("professor_id");
    l.position = row.integer<int>("position");
    out.push_back(std::move(l));
  });
  return out;
}

std::string link_key(const AuthorshipLink& l) { return l.pub_id + "/" + l.professor_id; }

}  // namespace

CorpusPaths CorpusPaths::in_directory(const std::filesystem::path& dir) {
  return {dir / "roster.csv", dir / "publications.csv", dir / "authorship.csv", dir / "config.json"};
}

ValidationError::ValidationError(ValidationReport report)
    : Error("corpus failed validation with " + std::to_string(report.size()) + " violation(s)" +
            (report.empty() ? std::string() : ", first: " + report.front().rule + " " + report.front().key)),
      report_(std::move(report)) {}

Corpus read_corpus(const CorpusPaths& paths) {
  Corpus c;
  c.config = load_config(paths.config);
  c.professors = read_roster(paths.roster);
  c.publications = read_publications(paths.publications);
  c.links = read_authorship(paths.authorship);
  return c;
}

ValidationReport validate_corpus(const Corpus& corpus) {
  ValidationReport report;
  const AnalysisConfig& cfg = corpus.config.analysis;
  auto add = [&](std::string rule, std::string key, std::string detail) {
    report.push_back({std::move(rule), std::move(key), std::move(detail)});
  };

  std::unordered_map<std::string_view, std::size_t> professor_index;
  professor_index.reserve(corpus.professors.size());
  for (std::size_t i = 0; i < corpus.professors.size(); ++i) {
    const auto& p = corpus.professors[i];
    if (!professor_index.emplace(p.professor_id, i).second) {
      add("unique-professor-id", p.professor_id, "professor_id repeated");
    }
    if (p.years_active < 1 || p.years_active > cfg.window_years()) {
      add("years-active-range", p.professor_id, "years_active " + std::to_string(p.years_active) + " outside [1, " +
                                                    std::to_string(cfg.window_years()) + "]");
    }
    if (p.salary && !(*p.salary > 0.0)) add("salary-positive", p.professor_id, "salary must be positive");
  }

  std::unordered_map<std::string_view, const PublicationRecord*> pubs;
  pubs.reserve(corpus.publications.size());
  for (const auto& p : corpus.publications) {
    auto [it, inserted] = pubs.emplace(p.pub_id, &p);
    if (!inserted) add("unique-publication-id", p.pub_id, "pub_id repeated");
    if (p.year < cfg.window_start || p.year > cfg.window_end) {
      add("year-in-window", p.pub_id, "year " + std::to_string(p.year) + " outside the observation window");
    }
    if (p.sc_list.empty()) add("sc-list-nonempty", p.pub_id, "publication lists no subject category");
    bool dup = false;
    for (std::size_t a = 0; a < p.sc_list.size(); ++a) {
      for (std::size_t b = a + 1; b < p.sc_list.size(); ++b) dup = dup || p.sc_list[a] == p.sc_list[b];
    }
    if (dup) add("sc-list-unique", p.pub_id, "subject category repeated in sc_list");
    if (std::any_of(p.sc_list.begin(), p.sc_list.end(), [](const std::string& s) { return s.empty(); })) {
      add("sc-code-nonempty", p.pub_id, "empty subject category code");
    }
    if (p.author_count < 1) add("author-count-positive", p.pub_id, "author_count must be at least 1");
    if (p.citations < 0) add("citations-nonnegative", p.pub_id, "citations must be non-negative");
    if (p.journal_if && !(*p.journal_if >= 0.0)) add("journal-if-nonnegative", p.pub_id, "journal_if must be non-negative");
  }

  struct LinkSlot {
    std::size_t pub;
    std::size_t other;  // byline position or professor index
    std::size_t link;
    bool operator<(const LinkSlot& o) const { return std::tie(pub, other, link) < std::tie(o.pub, o.other, o.link); }
  };
  std::vector<LinkSlot> positions, pairs;
  positions.reserve(corpus.links.size());
  pairs.reserve(corpus.links.size());
  for (std::size_t i = 0; i < corpus.links.size(); ++i) {
    const auto& l = corpus.links[i];
    auto prof = professor_index.find(l.professor_id);
    if (prof == professor_index.end()) add("link-professor-exists", link_key(l), l.professor_id);
    auto pub = pubs.find(l.pub_id);
    if (pub == pubs.end()) {
      add("link-publication-exists", link_key(l), l.pub_id);
      continue;
    }
    const std::size_t pub_index = static_cast<std::size_t>(pub->second - corpus.publications.data());
    if (l.position < 1 || l.position > pub->second->author_count) {
      add("position-in-range", link_key(l),
          "position " + std::to_string(l.position) + " on a " + std::to_string(pub->second->author_count) +
              "-author publication");
    } else {
      positions.push_back({pub_index, static_cast<std::size_t>(l.position), i});
    }
    if (prof != professor_index.end()) pairs.push_back({pub_index, prof->second, i});
  }
  // Later occurrences of a (publication, position) or (publication,
  // professor) key are the violations.
  std::sort(positions.begin(), positions.end());
  for (std::size_t k = 1; k < positions.size(); ++k) {
    if (positions[k].pub == positions[k - 1].pub && positions[k].other == positions[k - 1].other) {
      const auto& l = corpus.links[positions[k].link];
      add("unique-position", l.pub_id + "#" + std::to_string(l.position), "byline position claimed twice");
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    if (pairs[k].pub == pairs[k - 1].pub && pairs[k].other == pairs[k - 1].other) {
      add("unique-link", link_key(corpus.links[pairs[k].link]), "authorship repeated");
    }
  }

  std::sort(report.begin(), report.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.rule, a.key, a.detail) < std::tie(b.rule, b.key, b.detail);
  });
  return report;
}

Corpus load_corpus(const CorpusPaths& paths) {
  Corpus c = read_corpus(paths);
  ValidationReport report = validate_corpus(c);
  if (report.empty()) return c;
  for (const auto& v : report) {
    if (v.rule == "unique-professor-id" || v.rule == "unique-publication-id") throw DuplicateKeyError(v.key);
  }
  for (const auto& v : report) {
    if (v.rule == "link-professor-exists" || v.rule == "link-publication-exists") throw ReferenceError(v.detail);
  }
  throw ValidationError(std::move(report));
}

void write_roster(const std::vector<ProfessorRecord>& roster, std::ostream& out) {
  csv::write_row(out, {"professor_id", "country", "gender", "rank", "years_active", "salary"});
  for (const auto& p : roster) {
    csv::write_row(out, {p.professor_id, p.country, std::string(to_string(p.gender)), std::string(to_string(p.rank)),
                         std::to_string(p.years_active), p.salary ? format::roundtrip(*p.salary) : std::string()});
  }
}

void write_publications(const std::vector<PublicationRecord>& pubs, std::ostream& out) {
  csv::write_row(out, {"pub_id", "year", "sc_list", "citations", "journal_if", "author_count", "collaboration_type"});
  for (const auto& p : pubs) {
    csv::write_row(out, {p.pub_id, std::to_string(p.year), join_sc_list(p.sc_list), std::to_string(p.citations),
                         p.journal_if ? format::roundtrip(*p.journal_if) : std::string(),
                         std::to_string(p.author_count), std::string(to_string(p.collaboration))});
  }
}

void write_authorship(const std::vector<AuthorshipLink>& links, std::ostream& out) {
  csv::write_row(out, {"pub_id", "professor_id", "position"});
  for (const auto& l : links) csv::write_row(out, {l.pub_id, l.professor_id, std::to_string(l.position)});
}

void write_corpus(const Corpus& corpus, const CorpusPaths& paths) {
  auto open = [](const std::filesystem::path& p) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error("cannot write " + p.string());
    return out;
  };
  {
    auto out = open(paths.roster);
    write_roster(corpus.professors, out);
  }
  {
    auto out = open(paths.publications);
    write_publications(corpus.publications, out);
  }
  {
    auto out = open(paths.authorship);
    write_authorship(corpus.links, out);
  }
  {
    auto out = open(paths.config);
    out << to_json(corpus.config).dump(2) << '\n';
  }
}

}  // namespace fss
