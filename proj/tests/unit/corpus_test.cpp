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

#include <fstream>

#include <gtest/gtest.h>

#include "fss/error.hpp"
#include "fss/synth.hpp"
#include "test_support.hpp"

namespace fss {
namespace {

using testing::CorpusBuilder;

Corpus two_professors() {
  return CorpusBuilder()
      .professor("A", "IT", Gender::female)
      .professor("B", "IT", Gender::male, Rank::full, 4, std::nullopt)
      .publication("W1", 2012, {"X", "Y"}, 3, 1.25, 2, Collaboration::extramural)
      .link("W1", "A", 1)
      .link("W1", "B", 2)
      .build();
}

void write_text(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::vector<std::string> rules(const ValidationReport& r) {
  std::vector<std::string> out;
  for (const auto& v : r) out.push_back(v.rule);
  return out;
}

TEST(Corpus, LoadsCountsFromFiles) {
  auto dir = testing::scratch_dir("c");
  const Corpus c = two_professors();
  write_corpus(c, CorpusPaths::in_directory(dir));
  const Corpus loaded = load_corpus(CorpusPaths::in_directory(dir));
  EXPECT_EQ(loaded.professors.size(), 2u);
  EXPECT_EQ(loaded.publications.size(), 1u);
  EXPECT_EQ(loaded.links.size(), 2u);
  EXPECT_EQ(loaded, c);
}

TEST(Corpus, RoundTripIsLosslessOnSyntheticData) {
  synth::SynthSpec spec;
  spec.n_professors = 400;
  spec.countries = {{"IT", 250}, {"NO", 150}};
  spec.n_scs = 5;
  const Corpus c = synth::generate_corpus(spec);
  auto dir = testing::scratch_dir("rt");
  write_corpus(c, CorpusPaths::in_directory(dir));
  EXPECT_EQ(read_corpus(CorpusPaths::in_directory(dir)), c);
}

TEST(Corpus, ColumnOrderIsFree) {
  auto dir = testing::scratch_dir("order");
  auto paths = CorpusPaths::in_directory(dir);
  write_corpus(two_professors(), paths);
  write_text(paths.authorship, "position,professor_id,pub_id\n1,A,W1\n2,B,W1\n");
  write_text(paths.publications,
             "collaboration_type,author_count,citations,sc_list,year,pub_id\nextramural,2,3,X;Y,2012,W1\n");
  const Corpus c = load_corpus(paths);
  EXPECT_EQ(c.links[1].position, 2);
  EXPECT_FALSE(c.publications[0].journal_if.has_value());
  EXPECT_EQ(c.publications[0].sc_list, (std::vector<std::string>{"X", "Y"}));
}

TEST(Corpus, DanglingLinkNamesTheId) {
  auto dir = testing::scratch_dir("dangling");
  auto paths = CorpusPaths::in_directory(dir);
  write_corpus(two_professors(), paths);
  write_text(paths.authorship, "pub_id,professor_id,position\nW1,A,1\nW404,B,2\n");
  try {
    load_corpus(paths);
    FAIL() << "expected ReferenceError";
  } catch (const ReferenceError& e) {
    EXPECT_EQ(e.id(), "W404");
  }
}

TEST(Corpus, DuplicateKeyAndParseErrors) {
  auto dir = testing::scratch_dir("dup");
  auto paths = CorpusPaths::in_directory(dir);
  write_corpus(two_professors(), paths);
  write_text(paths.roster, "professor_id,country,gender,rank,years_active\nA,IT,F,full,3\nA,IT,M,full,3\n");
  EXPECT_THROW(load_corpus(paths), DuplicateKeyError);

  write_text(paths.roster, "professor_id,country,gender,rank,years_active\nA,IT,X,full,3\n");
  EXPECT_THROW(load_corpus(paths), ParseError);
  write_text(paths.roster, "professor_id,country,gender,rank,years_active\nA,IT,F,full,three\n");
  EXPECT_THROW(load_corpus(paths), ParseError);
  write_text(paths.roster, "professor_id,country,gender,rank,years_active,shoe_size\nA,IT,F,full,3,9\n");
  EXPECT_THROW(load_corpus(paths), ParseError);
  write_text(paths.roster, "professor_id,country,gender,rank\nA,IT,F,full\n");
  EXPECT_THROW(load_corpus(paths), ParseError);
}

TEST(Corpus, ZeroAuthorCountFailsValidation) {
  auto dir = testing::scratch_dir("zero");
  auto paths = CorpusPaths::in_directory(dir);
  write_corpus(two_professors(), paths);
  write_text(paths.publications,
             "pub_id,year,sc_list,citations,journal_if,author_count,collaboration_type\nW1,2012,X,3,,0,intramural\n");
  try {
    load_corpus(paths);
    FAIL();
  } catch (const ValidationError& e) {
    const auto r = rules(e.report());
    EXPECT_NE(std::find(r.begin(), r.end(), "author-count-positive"), r.end());
  }
}

TEST(Validate, ValidFixtureIsClean) { EXPECT_TRUE(validate_corpus(two_professors()).empty()); }

TEST(Validate, DuplicateProfessorId) {
  Corpus c = two_professors();
  c.professors.push_back(c.professors[0]);
  const auto r = validate_corpus(c);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].rule, "unique-professor-id");
  EXPECT_EQ(r[0].key, "A");
}

TEST(Validate, PositionOutOfRange) {
  Corpus c = CorpusBuilder()
                 .professor("A", "IT", Gender::female)
                 .publication("W1", 2012, {"X"}, 1, std::nullopt, 5)
                 .link("W1", "A", 7)
                 .build();
  const auto r = validate_corpus(c);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].rule, "position-in-range");
}

TEST(Validate, EveryRuleAndOrdering) {
  Corpus c = CorpusBuilder()
                 .professor("A", "IT", Gender::female, Rank::full, 9)
                 .professor("B", "IT", Gender::male, Rank::full, 3, -5.0)
                 .publication("W1", 2010, {"X", "X"}, -1, -2.0, 2)
                 .publication("W2", 2012, {}, 0, std::nullopt, 0)
                 .publication("W3", 2012, {"", "Y"}, 0, std::nullopt, 2)
                 .publication("W3", 2012, {"Y"}, 0, std::nullopt, 2)
                 .link("W1", "A", 1)
                 .link("W1", "A", 2)
                 .link("W1", "B", 1)
                 .link("W9", "A", 1)
                 .link("W3", "Z", 1)
                 .build();
  const auto r = validate_corpus(c);
  const std::vector<std::string> expected{
      "author-count-positive", "citations-nonnegative",   "journal-if-nonnegative", "link-professor-exists",
      "link-publication-exists", "salary-positive",       "sc-code-nonempty",       "sc-list-nonempty",
      "sc-list-unique",        "unique-link",             "unique-position",        "unique-publication-id",
      "year-in-window",        "years-active-range"};
  EXPECT_EQ(rules(r), expected);
  EXPECT_EQ(r, validate_corpus(c));
  for (const auto& v : r) {
    if (v.rule == "link-professor-exists") {
      EXPECT_EQ(v.detail, "Z");
    }
    if (v.rule == "link-publication-exists") {
      EXPECT_EQ(v.detail, "W9");
    }
    if (v.rule == "unique-position") {
      EXPECT_EQ(v.key, "W1#1");
    }
  }
}

}  // namespace
}  // namespace fss
