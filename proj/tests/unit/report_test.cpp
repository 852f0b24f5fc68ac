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

#include "fss/report.hpp"

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures/layout_fixtures.hpp"
#include "fss/pipeline.hpp"
#include "test_support.hpp"

namespace fss::report {
namespace {

TEST(Layouts, Descriptive) {
  EXPECT_EQ(to_csv(descriptive_layout(fixtures::descriptive())), fixtures::golden("descriptive_layout.csv"));
}

TEST(Layouts, TopShares) {
  EXPECT_EQ(to_csv(top_share_layout(fixtures::top_shares())), fixtures::golden("top_share_layout.csv"));
}

TEST(Layouts, Representation) {
  const auto c = fixtures::representation();
  EXPECT_EQ(to_csv(representation_layout(c)), fixtures::golden("representation_layout.csv"));
}

TEST(Formatting, Stars) {
  const auto& levels = stats::default_significance_levels();
  EXPECT_EQ(stars(stats::count_stars(0.004, levels)), "***");
  EXPECT_EQ(stars(stats::count_stars(0.5, levels)), "");
  EXPECT_EQ(stars(1), "*");
}

TEST(Formatting, GapTable) {
  GapReport r;
  GapRow row;
  row.group = "All";
  row.country = "IT";
  row.n_m = 3;
  row.n_f = 3;
  row.mean_m = 5.0;
  row.mean_f = 2.0;
  row.delta_mean = 3.0;
  row.median_m = 5.0;
  row.median_f = 2.0;
  row.delta_median = 3.0;
  row.test = stats::RankSumResult{0.0, 0.1, stats::RankSumMethod::exact, 1};
  r.within.push_back(row);
  GapRow empty;
  empty.group = "All";
  empty.country = "NO";
  empty.n_m = 2;
  empty.empty_cell = true;
  r.within.push_back(empty);
  const Table t = gap_table(r);
  ASSERT_EQ(t.rows.size(), 2u);
  const auto col = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(t.header.begin(), t.header.end(), name) - t.header.begin());
  };
  EXPECT_EQ(t.rows[0][col("delta_mean")], "3.00");
  EXPECT_EQ(t.rows[0][col("p_value")], "0.1000");
  EXPECT_EQ(t.rows[0][col("stars")], "*");
  EXPECT_EQ(t.rows[0][col("method")], "exact");
  EXPECT_EQ(t.rows[1][col("delta_mean")], "");
  EXPECT_EQ(t.rows[1][col("n_m")], "2");
}

TEST(Manifest, Digests) {
  EXPECT_EQ(sha256_bytes("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const auto dir = testing::scratch_dir("manifest");
  {
    std::ofstream f(dir / "x.txt", std::ios::binary);
    f << "abc";
  }
  EXPECT_EQ(sha256_file(dir / "x.txt"), sha256_bytes("abc"));
  EXPECT_THROW(sha256_file(dir / "missing.txt"), Error);
  RunManifest m;
  m.command = "compute";
  m.outputs["scores.csv"] = "00";
  const auto j = to_json(m);
  EXPECT_EQ(j.at("engine_version"), kEngineVersion);
  EXPECT_EQ(j.at("outputs").at("scores.csv"), "00");
  EXPECT_EQ(utc_timestamp().size(), 20u);
}

TEST(Tables, ScoresAndAuditTables) {
  testing::CorpusBuilder b;
  b.professor("A", "IT", Gender::female).professor("B", "IT", Gender::male).professor("C", "IT", Gender::male, Rank::full, 1);
  b.publication("W1", 2012, {"X"}, 3, 1.5).link("W1", "A");
  b.publication("W2", 2012, {"X"}, 1, std::nullopt, 2).link("W2", "B").link("W2", "C", 2);
  auto run = run_analysis(b.build());
  const Table s = scores_table(*run);
  ASSERT_EQ(s.rows.size(), 2u);
  EXPECT_EQ(s.header.front(), "professor_id");
  EXPECT_EQ(s.rows[0][0], "A");
  EXPECT_EQ(s.rows[1].back(), "");  // B has no impact factor
  const Table e = exclusions_table(run->cohort);
  ASSERT_EQ(e.rows.size(), 1u);
  EXPECT_EQ(e.rows[0][0], "C");
  EXPECT_EQ(classification_table(*run).rows.size(), 2u);
  EXPECT_FALSE(baselines_table(*run).rows.empty());
  const auto j = scores_json(*run);
  EXPECT_EQ(j.at("scores").size(), 2u);
  EXPECT_TRUE(j.at("scores")[1].at("aif_norm").is_null());
}

}  // namespace
}  // namespace fss::report
