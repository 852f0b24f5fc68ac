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

#include "fss/cli.hpp"

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fss/report.hpp"
#include "fss/synth.hpp"
#include "json.hpp"
#include "test_support.hpp"

namespace fss::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "fss");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t line_count(const fs::path& p) {
  const std::string s = slurp(p);
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    root_ = new fs::path(fss::testing::scratch_dir("cli"));
    synth::SynthSpec s;
    s.n_professors = 600;
    s.countries = {{"IT", 400}, {"NO", 200}};
    s.n_scs = 12;
    std::ofstream(*root_ / "spec.json") << synth::to_json(s).dump(2);
    const auto r = call({"simulate", "--spec", (*root_ / "spec.json").string(), "--out", (*root_ / "corpus").string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  static void TearDownTestSuite() { delete root_; }

  static std::vector<std::string> inputs(const fs::path& dir) {
    return {"--roster", (dir / "roster.csv").string(),   "--pubs",   (dir / "publications.csv").string(),
            "--authorship", (dir / "authorship.csv").string(), "--config", (dir / "config.json").string()};
  }
  static std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
  }

  static fs::path* root_;
};

fs::path* CliTest::root_ = nullptr;

TEST_F(CliTest, ValidateAndCompute) {
  const fs::path corpus = *root_ / "corpus";
  auto r = call(with({"validate"}, inputs(corpus)));
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  const fs::path out = *root_ / "scores.csv";
  r = call(with({"compute", "--out", out.string()}, inputs(corpus)));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto manifest = nlohmann::json::parse(slurp(*root_ / "scores.manifest.json"));
  const std::size_t members = std::stoul(manifest.at("facts").at("cohort").get<std::string>());
  EXPECT_EQ(line_count(out), members + 1);
  EXPECT_EQ(manifest.at("outputs").at("scores.csv"), report::sha256_file(out));
  EXPECT_TRUE(fs::exists(*root_ / "scores.baselines.csv"));
  EXPECT_TRUE(fs::exists(*root_ / "scores.classification.csv"));
  EXPECT_TRUE(fs::exists(*root_ / "scores.exclusions.csv"));

  r = call(with({"compute", "--format", "json", "--out", (*root_ / "scores.json").string()}, inputs(corpus)));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(slurp(*root_ / "scores.json")).at("scores").size(), members);
}

TEST_F(CliTest, ComputeIsThreadCountIndependent) {
  const fs::path corpus = *root_ / "corpus";
  ASSERT_EQ(call(with({"compute", "--threads", "1", "--out", (*root_ / "t1.csv").string()}, inputs(corpus))).code, 0);
  ASSERT_EQ(call(with({"compute", "--threads", "4", "--out", (*root_ / "t4.csv").string()}, inputs(corpus))).code, 0);
  EXPECT_EQ(slurp(*root_ / "t1.csv"), slurp(*root_ / "t4.csv"));
}

TEST_F(CliTest, Reports) {
  const fs::path corpus = *root_ / "corpus";
  for (const std::string kind : {"gap", "deciles", "top", "components", "representation"}) {
    const fs::path out = *root_ / (kind + ".csv");
    const auto r = call(with({"report", kind, "--out", out.string()}, inputs(corpus)));
    EXPECT_EQ(r.code, kExitOk) << kind << ": " << r.err;
    EXPECT_GT(line_count(out), 1u) << kind;
    EXPECT_TRUE(fs::exists(*root_ / (kind + ".manifest.json"))) << kind;
  }
  EXPECT_TRUE(fs::exists(*root_ / "gap.between.csv"));
  EXPECT_TRUE(fs::exists(*root_ / "gap.descriptive.csv"));
  EXPECT_TRUE(fs::exists(*root_ / "deciles.IT.plot.csv"));
  EXPECT_EQ(slurp(*root_ / "deciles.IT.plot.csv").substr(0, 35), "decile,group,share,expected_share\n1");

  auto r = call(with({"report", "gap", "--grouping", "sc", "--country", "NO", "--out", (*root_ / "sc.csv").string()},
                     inputs(corpus)));
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(*root_ / "sc.female_advantage.csv"));
  r = call(with({"report", "top", "--format", "json", "--out", (*root_ / "top.json").string()}, inputs(corpus)));
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(nlohmann::json::accept(slurp(*root_ / "top.json")));
  r = call(with({"report", "gap", "--grouping", "bogus", "--out", (*root_ / "x.csv").string()}, inputs(corpus)));
  EXPECT_EQ(r.code, kExitUsage);
}

TEST_F(CliTest, ValidationFailuresExitOne) {
  const fs::path bad = *root_ / "bad";
  fs::create_directories(bad);
  for (const char* f : {"roster.csv", "publications.csv", "config.json"}) {
    fs::copy_file(*root_ / "corpus" / f, bad / f, fs::copy_options::overwrite_existing);
  }
  std::string links = slurp(*root_ / "corpus" / "authorship.csv");
  links += "W99999999,P9999999,1\n";
  std::ofstream(bad / "authorship.csv", std::ios::binary) << links;
  auto r = call(with({"validate"}, inputs(bad)));
  EXPECT_EQ(r.code, kExitViolations);
  EXPECT_NE(r.out.find("W99999999"), std::string::npos);
  r = call(with({"compute", "--out", (*root_ / "bad.csv").string()}, inputs(bad)));
  EXPECT_EQ(r.code, kExitViolations);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(call({"compute", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call(with({"compute"}, inputs(*root_ / "missing"))).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST_F(CliTest, SimulateIsReproducible) {
  const auto spec = (*root_ / "spec.json").string();
  ASSERT_EQ(call({"simulate", "--spec", spec, "--seed", "9", "--out", (*root_ / "s1").string()}).code, 0);
  ASSERT_EQ(call({"simulate", "--spec", spec, "--seed", "9", "--out", (*root_ / "s2").string()}).code, 0);
  for (const char* f : {"roster.csv", "publications.csv", "authorship.csv", "config.json"}) {
    EXPECT_EQ(report::sha256_file(*root_ / "s1" / f), report::sha256_file(*root_ / "s2" / f)) << f;
  }
  EXPECT_NE(report::sha256_file(*root_ / "s1" / "roster.csv"), report::sha256_file(*root_ / "corpus" / "roster.csv"));
}

}  // namespace
}  // namespace fss::cli
