// Copyright 2026 The twofactor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twofactor/miner.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

namespace twofactor {
namespace {

TEST(MinerTest, SmallSweepIsSound) {
  MineConfig config;
  config.n_min = 4;
  config.n_max = 7;
  config.ps = {0.3, 0.6};
  config.seeds = 40;
  const MineReport report = MineCounterexamples(config);
  EXPECT_EQ(report.records.size(), 4u * 2u * 40u);
  EXPECT_EQ(report.soundness_violations, 0);
  EXPECT_EQ(report.reference_gap_count, 0);
  for (const MineRecord& r : report.records) {
    EXPECT_GE(r.candidate_ts, r.oracle_ts);
    EXPECT_EQ(r.gap, r.candidate_ts > r.oracle_ts);
  }
}

TEST(MinerTest, RecordCountLaw) {
  MineConfig config;
  config.n_min = config.n_max = 6;
  config.ps = {0.4};
  config.seeds = 100;
  const MineReport report = MineCounterexamples(config);
  EXPECT_EQ(report.records.size(), 100u);
  const std::string text = FormatMineReport(report);
  std::istringstream lines(text);
  std::string line;
  int records = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("record ", 0) == 0) ++records;
  }
  EXPECT_EQ(records, 100);
  EXPECT_NE(text.find("summary instances=100\n"), std::string::npos);
}

TEST(MinerTest, InstancesReplayFromSeed) {
  MineConfig config;
  config.n_min = 5;
  config.n_max = 8;
  config.ps = {0.5};
  config.seeds = 25;
  config.threads = 3;
  const MineReport a = MineCounterexamples(config);
  config.threads = 1;
  const MineReport b = MineCounterexamples(config);
  ASSERT_EQ(a.records.size(), b.records.size());
  EXPECT_EQ(FormatMineReport(a), FormatMineReport(b));
  for (const MineRecord& r : a.records) {
    const MineRecord again =
        MineInstance(r.n, r.p, r.seed, config.candidate, config.reference);
    EXPECT_EQ(again.candidate_ts, r.candidate_ts);
    EXPECT_EQ(again.oracle_ts, r.oracle_ts);
    EXPECT_EQ(again.edges, r.edges);
  }
}

TEST(MinerTest, GapInstancesAreWritten) {
  const auto dir = std::filesystem::temp_directory_path() / "twofactor_miner_test";
  std::filesystem::remove_all(dir);
  MineConfig config;
  config.n_min = 6;
  config.n_max = 9;
  config.ps = {0.3, 0.5, 0.7};
  config.seeds = 60;
  config.instance_dir = dir.string();
  const MineReport report = MineCounterexamples(config);
  int files = 0;
  for (const MineRecord& r : report.records) {
    if (!r.gap) {
      EXPECT_TRUE(r.instance_file.empty());
      continue;
    }
    ++files;
    ASSERT_TRUE(std::filesystem::exists(r.instance_file));
    std::ifstream in(r.instance_file);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_TRUE(ParseEdgeList(buf.str()).SameEdgeSet(GenerateRandom(r.n, r.p, r.seed)));
  }
  EXPECT_EQ(files, report.gap_count);
  std::filesystem::remove_all(dir);
}

TEST(AuditReportTest, FlagsTamperedTrace) {
  const Graph g = GenerateNamed("fig1");
  SolveReport report = MaximizeFactor(g);
  EXPECT_TRUE(AuditReport(report).empty());
  report.trace[3].chain.edges.pop_back();
  report.trace[3].chain.vertices.pop_back();
  EXPECT_FALSE(AuditReport(report).empty());

  SolveReport stale = MaximizeFactor(g);
  stale.char_number = 2;
  EXPECT_FALSE(AuditReport(stale).empty());
}

}  // namespace
}  // namespace twofactor
