// Copyright 2026 The LFG Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lfg/bench.h"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"
#include "lfg/game_io.h"

namespace lfg {
namespace {

TEST(GenerateRandomGameTest, DeterministicPerSeed) {
  EXPECT_EQ(GenerateRandomGame(3, 4, 0), GenerateRandomGame(3, 4, 0));
  EXPECT_FALSE(GenerateRandomGame(3, 4, 0) == GenerateRandomGame(3, 4, 1));
  const NormalFormGame game = GenerateRandomGame(4, 3, 1);
  for (int p = 0; p < 4; ++p) EXPECT_EQ(game.payoffs(p).size(), 81u);
}

TEST(GenerateRandomGameTest, UniformOnOneToHundred) {
  double total = 0.0;
  int64_t count = 0;
  for (uint64_t seed = 0; count < 10000; ++seed) {
    const NormalFormGame game = GenerateRandomGame(3, 4, seed);
    for (int p = 0; p < 3; ++p) {
      for (double v : game.payoffs(p)) {
        EXPECT_GE(v, 1.0);
        EXPECT_LE(v, 100.0);
        total += v;
        ++count;
      }
    }
  }
  EXPECT_GE(total / count, 49.0);
  EXPECT_LE(total / count, 52.0);
}

TEST(InstanceSeedTest, DistinctAcrossCells) {
  EXPECT_EQ(InstanceSeed(0, 3, 4, 7), InstanceSeed(0, 3, 4, 7));
  EXPECT_NE(InstanceSeed(0, 3, 4, 7), InstanceSeed(0, 3, 4, 8));
  EXPECT_NE(InstanceSeed(0, 3, 4, 7), InstanceSeed(0, 3, 5, 7));
  EXPECT_NE(InstanceSeed(0, 3, 4, 7), InstanceSeed(1, 3, 4, 7));
}

TEST(WorkerCapTest, ReadsTheEnvironment) {
  setenv("LFG_WORKERS", "3", 1);
  EXPECT_EQ(WorkerCapFromEnvironment(), 3);
  unsetenv("LFG_WORKERS");
  EXPECT_GE(WorkerCapFromEnvironment(), 1);
}

BenchConfig SmallConfig() {
  BenchConfig config;
  config.players = {3};
  config.actions = {2, 3};
  config.instances = 3;
  config.algorithms = {"bnb", "enum", "milp"};
  config.big_m = {10.0, 100.0};
  config.time_limit_seconds = 10.0;
  config.base_seed = 5;
  return config;
}

TEST(RunBenchTest, SeedsDetermineEverythingButTime) {
  const BenchConfig config = SmallConfig();
  std::vector<BenchRow> first = RunBench(config);
  BenchConfig parallel = config;
  parallel.workers = 2;
  std::vector<BenchRow> second = RunBench(parallel);
  ASSERT_EQ(first.size(), 2u * 4u * 3u);
  ASSERT_EQ(first.size(), second.size());
  for (size_t i = 0; i < first.size(); ++i) {
    EXPECT_NE(first[i].status, "ERROR") << first[i].algorithm;
    first[i].time = second[i].time = 0.0;
    EXPECT_EQ(first[i], second[i]) << i;
    EXPECT_EQ(first[i].seed, InstanceSeed(5, first[i].n, first[i].m, first[i].instance));
    if (first[i].Gap()) { EXPECT_GE(*first[i].Gap(), -1e-6); }
  }
  for (size_t i = 1; i < first.size(); ++i) {
    const auto key = [](const BenchRow& r) {
      return std::make_tuple(r.n, r.m, r.algorithm, r.instance);
    };
    EXPECT_LT(key(first[i - 1]), key(first[i]));
  }
}

TEST(RunBenchTest, CsvRoundTripAndSummary) {
  const std::vector<BenchRow> rows = RunBench(SmallConfig());
  EXPECT_EQ(ParseRawCsv(WriteRawCsv(rows)), rows);

  const std::vector<BenchSummary> summary = Summarize(rows);
  ASSERT_EQ(summary.size(), 8u);
  // Recompute every average from the raw rows.
  for (const BenchSummary& s : summary) {
    double time = 0, lb = 0, lbe = 0, gap = 0;
    int count = 0, lb_n = 0, lbe_n = 0, gap_n = 0, optimal = 0, feasible = 0;
    for (const BenchRow& r : rows) {
      if (r.n != s.n || r.m != s.m || r.algorithm != s.algorithm) continue;
      ++count;
      time += r.time;
      if (r.lb) lb += *r.lb, ++lb_n;
      if (r.lbe) lbe += *r.lbe, ++lbe_n;
      if (r.lb && r.ub) gap += *r.ub - *r.lb, ++gap_n;
      optimal += r.optimal;
      feasible += r.feasible;
    }
    EXPECT_EQ(s.count, count);
    EXPECT_NEAR(s.mean_time, time / count, 1e-9);
    if (lb_n) { EXPECT_NEAR(*s.mean_lb, lb / lb_n, 1e-9); }
    if (lbe_n) { EXPECT_NEAR(*s.mean_lbe, lbe / lbe_n, 1e-9); }
    if (gap_n) { EXPECT_NEAR(*s.mean_gap, gap / gap_n, 1e-9); }
    EXPECT_NEAR(s.optimal_percent, 100.0 * optimal / count, 1e-9);
    EXPECT_NEAR(s.feasible_percent, 100.0 * feasible / count, 1e-9);
  }

  // The emitted summary carries the same numbers.
  std::istringstream in(WriteSummaryCsv(summary));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,m,algorithm,count,time,lb,gap,lbe,opt_percent,feas_percent");
  for (const BenchSummary& s : summary) {
    ASSERT_TRUE(std::getline(in, line));
    std::vector<std::string> fields;
    std::stringstream cells(line);
    for (std::string cell; std::getline(cells, cell, ',');) fields.push_back(cell);
    fields.resize(10);
    EXPECT_EQ(fields[2], s.algorithm);
    EXPECT_EQ(std::stoi(fields[3]), s.count);
    if (s.mean_lb) { EXPECT_NEAR(std::stod(fields[5]), *s.mean_lb, 1e-9); }
    EXPECT_NEAR(std::stod(fields[8]), s.optimal_percent, 1e-9);
  }
}

TEST(ParseRawCsvTest, RejectsBadInput) {
  EXPECT_THROW(ParseRawCsv("a,b\n"), ParseError);
  const std::string header =
      "n,m,algorithm,instance,seed,status,time,lb,ub,gap,lbe,optimal,feasible\n";
  EXPECT_THROW(ParseRawCsv(header + "3,2,bnb,0\n"), ParseError);
  EXPECT_TRUE(ParseRawCsv(header).empty());
}

}  // namespace
}  // namespace lfg
