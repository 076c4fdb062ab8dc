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

#include "lfg/enumeration.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "lfg/bench.h"
#include "lfg/gadgets.h"
#include "support/oracles.h"

namespace lfg {
namespace {

using ::lfg::testing::NaiveGridMax;
using ::lfg::testing::NaiveNes;
using ::lfg::testing::NaivePessimistic;
using ::lfg::testing::RandomSimplexPoint;

TEST(SolveEnumTest, NonexistenceGame) {
  const NormalFormGame game = MakeNonexistenceGame();
  const SolveReport report = SolveEnum(game, 0.1);
  ASSERT_EQ(report.status, ReportStatus::kOptimal);
  EXPECT_NEAR(*report.supremum, 7.5, 1e-6);
  EXPECT_FALSE(report.attained);
  ASSERT_TRUE(report.approx_strategy.has_value());
  EXPECT_GE(*NaivePessimistic(game, report.approx_strategy->probabilities()),
            7.4 - 1e-6);
}

TEST(SolveEnumTest, ArbitrarilyWorseGame) {
  const NormalFormGame game = MakeArbitrarilyWorseGame(10.0);
  const SolveReport report = SolveEnum(game, 0.1);
  ASSERT_EQ(report.status, ReportStatus::kOptimal);
  EXPECT_NEAR(*report.supremum, 10.0, 1e-6);
  EXPECT_TRUE(report.attained);
  EXPECT_GT(report.epsilon, kAttainmentTolerance);
  EXPECT_NEAR(report.witness[1], 1.0, 1e-6);
  EXPECT_NEAR(*NaivePessimistic(game, report.witness.probabilities()), 10.0, 1e-6);
}

TEST(SolveEnumTest, NoEquilibriumAnywhere) {
  const NormalFormGame game({2, 2, 2}, {{1, 1, 0, 0, 0, 0, 1, 1},
                                        {0, 0, 1, 1, 1, 1, 0, 0},
                                        {3, 1, 4, 1, 5, 9, 2, 6}});
  for (int i = 0; i <= 50; ++i) {
    EXPECT_TRUE(NaiveNes(game, {1 - i / 50.0, i / 50.0}).empty());
  }
  const SolveReport report = SolveEnum(game, 0.1);
  EXPECT_EQ(report.status, ReportStatus::kNoPureNe);
  EXPECT_FALSE(report.supremum.has_value());
}

TEST(SolveEnumTest, RefusesLargeGames) {
  const NormalFormGame game = GenerateRandomGame(3, 5, 1);
  EXPECT_THROW(SolveEnum(game, 0.1), SizeLimitError);
  EnumOptions options;
  options.max_profiles = 25;
  EXPECT_NO_THROW(SolveEnum(GenerateRandomGame(3, 2, 1), 0.1, options));
}

TEST(ForEachCandidateSupportTest, EmptySetFirstAndSorted) {
  const NormalFormGame game = GenerateRandomGame(3, 2, 3);
  std::vector<std::vector<int>> supports;
  ForEachCandidateSupport(game, [&](const std::vector<int>& s) { supports.push_back(s); });
  ASSERT_FALSE(supports.empty());
  EXPECT_TRUE(supports.front().empty());
  for (const auto& s : supports) EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_EQ(std::set(supports.begin(), supports.end()).size(), supports.size());
}

TEST(EnumPropertyTest, RealizedConfigurationsAreVisited) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 6; ++trial) {
    const int m = 2 + trial % 2;
    const NormalFormGame game = GenerateRandomGame(3, m, rng());
    std::set<std::vector<int>> candidates;
    ForEachCandidateSupport(game, [&](const std::vector<int>& s) { candidates.insert(s); });
    for (int sample = 0; sample < 100; ++sample) {
      std::vector<int> realized;
      for (const auto& a : NaiveNes(game, RandomSimplexPoint(rng, m))) {
        realized.push_back(game.Encode({a}));
      }
      EXPECT_TRUE(candidates.count(realized)) << trial;
      if (!realized.empty()) {
        EXPECT_TRUE(CheckEmptiness(game, FullConfiguration(game, realized)).has_value());
      }
    }
  }
}

TEST(EnumPropertyTest, SupremumSitsAboveTheGrid) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 12; ++trial) {
    const int m = 2 + trial % 3;
    const NormalFormGame game = GenerateRandomGame(3, m, rng());
    const SolveReport report = SolveEnum(game, 0.1);
    ASSERT_EQ(report.status, ReportStatus::kOptimal);
    const int denominator = m == 4 ? 20 : 50;
    const auto grid = NaiveGridMax(game, denominator);
    ASSERT_TRUE(report.supremum.has_value());
    ASSERT_TRUE(grid.has_value());
    EXPECT_GE(*report.supremum, *grid - 1e-6);
    EXPECT_LE(*report.supremum, *grid + game.MaxAbsPayoff() * m / denominator);
    if (report.attained) {
      EXPECT_NEAR(*NaivePessimistic(game, report.witness.probabilities()),
                  *report.supremum, 1e-6);
    } else {
      ASSERT_TRUE(report.approx_strategy.has_value());
      EXPECT_GE(*NaivePessimistic(game, report.approx_strategy->probabilities()),
                *report.supremum - 0.1 - 1e-6);
    }
  }
}

}  // namespace
}  // namespace lfg
