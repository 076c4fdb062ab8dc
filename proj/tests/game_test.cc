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

#include "lfg/game.h"

#include <algorithm>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "lfg/bench.h"
#include "lfg/gadgets.h"
#include "support/oracles.h"

namespace lfg {
namespace {

using ::lfg::testing::NaiveNes;
using ::lfg::testing::NaivePayoff;
using ::lfg::testing::NaivePessimistic;
using ::lfg::testing::RandomSimplexPoint;
using ::lfg::testing::Rho;

std::vector<std::vector<int>> Decoded(const NormalFormGame& game,
                                      const std::vector<int>& ids) {
  std::vector<std::vector<int>> out;
  for (int id : ids) out.push_back(game.Decode(id).actions);
  return out;
}

TEST(LeaderStrategyTest, RejectsPointsOffTheSimplex) {
  EXPECT_THROW(LeaderStrategy({0.5, 0.6}), UsageError);
  EXPECT_THROW(LeaderStrategy({-0.1, 1.1}), UsageError);
  EXPECT_NO_THROW(LeaderStrategy({0.25, 0.75}));
}

TEST(LeaderStrategyTest, FromSolverOutputClipsNoise) {
  const double raw[] = {-1e-9, 0.5, 0.5 + 1e-9};
  const LeaderStrategy x = LeaderStrategy::FromSolverOutput(raw);
  EXPECT_EQ(x[0], 0.0);
  EXPECT_NEAR(x[1] + x[2], 1.0, 1e-15);
  const double far[] = {0.2, 0.2};
  EXPECT_THROW(LeaderStrategy::FromSolverOutput(far), UsageError);
}

TEST(NormalFormGameTest, EncodeDecodeRoundTrip) {
  const NormalFormGame game = GenerateRandomGame(4, 3, 5);
  ASSERT_EQ(game.num_follower_profiles(), 27);
  for (int id = 0; id < game.num_follower_profiles(); ++id) {
    EXPECT_EQ(game.Encode(game.Decode(id)), id);
    for (int p = 0; p < game.num_followers(); ++p) {
      EXPECT_EQ(game.ActionOf(id, p), game.Decode(id).actions[p]);
      for (int b = 0; b < 3; ++b) {
        FollowerProfile dev = game.Decode(id);
        dev.actions[p] = b;
        EXPECT_EQ(game.Deviate(id, p, b), game.Encode(dev));
      }
    }
  }
}

TEST(NormalFormGameTest, RejectsMalformedTensors) {
  EXPECT_THROW(NormalFormGame({2, 2}, {{1, 2, 3, 4}}), UsageError);
  EXPECT_THROW(NormalFormGame({2, 2}, {{1, 2, 3}, {1, 2, 3, 4}}), UsageError);
}

TEST(ExpectedFollowerPayoffTest, NonexistenceGameIsFlatAtTwo) {
  const NormalFormGame game = MakeNonexistenceGame();
  for (double rho : {0.0, 0.3, 0.5, 0.9, 1.0}) {
    EXPECT_NEAR(ExpectedFollowerPayoff(game, {{0, 1}}, 0, LeaderStrategy(Rho(rho))),
                2.0, 1e-12);
  }
}

TEST(ExpectedFollowerPayoffTest, PureCommitmentReadsTheTensor) {
  const NormalFormGame game = GenerateRandomGame(3, 3, 11);
  for (int k = 0; k < 3; ++k) {
    const LeaderStrategy e = LeaderStrategy::Pure(3, k);
    for (int id = 0; id < game.num_follower_profiles(); ++id) {
      std::vector<int> full = game.Decode(id).actions;
      full.push_back(k);
      for (int p = 0; p < game.num_players(); ++p) {
        EXPECT_EQ(ExpectedPayoff(game, id, p, e), game.Payoff(p, full));
      }
    }
  }
}

TEST(ExpectedFollowerPayoffTest, MatchesNaiveSummation) {
  const NormalFormGame game = GenerateRandomGame(3, 2, 0);
  const LeaderStrategy x({0.5, 0.5});
  for (int id = 0; id < game.num_follower_profiles(); ++id) {
    for (int p = 0; p < 2; ++p) {
      EXPECT_NEAR(ExpectedFollowerPayoff(game, game.Decode(id), p, x),
                  NaivePayoff(game, game.Decode(id).actions, p, x.probabilities()),
                  1e-12);
    }
  }
}

TEST(IsPureNeTest, IndsetGameWithPureLeader) {
  const NormalFormGame game = MakeIndsetGame(UndirectedGraph{3, {}});
  const LeaderStrategy x = LeaderStrategy::Pure(3, 0);
  EXPECT_TRUE(IsPureNe(game, FollowerProfile{{0, 0}}, x));
  EXPECT_FALSE(IsPureNe(game, FollowerProfile{{0, 1}}, x));
}

TEST(EnumeratePureNesTest, NonexistenceGame) {
  const NormalFormGame game = MakeNonexistenceGame();
  using Profiles = std::vector<std::vector<int>>;
  EXPECT_EQ(Decoded(game, EnumeratePureNes(game, LeaderStrategy(Rho(0.25)))),
            (Profiles{{0, 1}}));
  EXPECT_EQ(Decoded(game, EnumeratePureNes(game, LeaderStrategy(Rho(0.75)))),
            (Profiles{{0, 1}, {1, 0}}));
}

TEST(PessimisticUtilityTest, WorkedValues) {
  const NormalFormGame game = MakeNonexistenceGame();
  EXPECT_NEAR(*PessimisticUtility(game, LeaderStrategy(Rho(0.25))), 6.25, 1e-12);
  EXPECT_NEAR(*PessimisticUtility(game, LeaderStrategy(Rho(0.75))), 1.0, 1e-12);
  const NormalFormGame worse = MakeArbitrarilyWorseGame(10.0);
  EXPECT_NEAR(*PessimisticUtility(worse, LeaderStrategy(Rho(1.0))), 10.0, 1e-12);
}

TEST(PessimisticUtilityTest, NoEquilibriumGivesNullopt) {
  // Matching pennies between the followers, whatever the leader does.
  const NormalFormGame game({2, 2, 1}, {{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 0, 0}});
  EXPECT_FALSE(PessimisticUtility(game, LeaderStrategy::Pure(1, 0)).has_value());
}

TEST(WorstCaseNeExcludingTest, SkipsExcludedProfiles) {
  const NormalFormGame game = MakeNonexistenceGame();
  const LeaderStrategy x(Rho(0.75));
  const int low = game.Encode({{1, 0}});
  const int high = game.Encode({{0, 1}});
  EXPECT_EQ(WorstCaseNeExcluding(game, x, {}), low);
  const int excluded[] = {low};
  EXPECT_EQ(WorstCaseNeExcluding(game, x, excluded), high);
  const int both[] = {low, high};
  EXPECT_FALSE(WorstCaseNeExcluding(game, x, both).has_value());
}

class RandomGameProperties : public ::testing::TestWithParam<int> {};

TEST_P(RandomGameProperties, MembershipMatchesNaiveEnumeration) {
  const int m = GetParam();
  std::mt19937_64 rng(100 + m);
  for (int instance = 0; instance < 10; ++instance) {
    const NormalFormGame game = GenerateRandomGame(3, m, rng());
    for (int sample = 0; sample < 20; ++sample) {
      const LeaderStrategy x(RandomSimplexPoint(rng, m));
      const std::vector<int> nes = EnumeratePureNes(game, x);
      EXPECT_EQ(Decoded(game, nes), NaiveNes(game, x.probabilities()));
      for (int id = 0; id < game.num_follower_profiles(); ++id) {
        EXPECT_EQ(IsPureNe(game, id, x, 0.0),
                  std::find(nes.begin(), nes.end(), id) != nes.end());
      }
      const auto f = PessimisticUtility(game, x);
      const auto naive = NaivePessimistic(game, x.probabilities());
      ASSERT_EQ(f.has_value(), naive.has_value());
      if (f) { EXPECT_NEAR(*f, *naive, 1e-9); }
    }
  }
}

TEST_P(RandomGameProperties, ExclusionNeverLowersTheWorstCase) {
  const int m = GetParam();
  std::mt19937_64 rng(200 + m);
  for (int instance = 0; instance < 10; ++instance) {
    const NormalFormGame game = GenerateRandomGame(3, m, rng());
    const LeaderStrategy x(RandomSimplexPoint(rng, m));
    std::vector<int> excluded;
    std::optional<double> previous;
    for (int id = 0; id < game.num_follower_profiles(); ++id) {
      if (rng() % 2) excluded.push_back(id);
      const auto worst = WorstCaseNeExcluding(game, x, excluded);
      if (!worst) break;
      const double value = LeaderUtility(game, *worst, x);
      if (previous) { EXPECT_GE(value, *previous - 1e-12); }
      previous = value;
    }
  }
}

TEST_P(RandomGameProperties, AffineRescalingKeepsTheEquilibria) {
  const int m = GetParam();
  std::mt19937_64 rng(300 + m);
  std::uniform_real_distribution<double> scale(0.1, 10.0), shift(-50.0, 50.0);
  for (int instance = 0; instance < 10; ++instance) {
    const NormalFormGame game = GenerateRandomGame(3, m, rng());
    std::vector<std::vector<double>> payoffs;
    for (int p = 0; p < 3; ++p) payoffs.push_back(game.payoffs(p));
    const int follower = static_cast<int>(rng() % 2);
    const double a = scale(rng), b = shift(rng);
    for (double& v : payoffs[follower]) v = a * v + b;
    const NormalFormGame scaled(game.actions(), payoffs);
    for (int sample = 0; sample < 20; ++sample) {
      const LeaderStrategy x(RandomSimplexPoint(rng, m));
      EXPECT_EQ(EnumeratePureNes(game, x), EnumeratePureNes(scaled, x));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, RandomGameProperties, ::testing::Values(2, 3, 4));

TEST(IndsetGameTest, PureLeaderInducesOnlyItsDiagonal) {
  for (int r = 2; r <= 5; ++r) {
    UndirectedGraph complete{r, {}};
    for (int u = 0; u < r; ++u) {
      for (int v = u + 1; v < r; ++v) complete.edges.push_back({u, v});
    }
    for (const auto& graph : {UndirectedGraph{r, {}}, complete}) {
      const NormalFormGame game = MakeIndsetGame(graph);
      for (int v = 0; v < r; ++v) {
        const std::vector<int> nes = EnumeratePureNes(game, LeaderStrategy::Pure(r, v));
        ASSERT_EQ(nes.size(), 1u);
        EXPECT_EQ(game.Decode(nes[0]).actions, (std::vector<int>{v, v}));
      }
    }
  }
}

}  // namespace
}  // namespace lfg
