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

#include "lfg/restricted_milp.h"

#include <cmath>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "lfg/bench.h"
#include "lfg/branch_and_bound.h"
#include "lfg/gadgets.h"
#include "support/oracles.h"

namespace lfg {
namespace {

using ::lfg::testing::NaivePayoff;
using ::lfg::testing::NaivePessimistic;

TEST(RestrictedMilpTest, NonexistenceGameLowerBound) {
  const NormalFormGame game = MakeNonexistenceGame();
  const RestrictedResult result = SolveRestrictedMilp(game, 1000.0);
  ASSERT_EQ(result.status, SolveStatus::kOptimal);
  EXPECT_GE(result.value, 1.0 - 1e-6);
  EXPECT_LE(result.value, 7.5 + 1e-6);
  ASSERT_TRUE(result.strategy.has_value());
  const auto f = NaivePessimistic(game, result.strategy->probabilities());
  ASSERT_TRUE(f.has_value());
  EXPECT_GE(*f, result.value - 1e-6);
}

TEST(RestrictedMilpTest, ValueGrowsWithM) {
  const NormalFormGame game = MakeNonexistenceGame();
  double previous = -kInfinity;
  for (double big_m : {1.0, 5.0, 10.0, 100.0}) {
    const RestrictedResult result = SolveRestrictedMilp(game, big_m);
    ASSERT_EQ(result.status, SolveStatus::kOptimal) << big_m;
    EXPECT_GE(result.value, previous - 1e-6) << big_m;
    previous = result.value;
  }
  EXPECT_GT(previous, 7.0);
}

TEST(RestrictedMilpTest, ConstantLeaderPayoff) {
  const NormalFormGame base = GenerateRandomGame(3, 3, 8);
  std::vector<std::vector<double>> payoffs = {base.payoffs(0), base.payoffs(1),
                                              std::vector<double>(27, 1.0)};
  const NormalFormGame game(base.actions(), payoffs);
  for (double big_m : {1.0, 10.0, 100.0}) {
    const RestrictedResult result = SolveRestrictedMilp(game, big_m);
    ASSERT_EQ(result.status, SolveStatus::kOptimal) << big_m;
    EXPECT_NEAR(result.value, 1.0, 1e-6) << big_m;
  }
}

TEST(RestrictedMilpTest, RejectsBadInput) {
  EXPECT_THROW(SolveRestrictedMilp(MakeNonexistenceGame(), 0.0), UsageError);
  EXPECT_THROW(SolveRestrictedMilp(GenerateRandomGame(4, 2, 1), 10.0), UsageError);
}

TEST(RestrictedMilpTest, ColumnLayout) {
  for (int m : {2, 3, 4}) {
    const RestrictedModel built =
        BuildRestrictedMilp(GenerateRandomGame(3, m, m), kDefaultBigM);
    EXPECT_EQ(built.y.size(), static_cast<size_t>(m * m));
    EXPECT_EQ(built.z.size(), static_cast<size_t>(m * m * m));
    EXPECT_EQ(built.p.size(), static_cast<size_t>(2 * m * m * m));
    EXPECT_EQ(built.w.size(), built.p.size());
    int binaries = 0;
    for (int id : built.p) binaries += id >= 0;
    EXPECT_EQ(binaries, 2 * m * m * (m - 1));
    EXPECT_EQ(built.model.num_binaries(), m * m + binaries);
  }
}

// d . x for follower f deviating from profile a to action b, from raw entries.
double RegretAt(const NormalFormGame& game, int a, int f, int b,
                const std::vector<double>& x) {
  std::vector<int> profile = game.Decode(a).actions;
  const double own = NaivePayoff(game, profile, f, x);
  profile[f] = b;
  return own - NaivePayoff(game, profile, f, x);
}

TEST(RestrictedMilpPropertyTest, SoundAndExactOnRandomGames) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 12; ++trial) {
    const int m = 2 + trial % 2;
    const NormalFormGame game = GenerateRandomGame(3, m, rng());
    const SolveReport bnb = SolveBnb(game, 0.1);
    ASSERT_EQ(bnb.status, ReportStatus::kOptimal);
    for (double big_m : {10.0, 100.0, 1000.0}) {
      MilpOptions options;
      options.time_limit_seconds = 10.0;
      const RestrictedResult result = SolveRestrictedMilp(game, big_m, options);
      if (!result.strategy) continue;
      const std::vector<double>& x = result.strategy->probabilities();
      const auto f = NaivePessimistic(game, x);
      ASSERT_TRUE(f.has_value());
      EXPECT_GE(*f, result.value - 1e-6) << trial << " M=" << big_m;
      EXPECT_LE(result.value, *bnb.supremum + 1e-6) << trial << " M=" << big_m;

      const RestrictedModel built = BuildRestrictedMilp(game, big_m);
      const std::vector<double>& v = result.values;
      EXPECT_LE(built.model.MaxViolation(v), 1e-6);
      for (int a = 0; a < m * m; ++a) {
        const double y = v[built.y[a]];
        for (int k = 0; k < m; ++k) {
          EXPECT_NEAR(v[built.z[a * m + k]], y * x[k], 1e-6);
        }
        for (int fl = 0; fl < 2; ++fl) {
          for (int b = 0; b < m; ++b) {
            const int slot = (a * 2 + fl) * m + b;
            if (built.p[slot] < 0) continue;
            EXPECT_NEAR(v[built.w[slot]], v[built.p[slot]] * RegretAt(game, a, fl, b, x),
                        1e-6);
          }
        }
      }
    }
  }
}

int CountPrefix(const QcqpModel& qp, const std::string& prefix, bool rows) {
  int count = 0;
  if (rows) {
    for (const auto& r : qp.rows) count += r.name.rfind(prefix, 0) == 0;
  } else {
    for (const auto& name : qp.variables) count += name.rfind(prefix, 0) == 0;
  }
  return count;
}

TEST(QcqpTest, NonexistenceGameCounts) {
  const QcqpModel qp = BuildQcqp(MakeNonexistenceGame());
  EXPECT_EQ(CountPrefix(qp, "y", false), 4);
  EXPECT_EQ(CountPrefix(qp, "x", false), 2);
  EXPECT_EQ(CountPrefix(qp, "beta1", false), 8);
  EXPECT_EQ(CountPrefix(qp, "beta2", false), 8);
  EXPECT_EQ(CountPrefix(qp, "value", true), 4);
  EXPECT_EQ(qp.sense, Sense::kMaximize);
}

TEST(QcqpTest, ClosedFormCountsAtFourActions) {
  const int m = 4;
  const QcqpModel qp = BuildQcqp(GenerateRandomGame(3, m, 3));
  EXPECT_EQ(static_cast<int>(qp.variables.size()), m * m + m + 2 * m * m * m);
  EXPECT_EQ(CountPrefix(qp, "value", true), m * m);
  EXPECT_EQ(CountPrefix(qp, "dev1", true), m * m * (m - 1));
  EXPECT_EQ(CountPrefix(qp, "dev2", true), m * m * (m - 1));
  EXPECT_EQ(CountPrefix(qp, "select", true), 1);
  EXPECT_EQ(CountPrefix(qp, "simplex", true), 1);
}

TEST(QcqpTest, TextRoundTrip) {
  for (uint64_t seed : {1u, 2u, 3u}) {
    const QcqpModel qp = BuildQcqp(GenerateRandomGame(3, 2 + seed % 2, seed));
    EXPECT_EQ(ParseQcqp(WriteQcqp(qp)), qp);
  }
  const QcqpModel example = BuildQcqp(MakeNonexistenceGame());
  EXPECT_EQ(ParseQcqp(WriteQcqp(example)), example);
}

TEST(QcqpTest, ExportWritesTheSameText) {
  const auto path = std::filesystem::temp_directory_path() / "lfg_qcqp_test.lp";
  const NormalFormGame game = MakeNonexistenceGame();
  ExportQcqp(game, path.string());
  EXPECT_EQ(::lfg::testing::ReadFile(path.string()), WriteQcqp(BuildQcqp(game)));
  std::filesystem::remove(path);
}

TEST(QcqpTest, BestEquilibriumIsFeasibleWithZeroDuals) {
  // y on the worst NE at x, beta = 0: every row holds.
  const std::vector<double> x = {0.2, 0.5, 0.3};
  uint64_t seed = 5;
  while (::lfg::testing::NaiveNes(GenerateRandomGame(3, 3, seed), x).empty()) {
    ++seed;
  }
  const NormalFormGame game = GenerateRandomGame(3, 3, seed);
  const QcqpModel qp = BuildQcqp(game);
  const auto nes = ::lfg::testing::NaiveNes(game, x);
  std::vector<double> point(qp.variables.size(), 0.0);
  point[qp.FindVariable("y_" + std::to_string(nes[0][0] + 1) + "_" +
                        std::to_string(nes[0][1] + 1))] = 1.0;
  for (int k = 0; k < 3; ++k) point[qp.FindVariable("x_" + std::to_string(k + 1))] = x[k];
  for (const QcqpRow& row : qp.rows) {
    double lhs = 0.0;
    for (const auto& t : row.linear) lhs += t.coefficient * point[t.variable];
    for (const auto& t : row.quadratic) {
      lhs += t.coefficient * point[t.first] * point[t.second];
    }
    switch (row.relation) {
      case Relation::kLessEqual: EXPECT_LE(lhs, row.rhs + 1e-9) << row.name; break;
      case Relation::kGreaterEqual: EXPECT_GE(lhs, row.rhs - 1e-9) << row.name; break;
      case Relation::kEqual: EXPECT_NEAR(lhs, row.rhs, 1e-9) << row.name; break;
    }
  }
}

}  // namespace
}  // namespace lfg
