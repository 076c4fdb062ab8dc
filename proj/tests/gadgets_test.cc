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

#include "lfg/gadgets.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "lfg/game_io.h"
#include "lfg/oracle.h"
#include "support/oracles.h"

namespace lfg {
namespace {

using ::lfg::testing::NaiveNes;
using ::lfg::testing::NaivePessimistic;
using ::lfg::testing::RandomSimplexPoint;

double LeaderEntry(const NormalFormGame& game, std::vector<int> full) {
  return game.Payoff(game.leader(), full);
}

TEST(IndsetGameTest, FigureGraphPenalties) {
  const UndirectedGraph graph{3, {{1, 2}}};
  const double c = DefaultIndsetParameters(3).c;
  const NormalFormGame game = MakeIndsetGame(graph);
  EXPECT_EQ(game.actions(), (std::vector<int>{4, 4, 3}));
  EXPECT_DOUBLE_EQ(LeaderEntry(game, {1, 1, 2}), -1.0 / c - 1.0);
  EXPECT_DOUBLE_EQ(LeaderEntry(game, {2, 2, 1}), -1.0 / c - 1.0);
  EXPECT_DOUBLE_EQ(LeaderEntry(game, {0, 0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(LeaderEntry(game, {1, 1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(LeaderEntry(game, {1, 1, 1}), 0.0);
  const int chi_chi[] = {3, 3, 0};
  EXPECT_DOUBLE_EQ(game.Payoff(0, chi_chi), c);
  EXPECT_DOUBLE_EQ(game.Payoff(1, chi_chi), c / 2);
}

TEST(IndsetGameTest, EmptyGraphHasNoPenalties) {
  const NormalFormGame game = MakeIndsetGame(UndirectedGraph{2, {}});
  EXPECT_DOUBLE_EQ(LeaderEntry(game, {0, 0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(LeaderEntry(game, {1, 1, 0}), 1.0);
}

TEST(IndsetGameTest, ParameterRange) {
  const UndirectedGraph graph{3, {}};
  EXPECT_THROW(MakeIndsetGame(graph, 0.02, 0.01), UsageError);
  EXPECT_THROW(MakeIndsetGame(graph, 0.01, 1.0 / 16), UsageError);
  EXPECT_NO_THROW(MakeIndsetGame(graph, 0.01, 1.0 / 3, false));
  EXPECT_THROW(MakeIndsetGame(graph, 0.01, 0.34, false), UsageError);
  EXPECT_THROW(MakeIndsetGame(UndirectedGraph{3, {{0, 0}}}), UsageError);
  const auto params = DefaultIndsetParameters(4);
  EXPECT_DOUBLE_EQ(params.c, 1.0 / 26);
  EXPECT_DOUBLE_EQ(params.b, params.c / 2);
}

TEST(IndsetGameTest, UniformLeaderMakesEveryDiagonalAnEquilibrium) {
  for (int r = 2; r <= 5; ++r) {
    const NormalFormGame game = MakeIndsetGame(UndirectedGraph{r, {{0, 1}}});
    std::vector<std::vector<int>> diagonal;
    for (int v = 0; v < r; ++v) diagonal.push_back({v, v});
    EXPECT_EQ(NaiveNes(game, std::vector<double>(r, 1.0 / r)), diagonal);
  }
}

TEST(IndsetGameTest, OnlyDiagonalEquilibria) {
  std::mt19937_64 rng(81);
  const UndirectedGraph graph{4, {{0, 1}, {1, 2}, {2, 3}}};
  const NormalFormGame game = MakeIndsetGame(graph);
  for (int sample = 0; sample < 200; ++sample) {
    const auto x = RandomSimplexPoint(rng, 4);
    const auto nes = EnumeratePureNes(game, LeaderStrategy(x));
    EXPECT_FALSE(nes.empty());
    for (int id : nes) {
      const auto a = game.Decode(id).actions;
      EXPECT_EQ(a[0], a[1]);
      EXPECT_NE(a[0], 4);
    }
  }
}

TEST(EdgeListTest, RoundTripAndErrors) {
  const UndirectedGraph graph = ParseEdgeList("# path\nvertices 3\n1 2\n2 3\n");
  EXPECT_EQ(graph.num_vertices, 3);
  EXPECT_TRUE(graph.HasEdge(0, 1));
  EXPECT_TRUE(graph.HasEdge(2, 1));
  EXPECT_FALSE(graph.HasEdge(0, 2));
  const UndirectedGraph again = ParseEdgeList(WriteEdgeList(graph));
  EXPECT_EQ(again.num_vertices, 3);
  EXPECT_EQ(again.edges, graph.edges);
  EXPECT_THROW(ParseEdgeList("1 2\n"), ParseError);
  EXPECT_THROW(ParseEdgeList("vertices 2\n1 3\n"), ParseError);
  EXPECT_THROW(ParseEdgeList("vertices 2\n1 1\n"), ParseError);
}

TEST(DimacsTest, ParsesClauses) {
  const Cnf3Formula f = ParseDimacs("c demo\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
  EXPECT_EQ(f.num_variables, 3);
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.clauses[0][1].variable, 1);
  EXPECT_TRUE(f.clauses[0][1].negated);
  EXPECT_FALSE(f.clauses[1][1].negated);
  EXPECT_THROW(ParseDimacs("p cnf 2 1\n1 2 0\n"), ParseError);
  EXPECT_THROW(ParseDimacs("p cnf 2 1\n1 2 3 0\n"), ParseError);
  EXPECT_THROW(ParseDimacs("1 2 -1 0\n"), ParseError);
}

TEST(ThreeSatGameTest, ActionCounts) {
  const Cnf3Formula f = ParseDimacs("p cnf 2 1\n1 2 -1 0\n");
  const NormalFormGame game = Make3SatGame(f, 0.1);
  EXPECT_EQ(game.actions(), (std::vector<int>{9, 9, 9, 3}));
  const Cnf3Formula g = ParseDimacs("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
  EXPECT_EQ(Make3SatGame(g, 0.1).actions(), (std::vector<int>{17, 17, 17, 4}));
  EXPECT_THROW(Make3SatGame(f, 0.0), UsageError);
}

// Clause-local action agreeing with a truth assignment.
int CompatibleAction(const Cnf3Formula& f, int clause, const std::vector<bool>& truth) {
  int local = 0;
  for (int p = 0; p < 3; ++p) {
    if (!truth[f.clauses[clause][p].variable]) local |= 1 << (2 - p);
  }
  return clause * 8 + local;
}

TEST(ThreeSatGameTest, CompatibleDiagonalIsAnEquilibrium) {
  const Cnf3Formula f = ParseDimacs("p cnf 2 2\n1 2 -1 0\n-2 1 2 0\n");
  const NormalFormGame game = Make3SatGame(f, 0.1);
  for (int mask = 0; mask < 4; ++mask) {
    const std::vector<bool> truth = {(mask & 1) != 0, (mask & 2) != 0};
    // True variables get 1/2, false ones 1/6 (thresholds are 1/3), w the rest.
    std::vector<double> x(3);
    for (int v = 0; v < 2; ++v) x[v] = truth[v] ? 0.5 : 1.0 / 6;
    x[2] = 1.0 - x[0] - x[1];
    const auto nes = NaiveNes(game, x);
    for (int clause = 0; clause < 2; ++clause) {
      const int a = CompatibleAction(f, clause, truth);
      EXPECT_EQ(std::count(nes.begin(), nes.end(), std::vector<int>{a, a, a}), 1)
          << mask << " " << clause;
    }
  }
}

TEST(ThreeSatGameTest, ValueDichotomyOnTinyFormulas) {
  const double eps = 0.125;
  for (const char* text : {"p cnf 1 1\n1 1 1 0\n", "p cnf 2 1\n1 -2 2 0\n",
                           "p cnf 2 2\n1 2 2 0\n-1 -2 -2 0\n"}) {
    const Cnf3Formula f = ParseDimacs(text);
    const NormalFormGame game = Make3SatGame(f, eps);
    const int chi = 8 * static_cast<int>(f.clauses.size());
    ForEachGridPoint({0.1, f.num_variables + 1}, [&](const LeaderStrategy& x) {
      const auto nes = NaiveNes(game, x.probabilities());
      ASSERT_FALSE(nes.empty()) << text;
      for (const auto& a : nes) {
        EXPECT_TRUE(a[0] == a[1] && a[1] == a[2] && a[0] != chi) << text;
      }
      const double value = *NaivePessimistic(game, x.probabilities());
      EXPECT_TRUE(std::abs(value - eps) < 1e-9 || std::abs(value - 1.0) < 1e-9)
          << text << " " << value;
    });
  }
}

TEST(WorkedExampleTest, TranscribedEntries) {
  const int entry[] = {0, 1, 1};
  EXPECT_EQ(MakeWorkedExample(WorkedExample::kNonexistence).Payoff(2, entry), 10.0);
  EXPECT_EQ(MakeWorkedExample(WorkedExample::kArbitrarilyWorse, 2.0).Payoff(2, entry), 8.0);
  const NormalFormGame twosat = MakeWorkedExample(WorkedExample::kTwoSat, 0.1);
  EXPECT_EQ(twosat.actions(), (std::vector<int>{5, 5, 3}));
  for (int k = 0; k < 3; ++k) {
    const int chi_chi[] = {4, 4, k};
    EXPECT_EQ(twosat.Payoff(0, chi_chi), 0.0);
    EXPECT_EQ(twosat.Payoff(1, chi_chi), 1.0);
    EXPECT_EQ(twosat.Payoff(2, chi_chi), 0.0);
  }
  EXPECT_THROW(MakeArbitrarilyWorseGame(1.0), UsageError);
}

}  // namespace
}  // namespace lfg
