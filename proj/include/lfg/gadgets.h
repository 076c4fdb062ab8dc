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

// Example and reduction games with known equilibrium structure.

#ifndef LFG_GADGETS_H_
#define LFG_GADGETS_H_

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lfg/game.h"

namespace lfg {

// Vertices are 0..num_vertices-1.
struct UndirectedGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  bool HasEdge(int u, int v) const;
};

// Throws UsageError on self-loops or out-of-range endpoints.
void ValidateGraph(const UndirectedGraph& graph);

// Edge-list text: a "vertices r" line, then one "u v" pair per line with
// 1-based endpoints. '#' starts a comment.
UndirectedGraph ParseEdgeList(std::string_view text);
std::string WriteEdgeList(const UndirectedGraph& graph);

struct Literal {
  int variable = 0;  // 0-based
  bool negated = false;
};

struct Cnf3Formula {
  int num_variables = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

// DIMACS CNF ("p cnf r t" header, clauses terminated by 0). Every clause must
// have exactly three literals.
Cnf3Formula ParseDimacs(std::string_view text);

// c = 1 / ((r+1)^2 + 1) and b = c / 2.
struct IndsetParameters {
  double b = 0.0;
  double c = 0.0;
};
IndsetParameters DefaultIndsetParameters(int r);

// The game Gamma(G): followers choose among r vertex actions plus chi (the
// last index), the leader among the r vertices. Requires 0 < b < c and
// c < 1/(r+1)^2. With `reduction_bound` false only c <= 1/r is required,
// which keeps every diagonal outcome reachable but drops the guarantee that
// the supremum separates graph classes.
NormalFormGame MakeIndsetGame(const UndirectedGraph& graph, double b, double c,
                              bool reduction_bound = true);
NormalFormGame MakeIndsetGame(const UndirectedGraph& graph);

// The game Gamma(C, V) with four players. Follower actions are the 8t
// clause-local assignments (clause-major; within a clause the assignment
// index counts negations with the third literal fastest) followed by chi;
// leader actions are the r variables followed by w.
NormalFormGame Make3SatGame(const Cnf3Formula& formula, double eps);

// The three-player game with a supremum of 7.5 that is never attained.
NormalFormGame MakeNonexistenceGame();
// The three-player game whose optimistic value 2 mu exceeds the pessimistic
// one, mu. Requires mu > 1.
NormalFormGame MakeArbitrarilyWorseGame(double mu);
// The two-follower instance of Gamma(C, V) for the single 2-SAT
// clause (v1 or v2). Actions: v1v2, v1~v2, ~v1v2, ~v1~v2, chi for the
// followers; v1, v2, w for the leader.
NormalFormGame MakeTwoSatClauseGame(double eps);

enum class WorkedExample { kNonexistence, kArbitrarilyWorse, kTwoSat };

// `parameter` is mu for kArbitrarilyWorse and eps for kTwoSat.
NormalFormGame MakeWorkedExample(WorkedExample which, double parameter = 0.0);

}  // namespace lfg

#endif  // LFG_GADGETS_H_
