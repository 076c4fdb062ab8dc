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

// Region models over the leader's simplex.
//
// X(a) is the set of leader strategies at which followers' profile a is a
// pure NE. For a set S- of profiles, X(S-; eps) asks that every profile in
// S- has some follower whose deviation gains at least eps. One binary per
// (profile, follower, deviation) selects the active disjunct:
//
//   U_p(a) x + eps <= U_p(a') x + (M + eps_max) z,   sum (1 - z) = 1,
//
// with M = max_k (U_p(a)_k - U_p(a')_k). The eps_max term keeps a switched
// off row from limiting eps.

#ifndef LFG_FORMULATIONS_H_
#define LFG_FORMULATIONS_H_

#include <optional>
#include <vector>

#include "lfg/game.h"
#include "lfg/linear_model.h"

namespace lfg {

// Epsilon above this value counts as strictly positive.
inline constexpr double kAttainmentTolerance = 1e-6;
inline constexpr double kDefaultEpsilonCap = 100.0;

// A pair (S+, S-) of disjoint sets of followers' profile ids, kept sorted.
struct OutcomeConfiguration {
  std::vector<int> s_plus;
  std::vector<int> s_minus;

  friend bool operator==(const OutcomeConfiguration&,
                         const OutcomeConfiguration&) = default;
};

// Throws UsageError on out-of-range ids, duplicates or overlap.
void ValidateConfiguration(const NormalFormGame& game,
                           const OutcomeConfiguration& cfg);

// (S+, A_F \ S+).
OutcomeConfiguration FullConfiguration(const NormalFormGame& game,
                                       std::vector<int> s_plus);

// One unilateral deviation of `follower` from a profile.
struct Deviation {
  int follower = 0;
  int action = 0;
  int deviated_profile = 0;
  // max_k and min_k of U_p(a)_k - U_p(a')_k.
  double big_m = 0.0;
  double min_gain = 0.0;
};

std::vector<Deviation> Deviations(const NormalFormGame& game, int profile_id);

// How the S- disjunctions are searched. kMilp solves the big-M model with
// the generic MILP solver. kDisjunctive branches on the disjunctions
// directly: a node commits some S- profiles to one profitable deviation each,
// and its LP drops the rest. Both return the same optimum; the big-M
// relaxation is weak, so the second is much faster once S- has more than a
// few profiles.
enum class RegionSearch { kMilp, kDisjunctive };

struct FormulationOptions {
  double epsilon_cap = kDefaultEpsilonCap;
  RegionSearch search = RegionSearch::kDisjunctive;
  // Stage-2 slack on the primary objective in lexicographic solves.
  double primary_tolerance = 1e-8;
  MilpOptions milp;
};

// Column positions inside a built model. Unused entries are -1.
struct VariableMap {
  int x = 0;  // x occupies [x, x + m_n)
  int epsilon = -1;
  int eta = -1;
  int y = -1;  // one per followers' profile
  int z = -1;  // y * x products, profile-major
  int indicators = -1;
  int num_indicators = 0;
};

struct BuiltModel {
  LinearModel model;
  VariableMap vars;
};

struct BuiltLexModel {
  LexLinearModel model;
  VariableMap vars;
};

// max eps  s.t.  x in X(S+) and X(S-; eps), eps in [0, eps_max].
BuiltModel BuildCheckEmptiness(const NormalFormGame& game,
                               const OutcomeConfiguration& cfg,
                               const FormulationOptions& options = {});

// lexmax [eta ; eps]  s.t.  eta <= U_n(a) x for a in S+, x in X(S+) and
// X(S-; eps). Requires S+ nonempty.
BuiltLexModel BuildLexSup(const NormalFormGame& game,
                          const OutcomeConfiguration& cfg,
                          const FormulationOptions& options = {});

// max eps  s.t.  U_n(a) x >= s - alpha for a in S+, x in X(S+) and
// X(S-; eps).
BuiltModel BuildAlphaApprox(const NormalFormGame& game,
                            const OutcomeConfiguration& cfg, double s,
                            double alpha,
                            const FormulationOptions& options = {});

// Optimistic problem restricted to X(S-; eps), for nodes with S+ empty:
// lexmax [sum U_n(a)_k z_ak ; eps] with y selecting the followers' NE and
// z = y x. Profiles in S- cannot be selected.
BuiltLexModel BuildOptimisticRestricted(const NormalFormGame& game,
                                        const std::vector<int>& s_minus,
                                        const FormulationOptions& options = {});

struct RegionPoint {
  double epsilon = 0.0;
  LeaderStrategy x;
};

// nullopt (EMPTY) when the optimal eps is at most kAttainmentTolerance or the
// model is infeasible. With `decide_only` the search stops at the first
// point whose eps clears the tolerance, so `epsilon` is then a lower bound.
std::optional<RegionPoint> CheckEmptiness(const NormalFormGame& game,
                                          const OutcomeConfiguration& cfg,
                                          const FormulationOptions& options = {},
                                          bool decide_only = false);

struct LexPoint {
  SolveStatus status = SolveStatus::kInfeasible;
  double eta = 0.0;
  double epsilon = 0.0;
  LeaderStrategy x;
  int selected_profile = -1;  // Problem with S+ empty only
};

LexPoint SolveLexSup(const NormalFormGame& game,
                     const OutcomeConfiguration& cfg,
                     const FormulationOptions& options = {});

// Solved one selected profile at a time: the best of the lexicographic
// supremum models for ({a}, S-) over a outside S-.
LexPoint SolveOptimisticRestricted(const NormalFormGame& game,
                                   const std::vector<int>& s_minus,
                                   const FormulationOptions& options = {});
// The same problem as one lex-MILP over the selector y.
LexPoint SolveOptimisticRestrictedModel(const NormalFormGame& game,
                                        const std::vector<int>& s_minus,
                                        const FormulationOptions& options = {});

// nullopt if the model is infeasible or limits were hit without a point.
std::optional<RegionPoint> SolveAlphaApprox(const NormalFormGame& game,
                                            const OutcomeConfiguration& cfg,
                                            double s, double alpha,
                                            const FormulationOptions& options = {});

}  // namespace lfg

#endif  // LFG_FORMULATIONS_H_
