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

// Single-level reformulations of the pessimistic problem for two followers.
//
// The exact reformulation pairs a primal NE selector y with the duals beta of
// the followers' selection LP and is a nonconvex QCQP; it is only exported.
// Bounding every beta by M and writing beta = M p with p binary gives a
// mixed-binary restriction. The products z_a = y_a x are written as a split
// of x across profiles, which is exact for one-hot y; each dual term
// p (d . x) becomes one column w with its lower envelope. Its optimum is
// achievable by the leader.

#ifndef LFG_RESTRICTED_MILP_H_
#define LFG_RESTRICTED_MILP_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lfg/game.h"
#include "lfg/linear_model.h"

namespace lfg {

inline constexpr double kDefaultBigM = 100.0;

struct RestrictedModel {
  LinearModel model;
  int x = 0;                  // m columns
  std::vector<int> y;         // per profile
  std::vector<int> z;         // profile * m + k
  // One entry per (profile, follower, deviating action); the own action has
  // no column (-1) since its dual term vanishes.
  std::vector<int> p;         // (profile * 2 + follower) * m_f + action
  std::vector<int> w;         // same slots as p: p times the regret d . x
};

// Requires three players and M > 0.
RestrictedModel BuildRestrictedMilp(const NormalFormGame& game, double big_m);

struct RestrictedResult {
  SolveStatus status = SolveStatus::kInfeasible;
  double value = 0.0;
  std::optional<LeaderStrategy> strategy;
  int selected_profile = -1;
  std::vector<double> values;  // raw column values
  int64_t nodes = 0;
  double seconds = 0.0;
};

RestrictedResult SolveRestrictedMilp(const NormalFormGame& game,
                                     double big_m = kDefaultBigM,
                                     const MilpOptions& options = {});

// A quadratically constrained program in a plain algebraic form.
struct QuadraticTerm {
  double coefficient = 0.0;
  int first = 0;
  int second = 0;
  friend bool operator==(const QuadraticTerm&, const QuadraticTerm&) = default;
};

struct LinearTerm {
  double coefficient = 0.0;
  int variable = 0;
  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

struct QcqpRow {
  std::string name;
  std::vector<LinearTerm> linear;
  std::vector<QuadraticTerm> quadratic;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
  friend bool operator==(const QcqpRow&, const QcqpRow&) = default;
};

// All variables are nonnegative and continuous.
struct QcqpModel {
  std::vector<std::string> variables;
  Sense sense = Sense::kMaximize;
  std::vector<LinearTerm> objective_linear;
  std::vector<QuadraticTerm> objective_quadratic;
  std::vector<QcqpRow> rows;
  friend bool operator==(const QcqpModel&, const QcqpModel&) = default;

  int FindVariable(std::string_view name) const;  // -1 when absent
};

// The exact QCQP for a three-player game. Variables: y (m1 m2), x (m3),
// beta1 (m1 m2 m1), beta2 (m1 m2 m2). Rows are named select, dev1_*,
// dev2_*, value_* (one per profile) and simplex.
QcqpModel BuildQcqp(const NormalFormGame& game);

// CPLEX LP text with bracketed quadratic terms.
std::string WriteQcqp(const QcqpModel& model);
// Reads back what WriteQcqp produces. Throws ParseError.
QcqpModel ParseQcqp(std::string_view text);

void ExportQcqp(const NormalFormGame& game, const std::string& path);

}  // namespace lfg

#endif  // LFG_RESTRICTED_MILP_H_
