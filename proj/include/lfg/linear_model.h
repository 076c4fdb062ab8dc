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

#ifndef LFG_LINEAR_MODEL_H_
#define LFG_LINEAR_MODEL_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lfg {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { kMaximize, kMinimize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  bool binary = false;
};

struct Constraint {
  std::vector<double> coefficients;  // dense, one entry per variable
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
  std::string name;
};

// A dense LP / mixed-binary LP.
//
// Variables are added first; every constraint row then has exactly one
// coefficient per variable. Binary variables must have bounds inside [0, 1].
class LinearModel {
 public:
  LinearModel() = default;

  int AddVariable(std::string name, double lower, double upper,
                  bool binary = false);
  int AddBinary(std::string name) { return AddVariable(std::move(name), 0, 1, true); }

  // A zero row of the right width.
  std::vector<double> Row() const { return std::vector<double>(variables_.size(), 0.0); }
  int AddConstraint(std::vector<double> coefficients, Relation relation,
                    double rhs, std::string name = "");

  void SetObjective(std::vector<double> coefficients, Sense sense);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  int num_binaries() const;
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<double>& objective() const { return objective_; }
  Sense sense() const { return sense_; }

  Variable& mutable_variable(int j) { return variables_.at(j); }

  double ObjectiveValue(std::span<const double> point) const;
  // Largest violation of any row or bound at `point` (0 if feasible).
  double MaxViolation(std::span<const double> point) const;

  // Throws UsageError on dimension mismatches or inconsistent bounds.
  void Validate() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<double> objective_;
  Sense sense_ = Sense::kMaximize;
};

// A model with a second objective, maximized after the first.
struct LexLinearModel {
  LinearModel base;
  std::vector<double> secondary;
};

enum class SolveStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  // Branch-and-bound stopped at its node or time budget. `values` holds the
  // incumbent if one was found (has_incumbent).
  kLimitReached,
};

const char* ToString(SolveStatus status);

struct LpSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> values;
  // Row duals y and reduced costs d = c - A^T y, in the model's own sense.
  // Filled by SolveLp only.
  std::vector<double> duals;
  std::vector<double> reduced_costs;
  int64_t iterations = 0;

  // Branch-and-bound statistics.
  bool has_incumbent = false;
  double best_bound = 0.0;
  int64_t nodes = 0;
};

struct LexSolution : LpSolution {
  double primary = 0.0;
  double secondary_value = 0.0;
};

struct MilpOptions {
  int64_t node_limit = 2'000'000;
  double time_limit_seconds = kInfinity;
  double integrality_tolerance = 1e-6;
  // Relative-to-one gap below which a node is fathomed against the incumbent.
  double absolute_gap = 1e-9;
  // Nodes whose bound (maximization form) does not exceed the cutoff are
  // fathomed. Models with no solution above it come back kInfeasible.
  double objective_cutoff = -kInfinity;
  // Stop as soon as an incumbent strictly above this value is found. The
  // status is then kOptimal only if the search also happened to finish.
  double stop_above = kInfinity;
  // Primal heuristic, called with the LP point of every explored node. A
  // returned point is used as an incumbent if it is integral and feasible
  // within kHeuristicTolerance.
  std::function<std::optional<std::vector<double>>(std::span<const double>)>
      heuristic;
};

inline constexpr double kHeuristicTolerance = 1e-7;

// Solves the continuous relaxation (binaries treated as [lo, hi] variables).
LpSolution SolveLp(const LinearModel& model);

// Same, with per-variable bounds overriding the model's.
LpSolution SolveLpWithBounds(const LinearModel& model,
                             std::span<const double> lower,
                             std::span<const double> upper);

// Global optimum over the mixed-binary feasible set by LP-based
// branch-and-bound: best-bound node selection, most-fractional branching.
LpSolution SolveMilp(const LinearModel& model, const MilpOptions& options = {});

// Two-stage lexicographic maximization: the base objective (in its own sense)
// first, then `secondary` subject to the base objective staying within
// primary_tolerance of its optimum.
LexSolution SolveLex(const LexLinearModel& model,
                     double primary_tolerance = 1e-6,
                     const MilpOptions& options = {});

// CPLEX LP-format text of the model, for cross-checking with external
// solvers.
std::string WriteLpFormat(const LinearModel& model);

}  // namespace lfg

#endif  // LFG_LINEAR_MODEL_H_
