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

#include <chrono>
#include <cmath>
#include <queue>

#include "lfg/game.h"
#include "lfg/linear_model.h"

namespace lfg {
namespace {

struct Node {
  double bound;  // LP value in maximization form
  int64_t order;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> values;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.order > b.order;
  }
};

}  // namespace

LpSolution SolveMilp(const LinearModel& model, const MilpOptions& options) {
  model.Validate();
  const auto start = std::chrono::steady_clock::now();
  const double direction = model.sense() == Sense::kMaximize ? 1.0 : -1.0;
  const int n = model.num_variables();

  std::vector<int> binaries;
  for (int j = 0; j < n; ++j) {
    if (model.variables()[j].binary) binaries.push_back(j);
  }

  LpSolution best;
  best.status = SolveStatus::kInfeasible;
  double incumbent = options.objective_cutoff;
  int64_t order = 0;
  int64_t lp_iterations = 0;
  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;

  auto evaluate = [&](std::vector<double> lower, std::vector<double> upper,
                      bool* unbounded) {
    const LpSolution lp = SolveLpWithBounds(model, lower, upper);
    lp_iterations += lp.iterations;
    if (lp.status == SolveStatus::kUnbounded) *unbounded = true;
    if (lp.status != SolveStatus::kOptimal) return;
    const double bound = direction * lp.objective;
    if (bound <= incumbent + options.absolute_gap) return;
    open.push(Node{bound, order++, std::move(lower), std::move(upper), lp.values});
  };

  std::vector<double> root_lower, root_upper;
  for (const auto& v : model.variables()) {
    root_lower.push_back(v.lower);
    root_upper.push_back(v.upper);
  }
  bool unbounded = false;
  evaluate(root_lower, root_upper, &unbounded);
  if (unbounded) {
    best.status = SolveStatus::kUnbounded;
    return best;
  }

  int64_t nodes = 0;
  bool stopped = false;
  while (!open.empty()) {
    if (open.top().bound <= incumbent + options.absolute_gap) break;
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (nodes >= options.node_limit || elapsed > options.time_limit_seconds) {
      stopped = true;
      break;
    }
    Node node = open.top();
    open.pop();
    ++nodes;
    if (options.heuristic) {
      if (auto point = options.heuristic(node.values)) {
        bool integral = static_cast<int>(point->size()) == n;
        for (int j : binaries) {
          integral = integral && ((*point)[j] == 0.0 || (*point)[j] == 1.0);
        }
        if (integral && model.MaxViolation(*point) <= kHeuristicTolerance) {
          const double value = direction * model.ObjectiveValue(*point);
          if (value > incumbent) {
            incumbent = value;
            best.values = std::move(*point);
            best.objective = model.ObjectiveValue(best.values);
            best.has_incumbent = true;
          }
        }
      }
      if (node.bound <= incumbent + options.absolute_gap) continue;
    }

    int branch = -1;
    double most = options.integrality_tolerance;
    for (int j : binaries) {
      const double v = node.values[j];
      const double frac = std::min(v - std::floor(v), std::ceil(v) - v);
      if (frac > most) {
        most = frac;
        branch = j;
      }
    }
    if (branch < 0) {
      std::vector<double> point = node.values;
      std::vector<double> lower = node.lower;
      std::vector<double> upper = node.upper;
      bool exact = true;
      double worst = 0.0;
      for (int j : binaries) {
        const double r = std::round(point[j]);
        exact = exact && r == point[j];
        if (std::abs(point[j] - r) > worst) {
          worst = std::abs(point[j] - r);
          branch = j;
        }
        lower[j] = upper[j] = point[j] = r;
      }
      bool accepted = true;
      if (!exact) {
        // Near-integral binaries leave big-M rows slightly violated once
        // rounded; re-solve the continuous part around the rounded values,
        // and keep branching if that is infeasible.
        const LpSolution fixed = SolveLpWithBounds(model, lower, upper);
        lp_iterations += fixed.iterations;
        accepted = fixed.status == SolveStatus::kOptimal;
        if (accepted) {
          point = fixed.values;
          for (int j : binaries) point[j] = lower[j];
        }
      }
      if (accepted) {
        const double value = direction * model.ObjectiveValue(point);
        if (value > incumbent) {
          incumbent = value;
          best.values = std::move(point);
          best.objective = model.ObjectiveValue(best.values);
          best.has_incumbent = true;
          if (value > options.stop_above) {
            stopped = !open.empty();
            break;
          }
        }
        continue;
      }
    }
    for (double fix : {0.0, 1.0}) {
      std::vector<double> lower = node.lower;
      std::vector<double> upper = node.upper;
      lower[branch] = fix;
      upper[branch] = fix;
      evaluate(std::move(lower), std::move(upper), &unbounded);
    }
  }

  best.nodes = nodes;
  best.iterations = lp_iterations;
  if (stopped && best.has_incumbent && incumbent > options.stop_above) {
    best.status = SolveStatus::kOptimal;
    best.best_bound = open.empty() ? best.objective
                                   : direction * std::max(incumbent, open.top().bound);
    return best;
  }
  if (stopped) {
    best.status = SolveStatus::kLimitReached;
    double bound = incumbent;
    if (!open.empty()) bound = std::max(bound, open.top().bound);
    best.best_bound = direction * bound;
    return best;
  }
  if (best.has_incumbent) {
    best.status = SolveStatus::kOptimal;
    best.best_bound = best.objective;
  }
  return best;
}

LexSolution SolveLex(const LexLinearModel& model, double primary_tolerance,
                     const MilpOptions& options) {
  const LinearModel& base = model.base;
  if (static_cast<int>(model.secondary.size()) != base.num_variables()) {
    throw UsageError("secondary objective width does not match variable count");
  }
  LexSolution out;
  const LpSolution first = SolveMilp(base, options);
  static_cast<LpSolution&>(out) = first;
  if (!first.has_incumbent) return out;

  LinearModel second = base;
  const bool maximize = base.sense() == Sense::kMaximize;
  second.AddConstraint(base.objective(),
                       maximize ? Relation::kGreaterEqual : Relation::kLessEqual,
                       maximize ? first.objective - primary_tolerance
                                : first.objective + primary_tolerance,
                       "lex_primary");
  second.SetObjective(model.secondary, Sense::kMaximize);
  const LpSolution stage_two = SolveMilp(second, options);

  out.primary = first.objective;
  if (stage_two.has_incumbent) {
    out.values = stage_two.values;
    out.nodes += stage_two.nodes;
    out.iterations += stage_two.iterations;
    if (stage_two.status == SolveStatus::kLimitReached) {
      out.status = SolveStatus::kLimitReached;
    }
  }
  out.objective = out.primary;
  double secondary = 0.0;
  for (int j = 0; j < base.num_variables(); ++j) {
    secondary += model.secondary[j] * out.values[j];
  }
  out.secondary_value = secondary;
  return out;
}

}  // namespace lfg
