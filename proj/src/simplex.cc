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

// Dense bounded-variable primal simplex on a full tableau.
//
// Every variable (structural or row slack) is first rewritten as
// x = shift + sign * x' with 0 <= x' <= u', so the tableau only deals with
// nonnegative columns that may carry a finite upper bound. Nonbasic columns
// sit at 0 or at u'. Rows whose slack cannot start basic get an artificial
// column, driven to zero by a phase-1 solve.
//
// Pricing is Dantzig's rule with a two-pass Harris ratio test. Stalling is
// handled by perturbing the basic values; if that stalls as well the solver
// switches to Bland's rule. The tableau is refactored from the initial rows
// when it drifts. Leftover primal infeasibility, after a perturbation is
// removed or from drift, is repaired with dual simplex pivots.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>

#include "lfg/game.h"
#include "lfg/linear_model.h"

namespace lfg {
namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kOptimalityTolerance = 1e-9;
constexpr double kPhaseOneTolerance = 1e-9;
constexpr double kFeasibilityTolerance = 1e-9;
constexpr int kDegenerateLimit = 50;
// Pivots between refactorizations for tableaux small enough that a dense LU
// is cheap; larger ones are only refactored when drift is detected.
constexpr int kRefactorInterval = 1000;
constexpr int64_t kCheapRefactorCells = 2'000'000;
constexpr double kDriftTolerance = 1e-7;
constexpr double kPerturbation = 1e-7;
constexpr int64_t kIterationLimit = 500'000;

enum class ColumnState : uint8_t { kBasic, kAtLower, kAtUpper };

struct ColumnMap {
  int source = -1;     // structural variable index, or -1
  int slack_row = -1;  // row index for slack columns
  double sign = 1.0;
  bool artificial = false;
};

class Tableau {
 public:
  Tableau(const LinearModel& model, std::span<const double> lower,
          std::span<const double> upper);

  LpSolution Solve();

 private:
  double& At(int row, int col) { return tableau_[static_cast<size_t>(row) * cols_ + col]; }
  double At(int row, int col) const { return tableau_[static_cast<size_t>(row) * cols_ + col]; }

  void PriceFrom(const std::vector<double>& costs);
  // Runs simplex iterations on the current cost vector. Returns kOptimal,
  // kUnbounded or kLimitReached.
  SolveStatus Iterate(const std::vector<double>& costs);
  void Pivot(int row, int col);
  // Rebuilds tableau and basic values for the current basis from the
  // initial rows. Returns false if the basis matrix is singular.
  bool Refactor();
  bool Drifted() const;
  // Moves every basic value slightly inside its bounds.
  void Perturb();
  // Dual simplex pivots until the basis is primal feasible. Returns kOptimal,
  // kInfeasible or kLimitReached.
  SolveStatus DualIterate(const std::vector<double>& costs);
  // Primal simplex followed by removal of any perturbation.
  SolveStatus Optimize(const std::vector<double>& costs);

  const LinearModel& model_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<ColumnMap> map_;
  std::vector<double> upper_;  // u' per column
  std::vector<double> shift_;  // per structural variable
  std::vector<double> cost_;   // phase-2 costs, maximization form
  std::vector<double> tableau_;
  std::vector<double> initial_;       // tableau for the all-slack basis
  std::vector<double> initial_beta_;
  std::vector<double> beta_;   // basic values
  std::vector<int> basis_;     // column basic in each row
  std::vector<ColumnState> state_;
  std::vector<double> reduced_;
  std::vector<int> slack_col_;  // slack column of each row
  int64_t iterations_ = 0;
  bool infeasible_bounds_ = false;
  bool perturbed_ = false;
  std::mt19937 rng_{20260517};
};

Tableau::Tableau(const LinearModel& model, std::span<const double> lower,
                 std::span<const double> upper)
    : model_(model), rows_(model.num_constraints()) {
  const int n = model.num_variables();
  const double direction = model.sense() == Sense::kMaximize ? 1.0 : -1.0;
  shift_.assign(n, 0.0);

  // Structural columns.
  std::vector<std::vector<double>> columns;  // built column-wise, then packed
  auto add_column = [&](int source, double sign, double ub, double cost) {
    map_.push_back(ColumnMap{source, -1, sign, false});
    upper_.push_back(ub);
    cost_.push_back(cost);
  };
  for (int j = 0; j < n; ++j) {
    const double lo = lower[j];
    const double hi = upper[j];
    if (lo > hi + 1e-12) infeasible_bounds_ = true;
    const double c = direction * model.objective()[j];
    if (std::isfinite(lo)) {
      shift_[j] = lo;
      add_column(j, 1.0, std::max(0.0, hi - lo), c);
    } else if (std::isfinite(hi)) {
      shift_[j] = hi;
      add_column(j, -1.0, kInfinity, -c);
    } else {
      add_column(j, 1.0, kInfinity, c);
      add_column(j, -1.0, kInfinity, -c);
    }
  }
  const int structural = static_cast<int>(map_.size());

  // Right-hand sides after shifting.
  std::vector<double> rhs(rows_);
  for (int i = 0; i < rows_; ++i) {
    const auto& con = model.constraints()[i];
    double b = con.rhs;
    for (int j = 0; j < n; ++j) b -= con.coefficients[j] * shift_[j];
    rhs[i] = b;
  }

  // Slack columns: a_i x + s_i = b_i.
  slack_col_.resize(rows_);
  for (int i = 0; i < rows_; ++i) {
    const auto rel = model.constraints()[i].relation;
    slack_col_[i] = static_cast<int>(map_.size());
    ColumnMap cm{-1, i, rel == Relation::kGreaterEqual ? -1.0 : 1.0, false};
    map_.push_back(cm);
    upper_.push_back(rel == Relation::kEqual ? 0.0 : kInfinity);
    cost_.push_back(0.0);
  }

  // Artificial columns for rows whose slack cannot start basic.
  basis_.assign(rows_, -1);
  std::vector<double> basic_sign(rows_, 1.0);
  std::vector<int> artificial_rows;
  for (int i = 0; i < rows_; ++i) {
    const int s = slack_col_[i];
    const double value = rhs[i] / map_[s].sign;
    if (value >= -1e-12 && value <= upper_[s] + 1e-12) {
      basis_[i] = s;
      basic_sign[i] = map_[s].sign;
    } else {
      artificial_rows.push_back(i);
    }
  }
  for (int i : artificial_rows) {
    basis_[i] = static_cast<int>(map_.size());
    basic_sign[i] = rhs[i] >= 0 ? 1.0 : -1.0;
    map_.push_back(ColumnMap{-1, i, basic_sign[i], true});
    upper_.push_back(kInfinity);
    cost_.push_back(0.0);
  }
  cols_ = static_cast<int>(map_.size());

  tableau_.assign(static_cast<size_t>(rows_) * cols_, 0.0);
  beta_.resize(rows_);
  for (int i = 0; i < rows_; ++i) {
    const auto& con = model.constraints()[i];
    const double scale = 1.0 / basic_sign[i];
    for (int c = 0; c < structural; ++c) {
      At(i, c) = scale * map_[c].sign * con.coefficients[map_[c].source];
    }
    At(i, slack_col_[i]) = scale * map_[slack_col_[i]].sign;
    if (map_[basis_[i]].artificial) At(i, basis_[i]) = 1.0;
    beta_[i] = scale * rhs[i];
  }
  state_.assign(cols_, ColumnState::kAtLower);
  for (int i = 0; i < rows_; ++i) state_[basis_[i]] = ColumnState::kBasic;
  initial_ = tableau_;
  initial_beta_ = beta_;
}

bool Tableau::Refactor() {
  using Matrix =
      Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const Matrix> a(initial_.data(), rows_, cols_);
  Matrix basis(rows_, rows_);
  for (int i = 0; i < rows_; ++i) basis.col(i) = a.col(basis_[i]);
  const Eigen::PartialPivLU<Matrix> lu(basis);
  const double pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(pivot > 1e-11)) return false;
  Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(initial_beta_.data(), rows_);
  for (int c = 0; c < cols_; ++c) {
    if (state_[c] == ColumnState::kAtUpper) rhs -= upper_[c] * a.col(c);
  }
  Eigen::Map<Matrix>(tableau_.data(), rows_, cols_) = lu.solve(a);
  const Eigen::VectorXd beta = lu.solve(rhs);
  for (int i = 0; i < rows_; ++i) {
    beta_[i] = beta[i];
    if (beta_[i] < 0.0 && beta_[i] > -kFeasibilityTolerance) beta_[i] = 0.0;
    for (int j = 0; j < rows_; ++j) At(i, basis_[j]) = i == j ? 1.0 : 0.0;
  }
  if (perturbed_) Perturb();
  return true;
}

void Tableau::Perturb() {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < rows_; ++i) {
    const double ub = upper_[basis_[i]];
    if (!(ub > 0.0)) {
      beta_[i] = 0.0;
      continue;
    }
    double v = std::clamp(beta_[i], 0.0, ub);
    const double delta = kPerturbation * (1.0 + unit(rng_)) * std::max(1.0, v);
    if (ub <= 4.0 * delta) {
      v = 0.5 * ub;
    } else if (v < delta) {
      v += delta;
    } else if (v > ub - delta) {
      v -= delta;
    }
    beta_[i] = v;
  }
  perturbed_ = true;
}

SolveStatus Tableau::DualIterate(const std::vector<double>& costs) {
  PriceFrom(costs);
  while (true) {
    if (iterations_ >= kIterationLimit) return SolveStatus::kLimitReached;
    int r = -1;
    double worst = kFeasibilityTolerance;
    bool to_upper = false;
    for (int i = 0; i < rows_; ++i) {
      const double ub = upper_[basis_[i]];
      if (-beta_[i] > worst) {
        worst = -beta_[i];
        r = i;
        to_upper = false;
      } else if (beta_[i] - ub > worst) {
        worst = beta_[i] - ub;
        r = i;
        to_upper = true;
      }
    }
    if (r < 0) return SolveStatus::kOptimal;
    ++iterations_;

    // Entering column: moving it in its feasible direction must push the
    // leaving value back towards its bound; the smallest dual ratio keeps
    // the reduced costs optimal.
    int q = -1;
    double ratio = kInfinity;
    double pivot = 0.0;
    for (int c = 0; c < cols_; ++c) {
      if (state_[c] == ColumnState::kBasic || upper_[c] <= 0.0) continue;
      const double a = At(r, c);
      const double dir = state_[c] == ColumnState::kAtLower ? 1.0 : -1.0;
      const double change = -a * dir;
      if (to_upper ? change >= -kPivotTolerance : change <= kPivotTolerance) {
        continue;
      }
      const double t = std::abs(reduced_[c]) / std::abs(a);
      if (t < ratio - 1e-12 ||
          (t <= ratio + 1e-12 && std::abs(a) > std::abs(pivot))) {
        q = c;
        ratio = t;
        pivot = a;
      }
    }
    if (q < 0) return SolveStatus::kInfeasible;

    const double target = to_upper ? upper_[basis_[r]] : 0.0;
    const double delta = (beta_[r] - target) / pivot;
    for (int i = 0; i < rows_; ++i) {
      const double a = At(i, q);
      if (a != 0.0) beta_[i] -= a * delta;
    }
    const double entering_value =
        (state_[q] == ColumnState::kAtLower ? 0.0 : upper_[q]) + delta;
    const int leaving = basis_[r];
    Pivot(r, q);
    beta_[r] = entering_value;
    basis_[r] = q;
    state_[q] = ColumnState::kBasic;
    state_[leaving] = to_upper ? ColumnState::kAtUpper : ColumnState::kAtLower;
  }
}

SolveStatus Tableau::Optimize(const std::vector<double>& costs) {
  for (int round = 0; round < 4; ++round) {
    SolveStatus s = Iterate(costs);
    if (s != SolveStatus::kOptimal) return s;
    if (!perturbed_ && !Drifted()) return s;
    perturbed_ = false;
    Refactor();
    s = DualIterate(costs);
    if (s != SolveStatus::kOptimal) return s;
  }
  return Iterate(costs);
}

bool Tableau::Drifted() const {
  for (int i = 0; i < rows_; ++i) {
    if (beta_[i] < -kDriftTolerance) return true;
    const double ub = upper_[basis_[i]];
    if (std::isfinite(ub) && beta_[i] > ub + kDriftTolerance) return true;
  }
  return false;
}

void Tableau::PriceFrom(const std::vector<double>& costs) {
  reduced_ = costs;
  for (int i = 0; i < rows_; ++i) {
    const double cb = costs[basis_[i]];
    if (cb == 0.0) continue;
    const double* row = &tableau_[static_cast<size_t>(i) * cols_];
    for (int c = 0; c < cols_; ++c) reduced_[c] -= cb * row[c];
  }
  for (int i = 0; i < rows_; ++i) reduced_[basis_[i]] = 0.0;
}

void Tableau::Pivot(int r, int q) {
  double* prow = &tableau_[static_cast<size_t>(r) * cols_];
  const double inv = 1.0 / prow[q];
  for (int c = 0; c < cols_; ++c) prow[c] *= inv;
  prow[q] = 1.0;
  for (int i = 0; i < rows_; ++i) {
    if (i == r) continue;
    double* row = &tableau_[static_cast<size_t>(i) * cols_];
    const double f = row[q];
    if (f == 0.0) continue;
    for (int c = 0; c < cols_; ++c) row[c] -= f * prow[c];
    row[q] = 0.0;
  }
  const double f = reduced_[q];
  if (f != 0.0) {
    for (int c = 0; c < cols_; ++c) reduced_[c] -= f * prow[c];
  }
  reduced_[q] = 0.0;
}

SolveStatus Tableau::Iterate(const std::vector<double>& costs) {
  PriceFrom(costs);
  int degenerate = 0;
  bool bland = false;
  const bool cheap =
      static_cast<int64_t>(rows_) * cols_ <= kCheapRefactorCells;
  int since_refactor = 0;
  bool unstable = false;
  while (true) {
    if (iterations_ >= kIterationLimit) return SolveStatus::kLimitReached;
    // Drift checks are spaced out so that a basis which stays slightly
    // infeasible after refactoring does not trigger one per pivot.
    if ((unstable && since_refactor >= 50) ||
        (since_refactor >= 50 && Drifted()) ||
        (cheap && since_refactor >= kRefactorInterval)) {
      if (Refactor()) PriceFrom(costs);
      if (Drifted()) Perturb();
      since_refactor = 0;
      unstable = false;
    }
    // Entering column.
    int q = -1;
    double best = 0.0;
    for (int c = 0; c < cols_; ++c) {
      if (state_[c] == ColumnState::kBasic || upper_[c] <= 0.0) continue;
      double score = 0.0;
      if (state_[c] == ColumnState::kAtLower && reduced_[c] > kOptimalityTolerance) {
        score = reduced_[c];
      } else if (state_[c] == ColumnState::kAtUpper &&
                 reduced_[c] < -kOptimalityTolerance) {
        score = -reduced_[c];
      } else {
        continue;
      }
      if (bland) {
        q = c;
        break;
      }
      if (score > best) {
        best = score;
        q = c;
      }
    }
    if (q < 0) return SolveStatus::kOptimal;
    ++iterations_;

    const double dir = state_[q] == ColumnState::kAtLower ? 1.0 : -1.0;
    // Two-pass Harris ratio test: bound the step with every row relaxed by
    // kFeasibilityTolerance, then among rows that block within that bound
    // take the largest pivot (the smallest basic index under Bland's rule,
    // restricted to pivots of comparable size).
    auto row_limit = [&](int i, double a, double slack, bool* to_upper) {
      if (a > kPivotTolerance) {
        *to_upper = false;
        return (std::max(beta_[i], 0.0) + slack) / a;
      }
      if (a < -kPivotTolerance && std::isfinite(upper_[basis_[i]])) {
        *to_upper = true;
        return (std::max(upper_[basis_[i]] - beta_[i], 0.0) + slack) / (-a);
      }
      return kInfinity;
    };
    double bound = upper_[q];
    double largest = 0.0;
    for (int i = 0; i < rows_; ++i) {
      bool to_upper = false;
      const double a = dir * At(i, q);
      bound = std::min(bound, row_limit(i, a, kFeasibilityTolerance, &to_upper));
      largest = std::max(largest, std::abs(a));
    }
    double step = upper_[q];
    int leave = -1;
    bool leave_to_upper = false;
    double leave_pivot = 0.0;
    if (std::isfinite(bound)) {
      for (int i = 0; i < rows_; ++i) {
        bool to_upper = false;
        const double a = dir * At(i, q);
        const double limit = row_limit(i, a, 0.0, &to_upper);
        if (limit > bound) continue;
        bool take;
        if (leave < 0) {
          take = true;
        } else if (bland) {
          const bool comparable = std::abs(a) >= 1e-3 * largest;
          const bool current = std::abs(leave_pivot) >= 1e-3 * largest;
          take = comparable && (!current || basis_[i] < basis_[leave]);
        } else {
          take = std::abs(a) > std::abs(leave_pivot);
        }
        if (take) {
          leave = i;
          leave_to_upper = to_upper;
          leave_pivot = a;
          step = limit;
        }
      }
      if (leave >= 0 && upper_[q] <= step) leave = -1;
      step = std::min(step, upper_[q]);
    }
    if (leave < 0 && !std::isfinite(step)) return SolveStatus::kUnbounded;

    // Stalling is met first by a perturbation, then by Bland's rule for the
    // rest of this call.
    if (step * best < 1e-12 || step < 1e-12) {
      if (++degenerate >= kDegenerateLimit) {
        if (perturbed_) {
          bland = true;
        } else {
          Perturb();
        }
        degenerate = 0;
      }
    } else {
      degenerate = 0;
    }

    for (int i = 0; i < rows_; ++i) {
      const double a = At(i, q);
      if (a != 0.0) beta_[i] -= dir * step * a;
      if (beta_[i] < 0.0 && beta_[i] > -kFeasibilityTolerance) beta_[i] = 0.0;
    }
    if (leave < 0) {
      state_[q] = state_[q] == ColumnState::kAtLower ? ColumnState::kAtUpper
                                                     : ColumnState::kAtLower;
      continue;
    }
    const double entering_value =
        (state_[q] == ColumnState::kAtLower ? 0.0 : upper_[q]) + dir * step;
    const int leaving = basis_[leave];
    if (std::abs(leave_pivot) < 1e-6 * largest) unstable = true;
    ++since_refactor;
    Pivot(leave, q);
    beta_[leave] = entering_value;
    basis_[leave] = q;
    state_[q] = ColumnState::kBasic;
    state_[leaving] =
        leave_to_upper ? ColumnState::kAtUpper : ColumnState::kAtLower;
  }
}

LpSolution Tableau::Solve() {
  LpSolution out;
  if (infeasible_bounds_) {
    out.status = SolveStatus::kInfeasible;
    return out;
  }
  bool has_artificial = false;
  std::vector<double> phase_one(cols_, 0.0);
  for (int c = 0; c < cols_; ++c) {
    if (map_[c].artificial) {
      phase_one[c] = -1.0;
      has_artificial = true;
    }
  }
  if (has_artificial) {
    const SolveStatus s = Optimize(phase_one);
    if (s != SolveStatus::kOptimal) {
      out.status = s;
      out.iterations = iterations_;
      return out;
    }
    double infeasibility = 0.0;
    double scale = 1.0;
    for (int i = 0; i < rows_; ++i) {
      if (map_[basis_[i]].artificial) infeasibility += std::max(0.0, beta_[i]);
      scale = std::max(scale, std::abs(beta_[i]));
    }
    if (infeasibility > kPhaseOneTolerance * scale) {
      out.status = SolveStatus::kInfeasible;
      out.iterations = iterations_;
      return out;
    }
    for (int c = 0; c < cols_; ++c) {
      if (map_[c].artificial) upper_[c] = 0.0;
    }
    for (int i = 0; i < rows_; ++i) {
      if (map_[basis_[i]].artificial) beta_[i] = std::max(0.0, std::min(beta_[i], 0.0));
    }
  }
  std::vector<double> costs(cols_, 0.0);
  std::copy(cost_.begin(), cost_.end(), costs.begin());
  const SolveStatus s = Optimize(costs);
  out.iterations = iterations_;
  if (s != SolveStatus::kOptimal) {
    out.status = s;
    return out;
  }

  // Recover the point.
  std::vector<double> value(cols_, 0.0);
  for (int c = 0; c < cols_; ++c) {
    if (state_[c] == ColumnState::kAtUpper) value[c] = upper_[c];
  }
  for (int i = 0; i < rows_; ++i) value[basis_[i]] = beta_[i];
  const int n = model_.num_variables();
  out.values = shift_;
  out.reduced_costs.assign(n, 0.0);
  const double direction = model_.sense() == Sense::kMaximize ? 1.0 : -1.0;
  std::vector<bool> seen(n, false);
  for (int c = 0; c < cols_; ++c) {
    const auto& cm = map_[c];
    if (cm.source < 0) continue;
    out.values[cm.source] += cm.sign * value[c];
    if (!seen[cm.source]) {
      out.reduced_costs[cm.source] = direction * cm.sign * reduced_[c];
      seen[cm.source] = true;
    }
  }
  out.duals.assign(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    const int s_col = slack_col_[i];
    out.duals[i] = -direction * reduced_[s_col] / map_[s_col].sign;
  }
  out.objective = model_.ObjectiveValue(out.values);
  out.status = SolveStatus::kOptimal;
  out.best_bound = out.objective;
  return out;
}

}  // namespace

LpSolution SolveLpWithBounds(const LinearModel& model,
                             std::span<const double> lower,
                             std::span<const double> upper) {
  model.Validate();
  if (static_cast<int>(lower.size()) != model.num_variables() ||
      static_cast<int>(upper.size()) != model.num_variables()) {
    throw UsageError("bound vectors do not match the variable count");
  }
  Tableau tableau(model, lower, upper);
  return tableau.Solve();
}

LpSolution SolveLp(const LinearModel& model) {
  std::vector<double> lower, upper;
  for (const auto& v : model.variables()) {
    lower.push_back(v.lower);
    upper.push_back(v.upper);
  }
  return SolveLpWithBounds(model, lower, upper);
}

}  // namespace lfg
