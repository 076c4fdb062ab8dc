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

#include "lfg/formulations.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

namespace lfg {

void ValidateConfiguration(const NormalFormGame& game,
                           const OutcomeConfiguration& cfg) {
  const int total = game.num_follower_profiles();
  std::vector<char> seen(total, 0);
  for (const auto* set : {&cfg.s_plus, &cfg.s_minus}) {
    for (int id : *set) {
      if (id < 0 || id >= total) {
        throw UsageError("configuration profile id out of range");
      }
      if (seen[id]) {
        throw UsageError("profile " + std::to_string(id) +
                         " appears twice in the configuration");
      }
      seen[id] = 1;
    }
  }
}

OutcomeConfiguration FullConfiguration(const NormalFormGame& game,
                                       std::vector<int> s_plus) {
  std::sort(s_plus.begin(), s_plus.end());
  OutcomeConfiguration cfg;
  for (int id = 0; id < game.num_follower_profiles(); ++id) {
    if (!std::binary_search(s_plus.begin(), s_plus.end(), id)) {
      cfg.s_minus.push_back(id);
    }
  }
  cfg.s_plus = std::move(s_plus);
  return cfg;
}

std::vector<Deviation> Deviations(const NormalFormGame& game, int profile_id) {
  std::vector<Deviation> out;
  for (int p = 0; p < game.num_followers(); ++p) {
    const int own = game.ActionOf(profile_id, p);
    const auto current = game.Slice(p, profile_id);
    for (int a = 0; a < game.num_actions(p); ++a) {
      if (a == own) continue;
      Deviation d;
      d.follower = p;
      d.action = a;
      d.deviated_profile = game.Deviate(profile_id, p, a);
      const auto other = game.Slice(p, d.deviated_profile);
      d.big_m = -kInfinity;
      d.min_gain = kInfinity;
      for (size_t k = 0; k < current.size(); ++k) {
        const double gain = current[k] - other[k];
        d.big_m = std::max(d.big_m, gain);
        d.min_gain = std::min(d.min_gain, gain);
      }
      out.push_back(d);
    }
  }
  return out;
}

namespace {

// Gain vector U_p(a) - U_p(a') over the leader's actions.
std::vector<double> Gain(const NormalFormGame& game, int profile,
                         const Deviation& d) {
  const auto current = game.Slice(d.follower, profile);
  const auto other = game.Slice(d.follower, d.deviated_profile);
  std::vector<double> g(current.size());
  for (size_t k = 0; k < g.size(); ++k) g[k] = current[k] - other[k];
  return g;
}

struct DisjunctionBlock {
  int profile;
  std::vector<Deviation> deviations;
  std::vector<int> columns;
};

// Declares the simplex variables x_0..x_{m-1}.
int DeclareStrategy(LinearModel& model, int m) {
  const int first = model.num_variables();
  for (int k = 0; k < m; ++k) model.AddVariable("x_" + std::to_string(k), 0, 1);
  return first;
}

// Declares one indicator per deviation from each S- profile. A deviation that
// never strictly pays off (min gain >= 0) cannot hold in the open region, so
// its indicator is fixed to 1 (row switched off).
std::vector<DisjunctionBlock> DeclareIndicators(
    LinearModel& model, const NormalFormGame& game,
    const std::vector<int>& s_minus) {
  std::vector<DisjunctionBlock> blocks;
  for (int id : s_minus) {
    DisjunctionBlock block{id, Deviations(game, id), {}};
    for (const auto& d : block.deviations) {
      const std::string name = "z_" + std::to_string(id) + "_" +
                               std::to_string(d.follower) + "_" +
                               std::to_string(d.action);
      const double lower = d.min_gain >= 0.0 ? 1.0 : 0.0;
      block.columns.push_back(model.AddVariable(name, lower, 1.0, true));
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

void AddSimplexRow(LinearModel& model, int x, int m) {
  auto row = model.Row();
  for (int k = 0; k < m; ++k) row[x + k] = 1.0;
  model.AddConstraint(std::move(row), Relation::kEqual, 1.0, "simplex");
}

// x in X(a) for every a in S+. Rows that hold on the whole simplex are
// skipped.
void AddNashRows(LinearModel& model, const NormalFormGame& game,
                 const std::vector<int>& s_plus, int x) {
  for (int id : s_plus) {
    for (const auto& d : Deviations(game, id)) {
      if (d.min_gain >= 0.0) continue;
      const auto g = Gain(game, id, d);
      auto row = model.Row();
      for (size_t k = 0; k < g.size(); ++k) row[x + k] = g[k];
      model.AddConstraint(std::move(row), Relation::kGreaterEqual, 0.0,
                          "ne_" + std::to_string(id) + "_" +
                              std::to_string(d.follower) + "_" +
                              std::to_string(d.action));
    }
  }
}

void AddDisjunctionRows(LinearModel& model, const NormalFormGame& game,
                        const std::vector<DisjunctionBlock>& blocks, int x,
                        int epsilon, double cap) {
  for (const auto& block : blocks) {
    auto sum = model.Row();
    for (size_t i = 0; i < block.deviations.size(); ++i) {
      const auto& d = block.deviations[i];
      const int z = block.columns[i];
      sum[z] = 1.0;
      if (model.variables()[z].lower >= 1.0) continue;
      const auto g = Gain(game, block.profile, d);
      auto row = model.Row();
      for (size_t k = 0; k < g.size(); ++k) row[x + k] = g[k];
      row[epsilon] = 1.0;
      row[z] = -(d.big_m + cap);
      model.AddConstraint(std::move(row), Relation::kLessEqual, 0.0,
                          "dev_" + std::to_string(block.profile) + "_" +
                              std::to_string(d.follower) + "_" +
                              std::to_string(d.action));
    }
    model.AddConstraint(
        std::move(sum), Relation::kEqual,
        static_cast<double>(block.deviations.size()) - 1.0,
        "one_of_" + std::to_string(block.profile));
  }
}

void FillIndicatorMap(VariableMap& vars,
                      const std::vector<DisjunctionBlock>& blocks) {
  for (const auto& b : blocks) {
    if (!b.columns.empty() && vars.indicators < 0) vars.indicators = b.columns[0];
    vars.num_indicators += static_cast<int>(b.columns.size());
  }
}

LeaderStrategy ExtractStrategy(const std::vector<double>& values, int x, int m) {
  return LeaderStrategy::FromSolverOutput(
      std::span<const double>(values).subspan(x, m));
}

// Branch-and-bound over the S- disjunctions themselves. The LP at a node
// keeps `base` plus one row -g x >= eps per committed profile; uncommitted
// profiles are dropped, so the LP value bounds the subtree. A node whose LP
// point already leaves every uncommitted profile with a deviation that pays
// at least eps_floor is completed greedily.
class DisjunctiveSearch {
 public:
  struct Result {
    SolveStatus status = SolveStatus::kInfeasible;
    bool found = false;
    double value = -kInfinity;
    std::vector<double> values;
    // Committed deviation per S- profile (index into its candidate list).
    std::vector<int> choice;
    int64_t nodes = 0;
  };

  DisjunctiveSearch(const NormalFormGame& game, const std::vector<int>& s_minus,
                    int x, int epsilon)
      : x_(x), epsilon_(epsilon), m_(game.num_leader_actions()) {
    for (int id : s_minus) {
      std::vector<std::vector<double>> pays;
      for (const auto& d : Deviations(game, id)) {
        if (d.min_gain >= 0.0) continue;
        auto g = Gain(game, id, d);
        for (double& v : g) v = -v;
        pays.push_back(std::move(g));
      }
      profitable_.push_back(std::move(pays));
    }
  }

  // Maximizes column `objective` of `base`. With `objective == epsilon` the
  // value of a completed point is the smallest margin it attains; otherwise
  // the objective is read from the LP. Stops early once a value above
  // `stop_above` is found.
  Result Maximize(const LinearModel& base, int objective, double eps_floor,
                  double stop_above, const MilpOptions& limits) {
    base_ = &base;
    objective_ = objective;
    eps_floor_ = eps_floor;
    stop_above_ = stop_above;
    limits_ = &limits;
    start_ = std::chrono::steady_clock::now();
    result_ = Result{};
    for (const auto& pays : profitable_) {
      if (pays.empty()) return result_;  // some S- profile is always an NE
    }
    limited_ = false;
    std::vector<int> choice(profitable_.size(), -1);
    Visit(choice);
    result_.status = limited_ ? SolveStatus::kLimitReached
                     : result_.found ? SolveStatus::kOptimal
                                     : SolveStatus::kInfeasible;
    return result_;
  }

  // Rows -g x >= eps for a full choice, added to a copy of `base`.
  LinearModel WithChoice(const LinearModel& base,
                         const std::vector<int>& choice) const {
    LinearModel model = base;
    for (size_t i = 0; i < choice.size(); ++i) AddPayRow(model, i, choice[i]);
    return model;
  }

 private:
  double Pay(size_t block, int dev, std::span<const double> values) const {
    const auto& g = profitable_[block][dev];
    double total = 0.0;
    for (int k = 0; k < m_; ++k) total += g[k] * values[x_ + k];
    return total;
  }

  void AddPayRow(LinearModel& model, size_t block, int dev) const {
    auto row = model.Row();
    for (int k = 0; k < m_; ++k) row[x_ + k] = profitable_[block][dev][k];
    row[epsilon_] = -1.0;
    model.AddConstraint(std::move(row), Relation::kGreaterEqual, 0.0);
  }

  bool OutOfBudget() {
    if (result_.nodes >= limits_->node_limit) return true;
    const std::chrono::duration<double> spent =
        std::chrono::steady_clock::now() - start_;
    return spent.count() > limits_->time_limit_seconds;
  }

  bool Done() const { return result_.found && result_.value > stop_above_; }

  void Visit(std::vector<int>& choice) {
    if (Done() || limited_) return;
    if (OutOfBudget()) {
      limited_ = true;
      return;
    }
    ++result_.nodes;
    LinearModel model = *base_;
    for (size_t i = 0; i < choice.size(); ++i) {
      if (choice[i] >= 0) AddPayRow(model, i, choice[i]);
    }
    auto objective = model.Row();
    objective[objective_] = 1.0;
    model.SetObjective(std::move(objective), Sense::kMaximize);
    const LpSolution lp = SolveLp(model);
    if (lp.status != SolveStatus::kOptimal) return;
    const double bound = lp.objective;
    if (result_.found && bound <= result_.value + kPruneGap) return;
    if (objective_ == epsilon_ && bound < eps_floor_) return;

    // Uncommitted profile with the smallest best margin at the LP point.
    size_t branch = choice.size();
    double weakest = kInfinity;
    std::vector<int> completed = choice;
    for (size_t i = 0; i < choice.size(); ++i) {
      if (choice[i] >= 0) continue;
      int arg = 0;
      double best = -kInfinity;
      for (size_t j = 0; j < profitable_[i].size(); ++j) {
        const double pay = Pay(i, static_cast<int>(j), lp.values);
        if (pay > best) {
          best = pay;
          arg = static_cast<int>(j);
        }
      }
      completed[i] = arg;
      if (best < weakest) {
        weakest = best;
        branch = i;
      }
    }
    if (weakest >= eps_floor_ || branch == choice.size()) {
      double value = bound;
      std::vector<double> values = lp.values;
      if (objective_ == epsilon_) {
        value = std::min(bound, weakest);
        values[epsilon_] = value;
      }
      if (!result_.found || value > result_.value) {
        result_.found = true;
        result_.value = value;
        result_.values = std::move(values);
        result_.choice = completed;
      }
      if (objective_ != epsilon_ || value >= bound - kPruneGap) return;
    }

    std::vector<int> order(profitable_[branch].size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> pay(order.size());
    for (int j : order) pay[j] = Pay(branch, j, lp.values);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pay[a] > pay[b]; });
    for (int j : order) {
      choice[branch] = j;
      Visit(choice);
      if (Done() || limited_) break;
    }
    choice[branch] = -1;
  }

  static constexpr double kPruneGap = 1e-9;

  int x_;
  int epsilon_;
  int m_;
  std::vector<std::vector<std::vector<double>>> profitable_;

  const LinearModel* base_ = nullptr;
  int objective_ = 0;
  double eps_floor_ = 0.0;
  double stop_above_ = kInfinity;
  const MilpOptions* limits_ = nullptr;
  std::chrono::steady_clock::time_point start_;
  bool limited_ = false;
  Result result_;
};

}  // namespace

BuiltModel BuildCheckEmptiness(const NormalFormGame& game,
                               const OutcomeConfiguration& cfg,
                               const FormulationOptions& options) {
  ValidateConfiguration(game, cfg);
  const int m = game.num_leader_actions();
  BuiltModel out;
  LinearModel& model = out.model;
  out.vars.x = DeclareStrategy(model, m);
  out.vars.epsilon = model.AddVariable("eps", 0.0, options.epsilon_cap);
  const auto blocks = DeclareIndicators(model, game, cfg.s_minus);
  FillIndicatorMap(out.vars, blocks);

  AddSimplexRow(model, out.vars.x, m);
  AddNashRows(model, game, cfg.s_plus, out.vars.x);
  AddDisjunctionRows(model, game, blocks, out.vars.x, out.vars.epsilon,
                     options.epsilon_cap);
  auto objective = model.Row();
  objective[out.vars.epsilon] = 1.0;
  model.SetObjective(std::move(objective), Sense::kMaximize);
  return out;
}

BuiltLexModel BuildLexSup(const NormalFormGame& game,
                          const OutcomeConfiguration& cfg,
                          const FormulationOptions& options) {
  ValidateConfiguration(game, cfg);
  if (cfg.s_plus.empty()) {
    throw UsageError("lexicographic supremum model needs a nonempty S+");
  }
  const int m = game.num_leader_actions();
  BuiltLexModel out;
  LinearModel& model = out.model.base;
  out.vars.x = DeclareStrategy(model, m);
  out.vars.epsilon = model.AddVariable("eps", 0.0, options.epsilon_cap);
  out.vars.eta = model.AddVariable("eta", -kInfinity, kInfinity);
  const auto blocks = DeclareIndicators(model, game, cfg.s_minus);
  FillIndicatorMap(out.vars, blocks);

  AddSimplexRow(model, out.vars.x, m);
  for (int id : cfg.s_plus) {
    const auto leader = game.Slice(game.leader(), id);
    auto row = model.Row();
    row[out.vars.eta] = 1.0;
    for (int k = 0; k < m; ++k) row[out.vars.x + k] = -leader[k];
    model.AddConstraint(std::move(row), Relation::kLessEqual, 0.0,
                        "psi_" + std::to_string(id));
  }
  AddNashRows(model, game, cfg.s_plus, out.vars.x);
  AddDisjunctionRows(model, game, blocks, out.vars.x, out.vars.epsilon,
                     options.epsilon_cap);

  auto primary = model.Row();
  primary[out.vars.eta] = 1.0;
  model.SetObjective(std::move(primary), Sense::kMaximize);
  out.model.secondary = model.Row();
  out.model.secondary[out.vars.epsilon] = 1.0;
  return out;
}

BuiltModel BuildAlphaApprox(const NormalFormGame& game,
                            const OutcomeConfiguration& cfg, double s,
                            double alpha, const FormulationOptions& options) {
  if (!(alpha > 0.0)) throw UsageError("alpha must be positive");
  BuiltModel out = BuildCheckEmptiness(game, cfg, options);
  LinearModel& model = out.model;
  const int m = game.num_leader_actions();
  for (int id : cfg.s_plus) {
    const auto leader = game.Slice(game.leader(), id);
    auto row = model.Row();
    for (int k = 0; k < m; ++k) row[out.vars.x + k] = leader[k];
    model.AddConstraint(std::move(row), Relation::kGreaterEqual, s - alpha,
                        "value_" + std::to_string(id));
  }
  return out;
}

BuiltLexModel BuildOptimisticRestricted(const NormalFormGame& game,
                                        const std::vector<int>& s_minus,
                                        const FormulationOptions& options) {
  ValidateConfiguration(game, OutcomeConfiguration{{}, s_minus});
  const int m = game.num_leader_actions();
  const int profiles = game.num_follower_profiles();
  BuiltLexModel out;
  LinearModel& model = out.model.base;
  out.vars.x = DeclareStrategy(model, m);
  out.vars.epsilon = model.AddVariable("eps", 0.0, options.epsilon_cap);

  // A profile can be selected only if it is outside S- and no deviation from
  // it pays off strictly everywhere.
  std::vector<char> selectable(profiles, 1);
  for (int id : s_minus) selectable[id] = 0;
  for (int id = 0; id < profiles; ++id) {
    for (const auto& d : Deviations(game, id)) {
      if (d.big_m < 0.0) selectable[id] = 0;
    }
  }
  out.vars.y = model.num_variables();
  for (int id = 0; id < profiles; ++id) {
    model.AddVariable("y_" + std::to_string(id), 0.0, selectable[id] ? 1.0 : 0.0,
                      true);
  }
  out.vars.z = model.num_variables();
  for (int id = 0; id < profiles; ++id) {
    for (int k = 0; k < m; ++k) {
      model.AddVariable("w_" + std::to_string(id) + "_" + std::to_string(k), 0.0,
                        selectable[id] ? 1.0 : 0.0);
    }
  }
  const auto blocks = DeclareIndicators(model, game, s_minus);
  FillIndicatorMap(out.vars, blocks);
  auto w = [&](int id, int k) { return out.vars.z + id * m + k; };

  AddSimplexRow(model, out.vars.x, m);
  {
    auto row = model.Row();
    for (int id = 0; id < profiles; ++id) row[out.vars.y + id] = 1.0;
    model.AddConstraint(std::move(row), Relation::kEqual, 1.0, "select_one");
  }
  // Together with w >= 0, these two aggregations force w = y x whenever y is
  // binary, which is all the McCormick envelope is needed for here.
  for (int id = 0; id < profiles; ++id) {
    auto row = model.Row();
    for (int k = 0; k < m; ++k) row[w(id, k)] = 1.0;
    row[out.vars.y + id] = -1.0;
    model.AddConstraint(std::move(row), Relation::kEqual, 0.0,
                        "mc_row_" + std::to_string(id));
  }
  for (int k = 0; k < m; ++k) {
    auto row = model.Row();
    for (int id = 0; id < profiles; ++id) row[w(id, k)] = 1.0;
    row[out.vars.x + k] = -1.0;
    model.AddConstraint(std::move(row), Relation::kEqual, 0.0,
                        "mc_col_" + std::to_string(k));
  }
  for (int id = 0; id < profiles; ++id) {
    if (!selectable[id]) continue;
    for (const auto& d : Deviations(game, id)) {
      if (d.min_gain >= 0.0) continue;
      const auto g = Gain(game, id, d);
      auto row = model.Row();
      for (int k = 0; k < m; ++k) row[w(id, k)] = g[k];
      model.AddConstraint(std::move(row), Relation::kGreaterEqual, 0.0,
                          "ne_" + std::to_string(id) + "_" +
                              std::to_string(d.follower) + "_" +
                              std::to_string(d.action));
    }
  }
  AddDisjunctionRows(model, game, blocks, out.vars.x, out.vars.epsilon,
                     options.epsilon_cap);

  auto primary = model.Row();
  for (int id = 0; id < profiles; ++id) {
    const auto leader = game.Slice(game.leader(), id);
    for (int k = 0; k < m; ++k) primary[w(id, k)] = leader[k];
  }
  model.SetObjective(std::move(primary), Sense::kMaximize);
  out.model.secondary = model.Row();
  out.model.secondary[out.vars.epsilon] = 1.0;
  return out;
}

std::optional<RegionPoint> CheckEmptiness(const NormalFormGame& game,
                                          const OutcomeConfiguration& cfg,
                                          const FormulationOptions& options,
                                          bool decide_only) {
  if (options.search == RegionSearch::kDisjunctive) {
    ValidateConfiguration(game, cfg);
    const BuiltModel built = BuildCheckEmptiness(game, {cfg.s_plus, {}}, options);
    DisjunctiveSearch search(game, cfg.s_minus, built.vars.x, built.vars.epsilon);
    const auto result = search.Maximize(
        built.model, built.vars.epsilon, kAttainmentTolerance,
        decide_only ? kAttainmentTolerance : kInfinity, options.milp);
    if (!result.found || result.value <= kAttainmentTolerance) return std::nullopt;
    return RegionPoint{result.value,
                       ExtractStrategy(result.values, built.vars.x,
                                       game.num_leader_actions())};
  }
  const BuiltModel built = BuildCheckEmptiness(game, cfg, options);
  MilpOptions milp = options.milp;
  milp.objective_cutoff = std::max(milp.objective_cutoff, kAttainmentTolerance);
  if (decide_only) milp.stop_above = kAttainmentTolerance;
  const LpSolution solution = SolveMilp(built.model, milp);
  if (!solution.has_incumbent) return std::nullopt;
  const double eps = solution.values[built.vars.epsilon];
  if (eps <= kAttainmentTolerance) return std::nullopt;
  return RegionPoint{
      eps, ExtractStrategy(solution.values, built.vars.x,
                           game.num_leader_actions())};
}

namespace {

LexPoint FromLex(const LexSolution& solution, const VariableMap& vars, int m) {
  LexPoint out;
  out.status = solution.status;
  if (!solution.has_incumbent) {
    if (out.status == SolveStatus::kOptimal) out.status = SolveStatus::kInfeasible;
    return out;
  }
  out.eta = solution.primary;
  out.epsilon = solution.values[vars.epsilon];
  out.x = ExtractStrategy(solution.values, vars.x, m);
  return out;
}

// Stage 1 of the lexicographic solve over the closure of the region. Each
// assignment of the indicator binaries selects a convex piece; only pieces
// that contain points with eps > 0 count, and the closure of such a piece is
// the same polytope with eps >= 0. So the piece is chosen with eps held at
// the attainment tolerance, and its closure value is then read off with the
// binaries fixed.
LexSolution SolveClosureLex(const BuiltLexModel& built,
                            const FormulationOptions& options) {
  const LinearModel& base = built.model.base;
  LinearModel strict = base;
  auto& eps = strict.mutable_variable(built.vars.epsilon);
  eps.lower = std::min(kAttainmentTolerance, eps.upper);
  const LpSolution first = SolveMilp(strict, options.milp);
  LexSolution out;
  static_cast<LpSolution&>(out) = first;
  if (!first.has_incumbent) return out;

  std::vector<double> lower, upper;
  for (int j = 0; j < base.num_variables(); ++j) {
    const Variable& v = base.variables()[j];
    lower.push_back(v.lower);
    upper.push_back(v.upper);
    if (v.binary) lower.back() = upper.back() = std::round(first.values[j]);
  }
  const LpSolution closure = SolveLpWithBounds(base, lower, upper);
  double primary = first.objective;
  std::vector<double> fallback = first.values;
  if (closure.status == SolveStatus::kOptimal && closure.objective > primary) {
    primary = closure.objective;
    fallback = closure.values;
  }

  LinearModel second = base;
  second.AddConstraint(base.objective(), Relation::kGreaterEqual,
                       primary - options.primary_tolerance, "lex_primary");
  second.SetObjective(built.model.secondary, Sense::kMaximize);
  const LpSolution stage_two = SolveMilp(second, options.milp);
  out.primary = primary;
  out.objective = primary;
  out.values = stage_two.has_incumbent ? stage_two.values : fallback;
  out.nodes += stage_two.nodes;
  if (stage_two.status == SolveStatus::kLimitReached) {
    out.status = SolveStatus::kLimitReached;
  }
  out.secondary_value = 0.0;
  for (int j = 0; j < base.num_variables(); ++j) {
    out.secondary_value += built.model.secondary[j] * out.values[j];
  }
  return out;
}

// SolveClosureLex with the disjunctions searched directly.
LexSolution SolveClosureLexDisjunctive(const NormalFormGame& game,
                                       const OutcomeConfiguration& cfg,
                                       const BuiltLexModel& built,
                                       const FormulationOptions& options) {
  const LinearModel& base = built.model.base;
  const int eps = built.vars.epsilon;
  DisjunctiveSearch search(game, cfg.s_minus, built.vars.x, eps);
  LinearModel strict = base;
  strict.mutable_variable(eps).lower =
      std::min(kAttainmentTolerance, base.variables()[eps].upper);
  const auto first = search.Maximize(strict, built.vars.eta,
                                     kAttainmentTolerance, kInfinity,
                                     options.milp);
  LexSolution out;
  out.status = first.status;
  out.nodes = first.nodes;
  if (!first.found) return out;
  out.has_incumbent = true;

  double primary = first.value;
  std::vector<double> fallback = first.values;
  const LpSolution closure = SolveLp(search.WithChoice(base, first.choice));
  if (closure.status == SolveStatus::kOptimal && closure.objective > primary) {
    primary = closure.objective;
    fallback = closure.values;
  }

  LinearModel second = base;
  second.AddConstraint(base.objective(), Relation::kGreaterEqual,
                       primary - options.primary_tolerance, "lex_primary");
  const auto stage_two =
      search.Maximize(second, eps, 0.0, kInfinity, options.milp);
  out.primary = primary;
  out.objective = primary;
  out.values = stage_two.found ? stage_two.values : fallback;
  out.nodes += stage_two.nodes;
  if (stage_two.status == SolveStatus::kLimitReached) {
    out.status = SolveStatus::kLimitReached;
  }
  out.secondary_value = out.values[eps];
  return out;
}

}  // namespace

LexPoint SolveLexSup(const NormalFormGame& game,
                     const OutcomeConfiguration& cfg,
                     const FormulationOptions& options) {
  if (options.search == RegionSearch::kDisjunctive) {
    ValidateConfiguration(game, cfg);
    const BuiltLexModel relaxed = BuildLexSup(game, {cfg.s_plus, {}}, options);
    return FromLex(SolveClosureLexDisjunctive(game, cfg, relaxed, options),
                   relaxed.vars, game.num_leader_actions());
  }
  const BuiltLexModel built = BuildLexSup(game, cfg, options);
  return FromLex(SolveClosureLex(built, options), built.vars,
                 game.num_leader_actions());
}

LexPoint SolveOptimisticRestricted(const NormalFormGame& game,
                                   const std::vector<int>& s_minus,
                                   const FormulationOptions& options) {
  ValidateConfiguration(game, OutcomeConfiguration{{}, s_minus});
  // Fixing the selected profile a turns the model into the lexicographic
  // supremum model for ({a}, S-). Profiles are tried in decreasing order of
  // their bound over X(a) alone, which lets most of them be skipped.
  struct Candidate {
    int id;
    double bound;
  };
  std::vector<Candidate> candidates;
  for (int id = 0; id < game.num_follower_profiles(); ++id) {
    if (std::binary_search(s_minus.begin(), s_minus.end(), id)) continue;
    const BuiltLexModel relaxed = BuildLexSup(game, {{id}, {}}, options);
    const LpSolution lp = SolveLp(relaxed.model.base);
    if (lp.status != SolveStatus::kOptimal) continue;
    candidates.push_back({id, lp.objective});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.bound > b.bound;
                   });
  constexpr double kTie = 1e-9;
  LexPoint best;
  for (const Candidate& c : candidates) {
    if (best.status == SolveStatus::kOptimal && c.bound < best.eta - kTie) break;
    LexPoint point = SolveLexSup(game, {{c.id}, s_minus}, options);
    if (point.status != SolveStatus::kOptimal) continue;
    const bool better =
        best.status != SolveStatus::kOptimal || point.eta > best.eta + kTie ||
        (point.eta >= best.eta - kTie && point.epsilon > best.epsilon + kTie);
    if (better) {
      point.selected_profile = c.id;
      best = std::move(point);
    }
  }
  return best;
}

LexPoint SolveOptimisticRestrictedModel(const NormalFormGame& game,
                                   const std::vector<int>& s_minus,
                                   const FormulationOptions& options) {
  const BuiltLexModel built = BuildOptimisticRestricted(game, s_minus, options);
  const LexSolution solution = SolveClosureLex(built, options);
  LexPoint out = FromLex(solution, built.vars, game.num_leader_actions());
  if (solution.has_incumbent) {
    double best = -1.0;
    for (int id = 0; id < game.num_follower_profiles(); ++id) {
      const double y = solution.values[built.vars.y + id];
      if (y > best) {
        best = y;
        out.selected_profile = id;
      }
    }
  }
  return out;
}

std::optional<RegionPoint> SolveAlphaApprox(const NormalFormGame& game,
                                            const OutcomeConfiguration& cfg,
                                            double s, double alpha,
                                            const FormulationOptions& options) {
  if (options.search == RegionSearch::kDisjunctive) {
    ValidateConfiguration(game, cfg);
    const BuiltModel built =
        BuildAlphaApprox(game, {cfg.s_plus, {}}, s, alpha, options);
    DisjunctiveSearch search(game, cfg.s_minus, built.vars.x, built.vars.epsilon);
    const auto result = search.Maximize(built.model, built.vars.epsilon, 0.0,
                                        kInfinity, options.milp);
    if (!result.found) return std::nullopt;
    return RegionPoint{result.value,
                       ExtractStrategy(result.values, built.vars.x,
                                       game.num_leader_actions())};
  }
  const BuiltModel built = BuildAlphaApprox(game, cfg, s, alpha, options);
  const LpSolution solution = SolveMilp(built.model, options.milp);
  if (!solution.has_incumbent) return std::nullopt;
  return RegionPoint{
      solution.values[built.vars.epsilon],
      ExtractStrategy(solution.values, built.vars.x, game.num_leader_actions())};
}

}  // namespace lfg
