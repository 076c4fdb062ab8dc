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

#include "lfg/optimistic.h"

#include <string>

namespace lfg {

BuiltModel BuildOptimisticLp(const NormalFormGame& game, int profile_id) {
  const int m = game.num_leader_actions();
  BuiltModel out;
  LinearModel& model = out.model;
  for (int k = 0; k < m; ++k) model.AddVariable("x_" + std::to_string(k), 0, 1);
  auto simplex = model.Row();
  for (int k = 0; k < m; ++k) simplex[k] = 1.0;
  model.AddConstraint(std::move(simplex), Relation::kEqual, 1.0, "simplex");
  for (const auto& d : Deviations(game, profile_id)) {
    if (d.min_gain >= 0.0) continue;
    const auto own = game.Slice(d.follower, profile_id);
    const auto other = game.Slice(d.follower, d.deviated_profile);
    auto row = model.Row();
    for (int k = 0; k < m; ++k) row[k] = own[k] - other[k];
    model.AddConstraint(std::move(row), Relation::kGreaterEqual, 0.0);
  }
  const auto leader = game.Slice(game.leader(), profile_id);
  model.SetObjective(std::vector<double>(leader.begin(), leader.end()),
                     Sense::kMaximize);
  return out;
}

OptimisticResult SolveOptimistic(const NormalFormGame& game) {
  OptimisticResult best;
  const int m = game.num_leader_actions();
  for (int id = 0; id < game.num_follower_profiles(); ++id) {
    const BuiltModel built = BuildOptimisticLp(game, id);
    const LpSolution lp = SolveLp(built.model);
    if (lp.status != SolveStatus::kOptimal) continue;
    if (best.value && lp.objective <= *best.value + 1e-9) continue;
    best.value = lp.objective;
    best.strategy = LeaderStrategy::FromSolverOutput(
        std::span<const double>(lp.values).subspan(0, m));
    best.profile = id;
  }
  return best;
}

}  // namespace lfg
