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

#include "lfg/enumeration.h"

#include <chrono>

namespace lfg {
namespace {

bool ClosedRegionNonempty(const NormalFormGame& game,
                          const std::vector<int>& s_plus) {
  const BuiltModel built = BuildCheckEmptiness(game, {s_plus, {}});
  return SolveLp(built.model).status == SolveStatus::kOptimal;
}

void Extend(const NormalFormGame& game, std::vector<int>& s_plus, int next,
            const std::function<void(const std::vector<int>&)>& visit) {
  visit(s_plus);
  for (int id = next; id < game.num_follower_profiles(); ++id) {
    s_plus.push_back(id);
    if (ClosedRegionNonempty(game, s_plus)) Extend(game, s_plus, id + 1, visit);
    s_plus.pop_back();
  }
}

}  // namespace

void ForEachCandidateSupport(
    const NormalFormGame& game,
    const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> s_plus;
  Extend(game, s_plus, 0, visit);
}

SolveReport SolveEnum(const NormalFormGame& game, double alpha,
                      const EnumOptions& options) {
  if (!(alpha > 0.0)) throw UsageError("alpha must be positive");
  if (game.num_follower_profiles() > options.max_profiles) {
    throw SizeLimitError(
        "game has " + std::to_string(game.num_follower_profiles()) +
        " followers' profiles, above the enumeration cap of " +
        std::to_string(options.max_profiles) + "; use branch-and-bound");
  }
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  report.alpha = alpha;
  const FormulationOptions& fo = options.formulation;

  ForEachCandidateSupport(game, [&](const std::vector<int>& s_plus) {
    ++report.stats.configurations;
    const OutcomeConfiguration cfg = FullConfiguration(game, s_plus);
    if (!CheckEmptiness(game, cfg, fo, /*decide_only=*/true)) return;
    ++report.stats.nonempty;
    if (s_plus.empty()) return;  // no pure NE anywhere in this region
    const LexPoint point = SolveLexSup(game, cfg, fo);
    if (point.status == SolveStatus::kInfeasible) return;
    if (!report.supremum || point.eta > *report.supremum + 1e-9) {
      report.supremum = point.eta;
      report.epsilon = point.epsilon;
      report.witness = point.x;
      report.best = cfg;
    }
  });

  if (report.supremum) {
    report.status = ReportStatus::kOptimal;
    report.upper_bound = report.supremum;
    report.attained = report.epsilon > kAttainmentTolerance;
    if (report.attained) {
      report.approx_strategy = report.witness;
    } else {
      const auto approx =
          SolveAlphaApprox(game, report.best, *report.supremum, alpha, fo);
      if (approx) report.approx_strategy = approx->x;
    }
    if (report.approx_strategy) {
      report.approx_value = PessimisticUtility(game, *report.approx_strategy);
    }
  }
  report.stats.seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return report;
}

}  // namespace lfg
