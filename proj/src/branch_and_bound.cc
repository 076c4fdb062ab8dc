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

#include "lfg/branch_and_bound.h"

#include <algorithm>
#include <chrono>
#include <deque>
#include <queue>
#include <sstream>

#include "lfg/game_io.h"

namespace lfg {
namespace {

constexpr double kBoundTolerance = 1e-9;

bool Contains(const std::vector<int>& sorted, int id) {
  return std::binary_search(sorted.begin(), sorted.end(), id);
}

std::vector<int> WithProfile(std::vector<int> set, int id) {
  set.insert(std::upper_bound(set.begin(), set.end(), id), id);
  return set;
}

struct Frontier {
  BnbNode node;
  int64_t id;
  int64_t parent;
  std::optional<double> parent_ub;
};

struct FrontierOrder {
  bool operator()(const Frontier& a, const Frontier& b) const {
    if (a.node.ub != b.node.ub) return a.node.ub < b.node.ub;
    return a.id > b.id;
  }
};

double Elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::optional<BnbNode> CreateNode(const NormalFormGame& game,
                                  const OutcomeConfiguration& cfg,
                                  const FormulationOptions& options) {
  if (!CheckEmptiness(game, cfg, options, /*decide_only=*/true)) {
    return std::nullopt;
  }
  const LexPoint point = cfg.s_plus.empty()
                             ? SolveOptimisticRestricted(game, cfg.s_minus, options)
                             : SolveLexSup(game, cfg, options);
  if (point.status == SolveStatus::kInfeasible ||
      point.status == SolveStatus::kUnbounded) {
    return std::nullopt;
  }
  return BnbNode{cfg, point.eta, point.x, point.epsilon};
}

std::optional<int> FeasibilityCheck(const NormalFormGame& game,
                                    const LeaderStrategy& x,
                                    const OutcomeConfiguration& cfg,
                                    double slack) {
  std::optional<int> best;
  double best_value = 0.0;
  bool best_in_plus = false;
  for (int id = 0; id < game.num_follower_profiles(); ++id) {
    if (Contains(cfg.s_minus, id)) continue;
    if (!IsPureNe(game, id, x, slack)) continue;
    const double value = LeaderUtility(game, id, x);
    const bool in_plus = Contains(cfg.s_plus, id);
    const bool better =
        !best || value < best_value - kBoundTolerance ||
        (value <= best_value + kBoundTolerance && in_plus && !best_in_plus);
    if (better) {
      best = id;
      best_value = value;
      best_in_plus = in_plus;
    }
  }
  return best;
}

std::string FormatEvent(const BnbEvent& e) {
  std::ostringstream out;
  auto opt = [](const std::optional<double>& v) {
    return v ? FormatDouble(*v) : std::string("-inf");
  };
  out << "event=" << e.kind << " node=" << e.node << " parent=" << e.parent
      << " s_plus=" << e.s_plus << " s_minus=" << e.s_minus
      << " ub=" << opt(e.ub) << " parent_ub=" << opt(e.parent_ub)
      << " incumbent=" << opt(e.incumbent) << " frontier=" << e.frontier;
  return out.str();
}

SolveReport SolveBnb(const NormalFormGame& game, double alpha,
                     const BnbOptions& options) {
  if (!(alpha > 0.0)) throw UsageError("alpha must be positive");
  const auto start = std::chrono::steady_clock::now();
  const FormulationOptions& fo = options.formulation;
  SolveReport report;
  report.alpha = alpha;

  std::priority_queue<Frontier, std::vector<Frontier>, FrontierOrder> frontier;
  int64_t next_id = 0;
  std::optional<double> lb;
  std::optional<BnbNode> best;

  auto emit = [&](BnbEvent e) {
    if (!options.observer) return;
    e.incumbent = lb;
    e.frontier = static_cast<int64_t>(frontier.size());
    options.observer(e);
  };
  auto create = [&](const OutcomeConfiguration& cfg, int64_t parent,
                    std::optional<double> parent_ub) {
    const int64_t id = next_id++;
    ++report.stats.nodes_created;
    auto node = CreateNode(game, cfg, fo);
    BnbEvent e{node ? "create" : "empty", id, parent,
               static_cast<int>(cfg.s_plus.size()),
               static_cast<int>(cfg.s_minus.size()),
               node ? std::optional<double>(node->ub) : std::nullopt,
               parent_ub, std::nullopt, 0};
    if (node) frontier.push(Frontier{std::move(*node), id, parent, parent_ub});
    emit(e);
  };

  // Seed: the first profile that is an NE somewhere on the simplex.
  int seed = -1;
  for (int id = 0; id < game.num_follower_profiles() && seed < 0; ++id) {
    const BuiltModel region = BuildCheckEmptiness(game, {{id}, {}}, fo);
    if (SolveLp(region.model).status == SolveStatus::kOptimal) seed = id;
  }
  if (seed >= 0) {
    create({{seed}, {}}, -1, std::nullopt);
    create({{}, {seed}}, -1, std::nullopt);
  }

  bool incomplete = false;
  while (!frontier.empty()) {
    if (report.stats.nodes_explored >= options.node_limit ||
        Elapsed(start) > options.time_limit_seconds) {
      incomplete = true;
      break;
    }
    Frontier item = frontier.top();
    frontier.pop();
    const BnbNode& node = item.node;
    BnbEvent e{"", item.id, item.parent,
               static_cast<int>(node.cfg.s_plus.size()),
               static_cast<int>(node.cfg.s_minus.size()), node.ub,
               item.parent_ub, std::nullopt, 0};
    if (lb && node.ub <= *lb + kBoundTolerance) {
      e.kind = "prune";
      emit(e);
      continue;
    }
    ++report.stats.nodes_explored;
    const auto check = FeasibilityCheck(game, node.x_star, node.cfg);
    if (!check) {
      e.kind = "prune";
      emit(e);
      continue;
    }
    if (Contains(node.cfg.s_plus, *check)) {
      best = node;
      lb = node.ub;
      e.kind = "leaf";
      emit(e);
      continue;
    }
    e.kind = "branch";
    emit(e);
    create({WithProfile(node.cfg.s_plus, *check), node.cfg.s_minus}, item.id,
           node.ub);
    create({node.cfg.s_plus, WithProfile(node.cfg.s_minus, *check)}, item.id,
           node.ub);
  }

  report.supremum = lb;
  if (incomplete) {
    report.status = ReportStatus::kIncomplete;
    std::optional<double> ub = lb;
    if (!frontier.empty() && (!ub || frontier.top().node.ub > *ub)) {
      ub = frontier.top().node.ub;
    }
    report.upper_bound = ub;
  } else {
    report.status = lb ? ReportStatus::kOptimal : ReportStatus::kNoPureNe;
    report.upper_bound = lb;
  }
  if (best) {
    report.best = best->cfg;
    report.witness = best->x_star;
    report.epsilon = best->eps_star;
    report.attained = best->eps_star > kAttainmentTolerance;
    if (report.attained) {
      report.approx_strategy = best->x_star;
      report.approx_value = PessimisticUtility(game, best->x_star);
    } else {
      const AlphaBnbResult approx =
          SolveAlphaBnb(game, best->cfg, best->x_star, *lb, alpha, options);
      report.stats.approx_nodes = approx.nodes;
      report.approx_strategy = approx.strategy;
      report.approx_value = approx.value;
      if (!approx.certified) report.status = ReportStatus::kIncomplete;
    }
  }
  report.stats.seconds = Elapsed(start);
  return report;
}

AlphaBnbResult SolveAlphaBnb(const NormalFormGame& game,
                             const OutcomeConfiguration& cfg_best,
                             const LeaderStrategy& x_star, double s,
                             double alpha, const BnbOptions& options) {
  if (!(alpha > 0.0)) throw UsageError("alpha must be positive");
  AlphaBnbResult result;
  const double target = s - alpha;
  auto consider = [&](const LeaderStrategy& x) {
    const auto f = PessimisticUtility(game, x);
    if (f && (!result.value || *f > *result.value)) {
      result.value = f;
      result.strategy = x;
    }
    if (f && *f >= target - kBoundTolerance) result.certified = true;
  };

  std::deque<OutcomeConfiguration> open{cfg_best};
  while (!open.empty() && result.nodes < options.approx_node_limit) {
    const OutcomeConfiguration cfg = open.front();
    open.pop_front();
    ++result.nodes;
    const auto point = SolveAlphaApprox(game, cfg, s, alpha, options.formulation);
    if (!point) continue;
    const auto check = FeasibilityCheck(game, point->x, cfg);
    if (!check) continue;
    if (Contains(cfg.s_plus, *check)) {
      if (point->epsilon <= kAttainmentTolerance) continue;
      consider(point->x);
      if (result.certified) return result;
      continue;
    }
    open.push_back({WithProfile(cfg.s_plus, *check), cfg.s_minus});
    open.push_back({cfg.s_plus, WithProfile(cfg.s_minus, *check)});
  }
  // Out of budget: fall back to the closure point if it is better.
  consider(x_star);
  return result;
}

}  // namespace lfg
