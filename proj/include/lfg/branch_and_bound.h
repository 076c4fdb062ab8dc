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

// Branch-and-bound over relaxed outcome configurations.
//
// A node fixes some profiles to be NEs (S+) and others not to be (S-). Its
// bound is the best worst-case S+ utility over the closure of its region, or
// the restricted optimistic value when S+ is empty. At the node's optimum x*
// the worst NE outside S- is computed: if it lies in S+ the node is a leaf,
// otherwise that profile is branched on.

#ifndef LFG_BRANCH_AND_BOUND_H_
#define LFG_BRANCH_AND_BOUND_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "lfg/formulations.h"
#include "lfg/game.h"
#include "lfg/solve_report.h"

namespace lfg {

struct BnbNode {
  OutcomeConfiguration cfg;
  double ub = 0.0;
  LeaderStrategy x_star;
  double eps_star = 0.0;
};

// nullopt when the region of `cfg` is empty or holds no NE outside S-.
std::optional<BnbNode> CreateNode(const NormalFormGame& game,
                                  const OutcomeConfiguration& cfg,
                                  const FormulationOptions& options = {});

// Worst-case pure NE at x outside cfg.s_minus. Among equally bad profiles,
// members of S+ come first, then the smallest id. Deviation gains up to
// `slack` are tolerated.
std::optional<int> FeasibilityCheck(const NormalFormGame& game,
                                    const LeaderStrategy& x,
                                    const OutcomeConfiguration& cfg,
                                    double slack = 1e-7);

// One line of the search trace.
struct BnbEvent {
  std::string kind;  // create, leaf, branch, prune, empty
  int64_t node = -1;
  int64_t parent = -1;
  int s_plus = 0;
  int s_minus = 0;
  std::optional<double> ub;
  std::optional<double> parent_ub;
  std::optional<double> incumbent;
  int64_t frontier = 0;
};

// key=value rendering of an event.
std::string FormatEvent(const BnbEvent& event);

struct BnbOptions {
  FormulationOptions formulation;
  int64_t node_limit = 200'000;
  double time_limit_seconds = kInfinity;
  int64_t approx_node_limit = 10'000;
  std::function<void(const BnbEvent&)> observer;
};

SolveReport SolveBnb(const NormalFormGame& game, double alpha,
                     const BnbOptions& options = {});

struct AlphaBnbResult {
  std::optional<LeaderStrategy> strategy;
  std::optional<double> value;  // f(strategy)
  bool certified = false;       // value >= s - alpha
  int64_t nodes = 0;
};

// Searches configurations below cfg_best for a strategy with
// f >= s - alpha: solve the alpha-approximation model, check the worst NE
// outside S-, and branch on it when it is not in S+.
AlphaBnbResult SolveAlphaBnb(const NormalFormGame& game,
                             const OutcomeConfiguration& cfg_best,
                             const LeaderStrategy& x_star, double s,
                             double alpha, const BnbOptions& options = {});

}  // namespace lfg

#endif  // LFG_BRANCH_AND_BOUND_H_
