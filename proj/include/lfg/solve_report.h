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

#ifndef LFG_SOLVE_REPORT_H_
#define LFG_SOLVE_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>

#include "lfg/formulations.h"
#include "lfg/game.h"

namespace lfg {

enum class ReportStatus {
  kOptimal,
  // A node or time budget ran out; bounds are reported as found.
  kIncomplete,
  // No leader commitment induces a pure NE.
  kNoPureNe,
};

const char* ToString(ReportStatus status);

struct SolveStats {
  int64_t configurations = 0;  // full configurations checked (enumeration)
  int64_t nonempty = 0;        // of which nonempty
  int64_t nodes_created = 0;
  int64_t nodes_explored = 0;
  int64_t approx_nodes = 0;
  double seconds = 0.0;
};

struct SolveReport {
  ReportStatus status = ReportStatus::kNoPureNe;
  // sup f; nullopt stands for -infinity.
  std::optional<double> supremum;
  // Best upper bound still open (equals supremum when optimal).
  std::optional<double> upper_bound;
  bool attained = false;
  double epsilon = 0.0;
  LeaderStrategy witness;
  OutcomeConfiguration best;
  double alpha = 0.0;
  // A strategy with f >= supremum - alpha, and its f computed independently.
  std::optional<LeaderStrategy> approx_strategy;
  std::optional<double> approx_value;
  SolveStats stats;
};

}  // namespace lfg

#endif  // LFG_SOLVE_REPORT_H_
