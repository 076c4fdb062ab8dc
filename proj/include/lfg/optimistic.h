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

#ifndef LFG_OPTIMISTIC_H_
#define LFG_OPTIMISTIC_H_

#include <optional>

#include "lfg/formulations.h"
#include "lfg/game.h"
#include "lfg/linear_model.h"

namespace lfg {

// max U_n(a) x  s.t.  x in X(a), x in the simplex.
BuiltModel BuildOptimisticLp(const NormalFormGame& game, int profile_id);

struct OptimisticResult {
  // nullopt when no profile is an NE anywhere on the simplex.
  std::optional<double> value;
  LeaderStrategy strategy;
  int profile = -1;
};

// Best leader commitment when the followers break ties in her favour. One LP
// per followers' profile; ties go to the smallest profile id.
OptimisticResult SolveOptimistic(const NormalFormGame& game);

}  // namespace lfg

#endif  // LFG_OPTIMISTIC_H_
