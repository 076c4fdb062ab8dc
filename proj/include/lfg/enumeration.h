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

#ifndef LFG_ENUMERATION_H_
#define LFG_ENUMERATION_H_

#include <functional>
#include <vector>

#include "lfg/formulations.h"
#include "lfg/game.h"
#include "lfg/solve_report.h"

namespace lfg {

// Raised when a game is too large for exhaustive enumeration.
class SizeLimitError : public UsageError {
 public:
  using UsageError::UsageError;
};

struct EnumOptions {
  // Largest number of followers' profiles accepted.
  int max_profiles = 16;
  FormulationOptions formulation;
};

// sup f by visiting every full outcome configuration (S+, A_F \ S+) whose
// region is nonempty, maximizing the worst S+ utility over each. When the
// best configuration has eps* = 0 an alpha-approximate strategy is computed
// on it.
SolveReport SolveEnum(const NormalFormGame& game, double alpha,
                      const EnumOptions& options = {});

// Every S+ whose closed region X(S+) is nonempty, in depth-first order
// (ascending ids within a set). The empty set comes first. Supersets of a
// set with an empty closed region are never generated.
void ForEachCandidateSupport(const NormalFormGame& game,
                             const std::function<void(const std::vector<int>&)>& visit);

}  // namespace lfg

#endif  // LFG_ENUMERATION_H_
