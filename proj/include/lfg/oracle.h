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

// Brute-force checks that only use pure-NE inspection: lattice sampling of
// the leader simplex and the configurations realized on a sample.

#ifndef LFG_ORACLE_H_
#define LFG_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "lfg/formulations.h"
#include "lfg/game.h"

namespace lfg {

// All points of the simplex whose coordinates are multiples of 1/N, with
// N = round(1/step).
struct GridSpec {
  double step = 0.01;
  int dimension = 0;
  int64_t max_points = 5'000'000;

  int Denominator() const;
};

// Number of lattice points, or -1 above max_points.
int64_t GridSize(const GridSpec& spec);

// Calls visit on every grid point in lexicographic order of the numerators.
// Throws UsageError when the grid exceeds max_points.
void ForEachGridPoint(const GridSpec& spec,
                      const std::function<void(const LeaderStrategy&)>& visit);

struct GridEstimate {
  std::optional<double> value;  // nullopt: no pure NE at any grid point
  std::optional<LeaderStrategy> argmax;
  int64_t points = 0;
};

// max of f over the grid. Ties keep the first point. `workers` > 1 splits the
// grid across threads; the result does not depend on it.
GridEstimate GridSupEstimate(const NormalFormGame& game, const GridSpec& spec,
                             int workers = 1);

// NE sets (the S+ of the full configuration) realized at the given
// strategies.
std::set<std::vector<int>> RealizedSupports(
    const NormalFormGame& game, const std::vector<LeaderStrategy>& samples);

// Same, on every point of the grid.
std::set<std::vector<int>> ExhaustiveConfigCheck(const NormalFormGame& game,
                                                 const GridSpec& spec);

}  // namespace lfg

#endif  // LFG_ORACLE_H_
