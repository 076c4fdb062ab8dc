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

#ifndef LFG_BENCH_H_
#define LFG_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lfg/game.h"

namespace lfg {

// Payoffs i.i.d. uniform on [1, 100], fully determined by the seed.
NormalFormGame GenerateRandomGame(int num_players, int num_actions,
                                  uint64_t seed);

// Seed of instance `index` in the (n, m) cell.
uint64_t InstanceSeed(uint64_t base_seed, int num_players, int num_actions,
                      int index);

// Reads the worker cap from LFG_WORKERS, defaulting to the hardware
// concurrency.
int WorkerCapFromEnvironment();

struct BenchConfig {
  std::vector<int> players = {3};
  std::vector<int> actions = {4};
  int instances = 30;
  // Any of "bnb", "enum", "milp".
  std::vector<std::string> algorithms = {"bnb"};
  std::vector<double> big_m = {100.0};
  double time_limit_seconds = 60.0;
  double alpha = 0.1;
  uint64_t base_seed = 0;
  int workers = 1;
};

struct BenchRow {
  int n = 0;
  int m = 0;
  std::string algorithm;  // bnb, enum, or milp-M<value>
  int instance = 0;
  uint64_t seed = 0;
  std::string status;
  double time = 0.0;
  std::optional<double> lb;
  std::optional<double> ub;
  // f of the returned alpha-approximate strategy (bnb, enum).
  std::optional<double> lbe;
  bool optimal = false;
  bool feasible = false;

  std::optional<double> Gap() const;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchSummary {
  int n = 0;
  int m = 0;
  std::string algorithm;
  int count = 0;
  double mean_time = 0.0;
  std::optional<double> mean_lb;   // over rows with a value
  std::optional<double> mean_gap;  // over rows with both bounds
  std::optional<double> mean_lbe;
  double optimal_percent = 0.0;
  double feasible_percent = 0.0;
};

// Runs every (n, m, algorithm, instance) of the sweep. Failures become rows
// with status ERROR. Rows come back sorted by (n, m, algorithm, instance).
std::vector<BenchRow> RunBench(const BenchConfig& config);

// Per (n, m, algorithm) averages, in row order.
std::vector<BenchSummary> Summarize(const std::vector<BenchRow>& rows);

std::string WriteRawCsv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> ParseRawCsv(std::string_view text);
std::string WriteSummaryCsv(const std::vector<BenchSummary>& summary);

}  // namespace lfg

#endif  // LFG_BENCH_H_
