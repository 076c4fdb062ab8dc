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

#include "lfg/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "lfg/branch_and_bound.h"
#include "lfg/enumeration.h"
#include "lfg/game_io.h"
#include "lfg/restricted_milp.h"

namespace lfg {

NormalFormGame GenerateRandomGame(int num_players, int num_actions,
                                  uint64_t seed) {
  if (num_players < 2) throw UsageError("need at least two players");
  if (num_actions < 1) throw UsageError("need at least one action");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> payoff(1.0, 100.0);
  int64_t size = 1;
  for (int p = 0; p < num_players; ++p) size *= num_actions;
  std::vector<std::vector<double>> tensors(num_players);
  for (auto& t : tensors) {
    t.resize(size);
    for (double& v : t) v = payoff(rng);
  }
  return NormalFormGame(std::vector<int>(num_players, num_actions),
                        std::move(tensors));
}

uint64_t InstanceSeed(uint64_t base_seed, int num_players, int num_actions,
                      int index) {
  std::seed_seq seq{static_cast<uint32_t>(base_seed),
                    static_cast<uint32_t>(base_seed >> 32),
                    static_cast<uint32_t>(num_players),
                    static_cast<uint32_t>(num_actions),
                    static_cast<uint32_t>(index)};
  uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<uint64_t>(words[0]) << 32) | words[1];
}

int WorkerCapFromEnvironment() {
  if (const char* env = std::getenv("LFG_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::optional<double> BenchRow::Gap() const {
  if (!lb || !ub) return std::nullopt;
  return *ub - *lb;
}

namespace {

struct Task {
  int n;
  int m;
  std::string algorithm;
  double big_m;
  int instance;
};

std::string MilpTag(double big_m) { return "milp-M" + FormatDouble(big_m); }

BenchRow RunOne(const BenchConfig& config, const Task& task) {
  BenchRow row;
  row.n = task.n;
  row.m = task.m;
  row.algorithm = task.algorithm == "milp" ? MilpTag(task.big_m) : task.algorithm;
  row.instance = task.instance;
  row.seed = InstanceSeed(config.base_seed, task.n, task.m, task.instance);
  const auto start = std::chrono::steady_clock::now();
  try {
    const NormalFormGame game = GenerateRandomGame(task.n, task.m, row.seed);
    if (task.algorithm == "bnb" || task.algorithm == "enum") {
      SolveReport report;
      if (task.algorithm == "bnb") {
        BnbOptions options;
        options.time_limit_seconds = config.time_limit_seconds;
        report = SolveBnb(game, config.alpha, options);
      } else {
        report = SolveEnum(game, config.alpha);
      }
      row.status = ToString(report.status);
      row.lb = report.supremum;
      row.ub = report.upper_bound;
      row.lbe = report.approx_value;
      row.optimal = report.status != ReportStatus::kIncomplete;
      row.feasible = report.supremum.has_value();
    } else if (task.algorithm == "milp") {
      MilpOptions options;
      options.time_limit_seconds = config.time_limit_seconds;
      const RestrictedResult r = SolveRestrictedMilp(game, task.big_m, options);
      row.status = ToString(r.status);
      row.feasible = r.strategy.has_value();
      row.optimal = r.status == SolveStatus::kOptimal ||
                    r.status == SolveStatus::kInfeasible;
      if (row.feasible) {
        row.lb = r.value;
        if (row.optimal) row.ub = r.value;
      }
    } else {
      throw UsageError("unknown algorithm '" + task.algorithm + "'");
    }
  } catch (const std::exception& e) {
    row.status = "ERROR";
    row.optimal = row.feasible = false;
    row.lb.reset();
    row.ub.reset();
    row.lbe.reset();
  }
  row.time = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                           start)
                 .count();
  return row;
}

auto RowKey(const BenchRow& r) {
  return std::tie(r.n, r.m, r.algorithm, r.instance);
}

}  // namespace

std::vector<BenchRow> RunBench(const BenchConfig& config) {
  std::vector<Task> tasks;
  for (int n : config.players) {
    for (int m : config.actions) {
      for (const auto& algorithm : config.algorithms) {
        const std::vector<double> ms =
            algorithm == "milp" ? config.big_m : std::vector<double>{0.0};
        for (double big_m : ms) {
          for (int i = 0; i < config.instances; ++i) {
            tasks.push_back({n, m, algorithm, big_m, i});
          }
        }
      }
    }
  }
  std::vector<BenchRow> rows(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      rows[i] = RunOne(config, tasks[i]);
    }
  };
  const int workers = std::max(1, std::min<int>(config.workers, tasks.size()));
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return RowKey(a) < RowKey(b);
  });
  return rows;
}

std::vector<BenchSummary> Summarize(const std::vector<BenchRow>& rows) {
  std::vector<BenchSummary> out;
  struct Sums {
    double lb = 0, gap = 0, lbe = 0;
    int lb_n = 0, gap_n = 0, lbe_n = 0, optimal = 0, feasible = 0;
    double time = 0;
  };
  std::vector<Sums> sums;
  std::map<std::tuple<int, int, std::string>, size_t> index;
  for (const auto& r : rows) {
    const auto key = std::make_tuple(r.n, r.m, r.algorithm);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, out.size()).first;
      BenchSummary s;
      s.n = r.n;
      s.m = r.m;
      s.algorithm = r.algorithm;
      out.push_back(std::move(s));
      sums.emplace_back();
    }
    BenchSummary& s = out[it->second];
    Sums& t = sums[it->second];
    ++s.count;
    t.time += r.time;
    if (r.lb) t.lb += *r.lb, ++t.lb_n;
    if (r.Gap()) t.gap += *r.Gap(), ++t.gap_n;
    if (r.lbe) t.lbe += *r.lbe, ++t.lbe_n;
    t.optimal += r.optimal;
    t.feasible += r.feasible;
  }
  for (size_t i = 0; i < out.size(); ++i) {
    BenchSummary& s = out[i];
    const Sums& t = sums[i];
    s.mean_time = t.time / s.count;
    if (t.lb_n) s.mean_lb = t.lb / t.lb_n;
    if (t.gap_n) s.mean_gap = t.gap / t.gap_n;
    if (t.lbe_n) s.mean_lbe = t.lbe / t.lbe_n;
    s.optimal_percent = 100.0 * t.optimal / s.count;
    s.feasible_percent = 100.0 * t.feasible / s.count;
  }
  return out;
}

namespace {

constexpr std::string_view kRawHeader =
    "n,m,algorithm,instance,seed,status,time,lb,ub,gap,lbe,optimal,feasible";

std::string Opt(const std::optional<double>& v) {
  return v ? FormatDouble(*v) : std::string();
}

std::optional<double> ParseOpt(const std::string& field, int line) {
  if (field.empty()) return std::nullopt;
  size_t used = 0;
  double v = 0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != field.size()) throw ParseError(line, "bad number '" + field + "'");
  return v;
}

}  // namespace

std::string WriteRawCsv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << kRawHeader << "\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.m << ',' << r.algorithm << ',' << r.instance << ','
        << r.seed << ',' << r.status << ',' << FormatDouble(r.time) << ','
        << Opt(r.lb) << ',' << Opt(r.ub) << ',' << Opt(r.Gap()) << ','
        << Opt(r.lbe) << ',' << (r.optimal ? 1 : 0) << ','
        << (r.feasible ? 1 : 0) << "\n";
  }
  return out.str();
}

std::vector<BenchRow> ParseRawCsv(std::string_view text) {
  std::vector<BenchRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (number == 1) {
      if (line != kRawHeader) throw ParseError(1, "unexpected CSV header");
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string field;
    std::istringstream fields(line);
    while (std::getline(fields, field, ',')) f.push_back(field);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 13) throw ParseError(number, "expected 13 fields");
    try {
      BenchRow r;
      r.n = std::stoi(f[0]);
      r.m = std::stoi(f[1]);
      r.algorithm = f[2];
      r.instance = std::stoi(f[3]);
      r.seed = std::stoull(f[4]);
      r.status = f[5];
      r.time = *ParseOpt(f[6], number);
      r.lb = ParseOpt(f[7], number);
      r.ub = ParseOpt(f[8], number);
      r.lbe = ParseOpt(f[10], number);
      r.optimal = f[11] == "1";
      r.feasible = f[12] == "1";
      rows.push_back(std::move(r));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(number, "malformed row");
    }
  }
  if (number == 0) throw ParseError(0, "empty CSV");
  return rows;
}

std::string WriteSummaryCsv(const std::vector<BenchSummary>& summary) {
  std::ostringstream out;
  out << "n,m,algorithm,count,time,lb,gap,lbe,opt_percent,feas_percent\n";
  for (const auto& s : summary) {
    out << s.n << ',' << s.m << ',' << s.algorithm << ',' << s.count << ','
        << FormatDouble(s.mean_time) << ',' << Opt(s.mean_lb) << ','
        << Opt(s.mean_gap) << ',' << Opt(s.mean_lbe) << ','
        << FormatDouble(s.optimal_percent) << ','
        << FormatDouble(s.feasible_percent) << "\n";
  }
  return out.str();
}

}  // namespace lfg
