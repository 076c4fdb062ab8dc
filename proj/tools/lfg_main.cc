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

// Command-line front end.
//
//   lfg gen --players 3 --actions 4 --seed 7 --out game.txt
//   lfg solve game.txt --method bnb --alpha 0.1
//   lfg bench --players 3 --actions 4,6 --instances 30 --out results
//   lfg gadget nonexistence --out game.txt
//   lfg export-qcqp game.txt --out model.lp
//
// solve exits with 0 (OPTIMAL), 3 (INCOMPLETE) or 4 (NO_PURE_NE); usage
// errors exit with 1 and malformed input with 2.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lfg/bench.h"
#include "lfg/branch_and_bound.h"
#include "lfg/enumeration.h"
#include "lfg/gadgets.h"
#include "lfg/game_io.h"
#include "lfg/optimistic.h"
#include "lfg/oracle.h"
#include "lfg/restricted_milp.h"

namespace {

using lfg::FormatDouble;
using nlohmann::json;

constexpr int kExitOptimal = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitIncomplete = 3;
constexpr int kExitNoPureNe = 4;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lfg::UsageError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw lfg::UsageError("cannot open " + path + " for writing");
  out << text;
}

json ToJson(const lfg::LeaderStrategy& x) { return x.probabilities(); }

json ToJson(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string Value(const std::optional<double>& v) {
  return v ? FormatDouble(*v) : std::string("-inf");
}

std::string Strategy(const lfg::LeaderStrategy& x) {
  std::string out = "(";
  for (int k = 0; k < x.size(); ++k) {
    if (k) out += ", ";
    out += FormatDouble(x[k]);
  }
  return out + ")";
}

int ExitFor(lfg::ReportStatus status) {
  switch (status) {
    case lfg::ReportStatus::kOptimal:
      return kExitOptimal;
    case lfg::ReportStatus::kIncomplete:
      return kExitIncomplete;
    case lfg::ReportStatus::kNoPureNe:
      return kExitNoPureNe;
  }
  return kExitUsage;
}

struct SolveArgs {
  std::string game;
  std::string method = "bnb";
  double alpha = 0.1;
  double big_m = lfg::kDefaultBigM;
  double time_limit = 60.0;
  double grid_step = 0.0;
  bool json = false;
  bool trace = false;
};

int RunSolve(const SolveArgs& args) {
  const lfg::NormalFormGame game = lfg::LoadGameFile(args.game);
  json report;
  report["method"] = args.method;
  std::ostringstream text;
  int exit_code = kExitOptimal;

  if (args.method == "optimistic") {
    const auto r = lfg::SolveOptimistic(game);
    report["status"] = r.value ? "OPTIMAL" : "NO_PURE_NE";
    report["value"] = ToJson(r.value);
    if (r.value) {
      report["strategy"] = ToJson(r.strategy);
      report["profile"] = r.profile;
      text << "optimistic value " << FormatDouble(*r.value) << " at x = "
           << Strategy(r.strategy) << "\n";
    } else {
      text << "no followers' profile is a pure NE for any commitment\n";
      exit_code = kExitNoPureNe;
    }
  } else if (args.method == "milp") {
    lfg::MilpOptions options;
    options.time_limit_seconds = args.time_limit;
    const auto r = lfg::SolveRestrictedMilp(game, args.big_m, options);
    report["status"] = lfg::ToString(r.status);
    report["big_m"] = args.big_m;
    report["seconds"] = r.seconds;
    if (r.strategy) {
      const auto f = lfg::PessimisticUtility(game, *r.strategy);
      report["value"] = r.value;
      report["strategy"] = ToJson(*r.strategy);
      report["f"] = ToJson(f);
      text << "restricted value " << FormatDouble(r.value) << " (M = "
           << FormatDouble(args.big_m) << ") at x = " << Strategy(*r.strategy)
           << ", f(x) = " << Value(f) << "\n";
    } else {
      text << "restricted model: " << lfg::ToString(r.status) << "\n";
    }
    if (r.status == lfg::SolveStatus::kLimitReached) exit_code = kExitIncomplete;
    if (r.status == lfg::SolveStatus::kInfeasible) exit_code = kExitNoPureNe;
  } else if (args.method == "enum" || args.method == "bnb") {
    lfg::SolveReport r;
    if (args.method == "enum") {
      r = lfg::SolveEnum(game, args.alpha);
    } else {
      lfg::BnbOptions options;
      options.time_limit_seconds = args.time_limit;
      if (args.trace) {
        options.observer = [](const lfg::BnbEvent& e) {
          std::cerr << lfg::FormatEvent(e) << "\n";
        };
      }
      r = lfg::SolveBnb(game, args.alpha, options);
    }
    report["status"] = lfg::ToString(r.status);
    report["supremum"] = ToJson(r.supremum);
    report["upper_bound"] = ToJson(r.upper_bound);
    report["attained"] = r.attained;
    report["epsilon"] = r.epsilon;
    report["alpha"] = r.alpha;
    if (r.supremum) {
      report["witness"] = ToJson(r.witness);
      report["s_plus"] = r.best.s_plus;
    }
    if (r.approx_strategy) {
      report["approx_strategy"] = ToJson(*r.approx_strategy);
      report["approx_value"] = ToJson(r.approx_value);
    }
    report["stats"] = {{"configurations", r.stats.configurations},
                       {"nodes_created", r.stats.nodes_created},
                       {"nodes_explored", r.stats.nodes_explored},
                       {"approx_nodes", r.stats.approx_nodes},
                       {"seconds", r.stats.seconds}};
    text << "status " << lfg::ToString(r.status) << "\n";
    if (r.supremum) {
      text << "supremum " << FormatDouble(*r.supremum)
           << (r.attained ? ", attained" : ", NOT attained") << " at x = "
           << Strategy(r.witness) << "\n";
    } else {
      text << "supremum -inf\n";
    }
    if (r.status == lfg::ReportStatus::kIncomplete) {
      text << "upper bound " << Value(r.upper_bound) << "\n";
    }
    if (r.approx_strategy) {
      text << "alpha-approximate strategy " << Strategy(*r.approx_strategy)
           << " with f = " << Value(r.approx_value) << " (alpha "
           << FormatDouble(r.alpha) << ")\n";
    }
    exit_code = ExitFor(r.status);
  } else {
    throw lfg::UsageError("unknown method '" + args.method + "'");
  }

  if (args.grid_step > 0.0) {
    lfg::GridSpec spec;
    spec.step = args.grid_step;
    const auto g = lfg::GridSupEstimate(game, spec,
                                        lfg::WorkerCapFromEnvironment());
    report["grid"] = {{"step", args.grid_step},
                      {"value", ToJson(g.value)},
                      {"points", g.points}};
    text << "grid estimate " << Value(g.value) << " over " << g.points
         << " points\n";
  }
  if (args.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return exit_code;
}

lfg::NormalFormGame MakeGadget(const std::string& kind, double mu, double eps,
                               const std::string& input, double b, double c) {
  if (kind == "nonexistence") return lfg::MakeNonexistenceGame();
  if (kind == "arbitrarily") return lfg::MakeArbitrarilyWorseGame(mu);
  if (kind == "twosat") return lfg::MakeTwoSatClauseGame(eps);
  if (kind == "indset") {
    if (input.empty()) throw lfg::UsageError("indset needs --input GRAPH");
    const auto graph = lfg::ParseEdgeList(ReadFile(input));
    if (b > 0.0 || c > 0.0) return lfg::MakeIndsetGame(graph, b, c);
    return lfg::MakeIndsetGame(graph);
  }
  if (kind == "3sat") {
    if (input.empty()) throw lfg::UsageError("3sat needs --input CNF");
    return lfg::Make3SatGame(lfg::ParseDimacs(ReadFile(input)), eps);
  }
  throw lfg::UsageError("unknown gadget '" + kind + "'");
}

std::vector<std::string> Split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leader-follower games with pure-NE followers"};
  app.require_subcommand(1);

  int players = 3, actions = 4;
  uint64_t seed = 0;
  std::string out;
  auto* gen = app.add_subcommand("gen", "Random game with U[1,100] payoffs");
  gen->add_option("--players", players, "Player count n")->check(CLI::Range(2, 16));
  gen->add_option("--actions", actions, "Actions per player m")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out, "Output path (stdout when omitted)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a game file");
  solve_cmd->add_option("game", solve.game, "Game file")->required();
  solve_cmd->add_option("--method", solve.method, "optimistic, enum, bnb or milp")
      ->check(CLI::IsMember({"optimistic", "enum", "bnb", "milp"}));
  solve_cmd->add_option("--alpha", solve.alpha, "Additive approximation")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--big-m", solve.big_m, "Dual bound M for milp")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--time-limit", solve.time_limit, "Seconds");
  solve_cmd->add_option("--grid-step", solve.grid_step,
                        "Also report the grid estimate with this step");
  solve_cmd->add_flag("--json", solve.json, "Print the report as JSON");
  solve_cmd->add_flag("--trace", solve.trace, "Search trace on stderr (bnb)");

  lfg::BenchConfig bench;
  std::string bench_players = "3", bench_actions = "4", algorithms = "bnb",
              big_ms = "100";
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark sweep over random games");
  bench_cmd->add_option("--players", bench_players, "Comma-separated n values");
  bench_cmd->add_option("--actions", bench_actions, "Comma-separated m values");
  bench_cmd->add_option("--instances", bench.instances, "Instances per cell");
  bench_cmd->add_option("--algorithms", algorithms, "Comma-separated: bnb, enum, milp");
  bench_cmd->add_option("--big-m", big_ms, "Comma-separated M values for milp");
  bench_cmd->add_option("--time-limit", bench.time_limit_seconds, "Seconds per instance");
  bench_cmd->add_option("--alpha", bench.alpha, "Additive approximation");
  bench_cmd->add_option("--seed", bench.base_seed, "Base seed");
  bench_cmd->add_option("--out", out, "Prefix for <out>_raw.csv and <out>_summary.csv");

  std::string kind, input;
  double mu = 10.0, eps = 0.1, b = 0.0, c = 0.0;
  auto* gadget = app.add_subcommand("gadget", "Construct an example or reduction game");
  gadget->add_option("kind", kind, "nonexistence, arbitrarily, twosat, indset, 3sat")
      ->required();
  gadget->add_option("--mu", mu, "mu for arbitrarily");
  gadget->add_option("--eps", eps, "eps for twosat and 3sat");
  gadget->add_option("--input", input, "Edge list (indset) or DIMACS file (3sat)");
  gadget->add_option("--b", b, "b for indset");
  gadget->add_option("--c", c, "c for indset");
  gadget->add_option("--out", out, "Output path (stdout when omitted)");

  std::string qcqp_game;
  auto* qcqp = app.add_subcommand("export-qcqp", "Write the exact QCQP of a 3-player game");
  qcqp->add_option("game", qcqp_game, "Game file")->required();
  qcqp->add_option("--out", out, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests come through here with a zero exit code.
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      WriteOutput(out, lfg::WriteGame(lfg::GenerateRandomGame(players, actions, seed)));
    } else if (*solve_cmd) {
      return RunSolve(solve);
    } else if (*bench_cmd) {
      for (const auto& s : Split(bench_players)) bench.players.push_back(std::stoi(s));
      bench.players.erase(bench.players.begin());
      for (const auto& s : Split(bench_actions)) bench.actions.push_back(std::stoi(s));
      bench.actions.erase(bench.actions.begin());
      bench.algorithms = Split(algorithms);
      bench.big_m.clear();
      for (const auto& s : Split(big_ms)) bench.big_m.push_back(std::stod(s));
      bench.workers = lfg::WorkerCapFromEnvironment();
      const auto rows = lfg::RunBench(bench);
      const auto summary = lfg::Summarize(rows);
      if (out.empty()) {
        std::cout << lfg::WriteSummaryCsv(summary);
      } else {
        WriteOutput(out + "_raw.csv", lfg::WriteRawCsv(rows));
        WriteOutput(out + "_summary.csv", lfg::WriteSummaryCsv(summary));
      }
    } else if (*gadget) {
      WriteOutput(out, lfg::WriteGame(MakeGadget(kind, mu, eps, input, b, c)));
    } else if (*qcqp) {
      const auto game = lfg::LoadGameFile(qcqp_game);
      if (out.empty()) {
        std::cout << lfg::WriteQcqp(lfg::BuildQcqp(game));
      } else {
        lfg::ExportQcqp(game, out);
      }
    }
  } catch (const lfg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
