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

// Brute-force reference implementations shared by the tests. Nothing here
// calls into the solver code paths it is used to check: payoffs are summed
// from raw tensor entries, equilibria are found by explicit deviation loops,
// and graphs are handled by exhaustive search.

#ifndef LFG_TESTS_SUPPORT_ORACLES_H_
#define LFG_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lfg/gadgets.h"
#include "lfg/game.h"
#include "lfg/linear_model.h"

namespace lfg::testing {

// sum_k U_player(profile, k) x_k, read entry by entry.
double NaivePayoff(const NormalFormGame& game, const std::vector<int>& profile,
                   int player, const std::vector<double>& x);

// All follower profiles (as action vectors) that are pure NEs at x, in
// lexicographic order. A deviation must gain more than `tolerance`.
std::vector<std::vector<int>> NaiveNes(const NormalFormGame& game,
                                       const std::vector<double>& x,
                                       double tolerance = 1e-9);

// Minimum leader payoff over NaiveNes, or nullopt.
std::optional<double> NaivePessimistic(const NormalFormGame& game,
                                       const std::vector<double>& x);

// All follower profiles in lexicographic order.
std::vector<std::vector<int>> AllProfiles(const NormalFormGame& game);

// Uniform point of the simplex.
std::vector<double> RandomSimplexPoint(std::mt19937_64& rng, int m);

// (1 - rho, rho).
std::vector<double> Rho(double rho);

// Max over every grid point k/d of the simplex of NaivePessimistic.
std::optional<double> NaiveGridMax(const NormalFormGame& game, int denominator);

// A random feasible bounded model: `binaries` binary columns followed by
// `continuous` columns in [0, 10], `rows` inequality rows satisfied by a
// planted point, and a random objective.
LinearModel RandomMixedModel(std::mt19937_64& rng, int binaries,
                             int continuous, int rows);

// Optimum of `model` by enumerating every binary assignment and solving the
// remaining LP. nullopt if no assignment is feasible.
std::optional<double> BruteForceMilp(const LinearModel& model);

// Every graph on r labelled vertices, one per edge subset.
std::vector<UndirectedGraph> AllLabelledGraphs(int r);

// One representative per isomorphism class on r vertices.
std::vector<UndirectedGraph> NonIsomorphicGraphs(int r);

// Size of a largest independent set, by subset enumeration.
int MaxIndependentSetSize(const UndirectedGraph& graph);

// Reads a whole file.
std::string ReadFile(const std::string& path);

}  // namespace lfg::testing

#endif  // LFG_TESTS_SUPPORT_ORACLES_H_
