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

#include "lfg/game.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace lfg {

LeaderStrategy::LeaderStrategy(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) {
    throw UsageError("leader strategy must have at least one action");
  }
  double sum = 0.0;
  for (double p : probabilities_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw UsageError("leader strategy has a negative or non-finite entry");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    throw UsageError("leader strategy does not sum to one");
  }
}

LeaderStrategy LeaderStrategy::Pure(int num_actions, int action) {
  if (action < 0 || action >= num_actions) {
    throw UsageError("pure strategy action out of range");
  }
  std::vector<double> p(num_actions, 0.0);
  p[action] = 1.0;
  return LeaderStrategy(std::move(p));
}

LeaderStrategy LeaderStrategy::Uniform(int num_actions) {
  if (num_actions <= 0) throw UsageError("uniform strategy needs actions");
  return LeaderStrategy(std::vector<double>(num_actions, 1.0 / num_actions));
}

LeaderStrategy LeaderStrategy::FromSolverOutput(std::span<const double> values,
                                                double tolerance) {
  std::vector<double> p(values.begin(), values.end());
  double sum = 0.0;
  for (double& v : p) {
    if (v < -tolerance) throw UsageError("solver strategy entry is negative");
    v = std::max(v, 0.0);
    sum += v;
  }
  if (std::abs(sum - 1.0) > tolerance * std::max<size_t>(1, p.size())) {
    throw UsageError("solver strategy is off the simplex");
  }
  for (double& v : p) v /= sum;
  return LeaderStrategy(std::move(p));
}

NormalFormGame::NormalFormGame(std::vector<int> actions,
                               std::vector<std::vector<double>> payoffs)
    : actions_(std::move(actions)), payoffs_(std::move(payoffs)) {
  if (actions_.size() < 2) {
    throw UsageError("a game needs a leader and at least one follower");
  }
  if (payoffs_.size() != actions_.size()) {
    throw UsageError("one payoff tensor per player is required");
  }
  long long total = 1;
  for (int m : actions_) {
    if (m < 1) throw UsageError("every player needs at least one action");
    total *= m;
    if (total > (1LL << 28)) throw UsageError("game is too large");
  }
  for (const auto& tensor : payoffs_) {
    if (static_cast<long long>(tensor.size()) != total) {
      throw UsageError("payoff tensor size does not match the action counts");
    }
    for (double v : tensor) {
      if (!std::isfinite(v)) throw UsageError("payoffs must be finite");
    }
  }
  const int followers = num_followers();
  follower_strides_.assign(followers, 1);
  for (int p = followers - 2; p >= 0; --p) {
    follower_strides_[p] = follower_strides_[p + 1] * actions_[p + 1];
  }
  num_profiles_ = static_cast<int>(total / actions_.back());
}

void NormalFormGame::CheckProfileId(int profile_id) const {
  if (profile_id < 0 || profile_id >= num_profiles_) {
    throw UsageError("followers' profile id out of range");
  }
}

std::span<const double> NormalFormGame::Slice(int player,
                                              int profile_id) const {
  CheckProfileId(profile_id);
  const auto& tensor = payoffs_.at(player);
  const int m = num_leader_actions();
  return std::span<const double>(tensor).subspan(
      static_cast<size_t>(profile_id) * m, m);
}

FollowerProfile NormalFormGame::Decode(int profile_id) const {
  CheckProfileId(profile_id);
  FollowerProfile profile;
  profile.actions.resize(num_followers());
  for (int p = 0; p < num_followers(); ++p) {
    profile.actions[p] = (profile_id / follower_strides_[p]) % actions_[p];
  }
  return profile;
}

int NormalFormGame::Encode(const FollowerProfile& profile) const {
  if (static_cast<int>(profile.actions.size()) != num_followers()) {
    throw UsageError("profile has the wrong number of followers");
  }
  int id = 0;
  for (int p = 0; p < num_followers(); ++p) {
    const int a = profile.actions[p];
    if (a < 0 || a >= actions_[p]) {
      throw UsageError("profile action out of range for follower " +
                       std::to_string(p));
    }
    id += a * follower_strides_[p];
  }
  return id;
}

int NormalFormGame::ActionOf(int profile_id, int follower) const {
  return (profile_id / follower_strides_.at(follower)) % actions_[follower];
}

int NormalFormGame::Deviate(int profile_id, int follower, int action) const {
  CheckProfileId(profile_id);
  if (follower < 0 || follower >= num_followers()) {
    throw UsageError("follower index out of range");
  }
  if (action < 0 || action >= actions_[follower]) {
    throw UsageError("deviation action out of range");
  }
  const int current = ActionOf(profile_id, follower);
  return profile_id + (action - current) * follower_strides_[follower];
}

double NormalFormGame::Payoff(int player,
                              std::span<const int> full_profile) const {
  if (static_cast<int>(full_profile.size()) != num_players()) {
    throw UsageError("full profile has the wrong length");
  }
  size_t index = 0;
  for (int p = 0; p < num_players(); ++p) {
    if (full_profile[p] < 0 || full_profile[p] >= actions_[p]) {
      throw UsageError("full profile action out of range");
    }
    index = index * actions_[p] + full_profile[p];
  }
  return payoffs_.at(player)[index];
}

double NormalFormGame::MinPayoff() const {
  double lo = payoffs_[0][0];
  for (const auto& t : payoffs_) lo = std::min(lo, *std::min_element(t.begin(), t.end()));
  return lo;
}

double NormalFormGame::MaxPayoff() const {
  double hi = payoffs_[0][0];
  for (const auto& t : payoffs_) hi = std::max(hi, *std::max_element(t.begin(), t.end()));
  return hi;
}

double NormalFormGame::MaxAbsPayoff() const {
  return std::max(std::abs(MinPayoff()), std::abs(MaxPayoff()));
}

namespace {

double Dot(std::span<const double> slice, const LeaderStrategy& x) {
  double sum = 0.0;
  for (size_t k = 0; k < slice.size(); ++k) sum += slice[k] * x[k];
  return sum;
}

void CheckStrategy(const NormalFormGame& game, const LeaderStrategy& x) {
  if (x.size() != game.num_leader_actions()) {
    throw UsageError("leader strategy has the wrong dimension");
  }
}

}  // namespace

double ExpectedPayoff(const NormalFormGame& game, int profile_id, int player,
                      const LeaderStrategy& x) {
  CheckStrategy(game, x);
  if (player < 0 || player >= game.num_players()) {
    throw UsageError("player index out of range");
  }
  return Dot(game.Slice(player, profile_id), x);
}

double ExpectedFollowerPayoff(const NormalFormGame& game,
                              const FollowerProfile& profile, int follower,
                              const LeaderStrategy& x) {
  if (follower < 0 || follower >= game.num_followers()) {
    throw UsageError("follower index out of range");
  }
  return ExpectedPayoff(game, game.Encode(profile), follower, x);
}

double LeaderUtility(const NormalFormGame& game, int profile_id,
                     const LeaderStrategy& x) {
  return ExpectedPayoff(game, profile_id, game.leader(), x);
}

bool IsPureNe(const NormalFormGame& game, int profile_id,
              const LeaderStrategy& x, double slack) {
  CheckStrategy(game, x);
  for (int p = 0; p < game.num_followers(); ++p) {
    const double current = Dot(game.Slice(p, profile_id), x);
    const int own = game.ActionOf(profile_id, p);
    for (int a = 0; a < game.num_actions(p); ++a) {
      if (a == own) continue;
      const double deviation =
          Dot(game.Slice(p, game.Deviate(profile_id, p, a)), x);
      if (deviation - current > slack + kNashTolerance) return false;
    }
  }
  return true;
}

bool IsPureNe(const NormalFormGame& game, const FollowerProfile& profile,
              const LeaderStrategy& x, double slack) {
  return IsPureNe(game, game.Encode(profile), x, slack);
}

std::vector<int> EnumeratePureNes(const NormalFormGame& game,
                                  const LeaderStrategy& x) {
  std::vector<int> nes;
  for (int id = 0; id < game.num_follower_profiles(); ++id) {
    if (IsPureNe(game, id, x)) nes.push_back(id);
  }
  return nes;
}

std::optional<double> PessimisticUtility(const NormalFormGame& game,
                                         const LeaderStrategy& x) {
  const auto worst = WorstCaseNeExcluding(game, x, {});
  if (!worst) return std::nullopt;
  return LeaderUtility(game, *worst, x);
}

std::optional<int> WorstCaseNeExcluding(const NormalFormGame& game,
                                        const LeaderStrategy& x,
                                        std::span<const int> excluded) {
  std::optional<int> best;
  double best_value = 0.0;
  for (int id : EnumeratePureNes(game, x)) {
    if (std::find(excluded.begin(), excluded.end(), id) != excluded.end()) continue;
    const double value = LeaderUtility(game, id, x);
    if (!best || value < best_value - 1e-12) {
      best = id;
      best_value = value;
    }
  }
  return best;
}

}  // namespace lfg
