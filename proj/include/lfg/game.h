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

#ifndef LFG_GAME_H_
#define LFG_GAME_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfg {

// Raised when a caller violates a documented precondition (bad index,
// malformed configuration, out-of-range parameter).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Tolerance used by every best-response inequality in the library.
inline constexpr double kNashTolerance = 1e-9;

// Tolerance on the sum of a leader strategy.
inline constexpr double kSimplexTolerance = 1e-9;

// A point of the leader's simplex.
class LeaderStrategy {
 public:
  LeaderStrategy() = default;
  // Throws UsageError unless the entries are nonnegative and sum to one.
  explicit LeaderStrategy(std::vector<double> probabilities);

  // Pure strategy e_action over num_actions actions.
  static LeaderStrategy Pure(int num_actions, int action);
  static LeaderStrategy Uniform(int num_actions);

  // Clips tiny negative entries produced by an LP solve and renormalizes.
  // Throws UsageError if the input is far from the simplex.
  static LeaderStrategy FromSolverOutput(std::span<const double> values,
                                         double tolerance = 1e-6);

  int size() const { return static_cast<int>(probabilities_.size()); }
  double operator[](int i) const { return probabilities_[i]; }
  const std::vector<double>& probabilities() const { return probabilities_; }

 private:
  std::vector<double> probabilities_;
};

// One action per follower, in player order.
struct FollowerProfile {
  std::vector<int> actions;

  friend bool operator==(const FollowerProfile&,
                         const FollowerProfile&) = default;
  friend auto operator<=>(const FollowerProfile&,
                          const FollowerProfile&) = default;
};

// An n-player normal-form game whose last player is the leader.
//
// Each player's payoffs are stored as one flat tensor indexed row-major by
// the full action profile (a_1, ..., a_n), the leader's action varying
// fastest. The payoffs of a fixed followers' profile therefore form a
// contiguous slice of length m_n.
//
// Followers' profiles are also identified by a dense integer id, the
// row-major index of (a_1, ..., a_{n-1}); id order is lexicographic order.
class NormalFormGame {
 public:
  NormalFormGame(std::vector<int> actions,
                 std::vector<std::vector<double>> payoffs);

  int num_players() const { return static_cast<int>(actions_.size()); }
  int num_followers() const { return num_players() - 1; }
  int leader() const { return num_players() - 1; }
  int num_actions(int player) const { return actions_.at(player); }
  int num_leader_actions() const { return actions_.back(); }
  const std::vector<int>& actions() const { return actions_; }
  int num_follower_profiles() const { return num_profiles_; }

  const std::vector<double>& payoffs(int player) const {
    return payoffs_.at(player);
  }

  // Payoffs of `player` over the leader's actions when the followers play
  // profile `profile_id`.
  std::span<const double> Slice(int player, int profile_id) const;

  FollowerProfile Decode(int profile_id) const;
  int Encode(const FollowerProfile& profile) const;
  // Id of the profile obtained by letting `follower` switch to `action`.
  int Deviate(int profile_id, int follower, int action) const;
  // Action of `follower` in profile `profile_id`.
  int ActionOf(int profile_id, int follower) const;

  double Payoff(int player, std::span<const int> full_profile) const;
  double MinPayoff() const;
  double MaxPayoff() const;
  double MaxAbsPayoff() const;

  friend bool operator==(const NormalFormGame&,
                         const NormalFormGame&) = default;

 private:
  void CheckProfileId(int profile_id) const;

  std::vector<int> actions_;
  std::vector<std::vector<double>> payoffs_;
  std::vector<int> follower_strides_;
  int num_profiles_ = 0;
};

// Expected payoff of follower `player` when the followers play `profile_id`
// and the leader commits to `x`.
double ExpectedPayoff(const NormalFormGame& game, int profile_id, int player,
                      const LeaderStrategy& x);
double ExpectedFollowerPayoff(const NormalFormGame& game,
                              const FollowerProfile& profile, int follower,
                              const LeaderStrategy& x);

// Leader's expected utility when the followers play `profile_id`.
double LeaderUtility(const NormalFormGame& game, int profile_id,
                     const LeaderStrategy& x);

// True iff no follower improves her payoff by more than `slack` through a
// unilateral deviation. slack = 0 is exact membership in X(profile), up to
// kNashTolerance.
bool IsPureNe(const NormalFormGame& game, int profile_id,
              const LeaderStrategy& x, double slack = 0.0);
bool IsPureNe(const NormalFormGame& game, const FollowerProfile& profile,
              const LeaderStrategy& x, double slack = 0.0);

// Ids of every followers' profile that is a pure NE at x, ascending.
std::vector<int> EnumeratePureNes(const NormalFormGame& game,
                                  const LeaderStrategy& x);

// f(x): the minimum leader utility over the pure NEs induced by x, or
// nullopt when the followers' game has no pure NE (f = -infinity).
std::optional<double> PessimisticUtility(const NormalFormGame& game,
                                         const LeaderStrategy& x);

// The pure NE at x outside `excluded` (profile ids) with the smallest leader
// utility. Ties go to the smallest id. nullopt if there is none.
std::optional<int> WorstCaseNeExcluding(const NormalFormGame& game,
                                        const LeaderStrategy& x,
                                        std::span<const int> excluded);

}  // namespace lfg

#endif  // LFG_GAME_H_
