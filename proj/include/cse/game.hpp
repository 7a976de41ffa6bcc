// Copyright 2026 The CSE Toolkit Authors
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

#ifndef CSE_GAME_HPP_
#define CSE_GAME_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cse/rational.hpp"

namespace cse {

using Action = int;
// One action index per player, in player order.
using ActionProfile = std::vector<Action>;
using PayoffVector = std::vector<Rational>;

// A finite n-person normal-form game with exact nonnegative payoffs.
//
// Profiles are addressed by a mixed-radix index with player 0 as the most
// significant digit (the last player's action varies fastest). For player i
// the opponent profile a_{-i} is indexed the same way over the remaining
// players in ascending order. Players are 0-based internally and rendered
// 1-based in messages.
class Game {
 public:
  // Throws ArityMismatch on structural problems and NegativePayoff if any
  // payoff is below zero.
  Game(std::vector<std::string> players,
       std::vector<std::vector<std::string>> actions,
       std::vector<PayoffVector> payoffs, std::string title = {});

  // Builds a game with default names P1.., a1.. for quick construction.
  static Game from_sizes(const std::vector<int>& num_actions,
                         std::vector<PayoffVector> payoffs);

  int num_players() const { return static_cast<int>(actions_.size()); }
  int num_actions(int player) const {
    return static_cast<int>(actions_[player].size());
  }
  std::size_t num_profiles() const { return payoffs_.size(); }
  std::size_t num_opponent_profiles(int player) const {
    return num_profiles() / num_actions(player);
  }

  const std::string& title() const { return title_; }
  const std::string& player_name(int player) const { return players_[player]; }
  const std::vector<std::string>& player_names() const { return players_; }
  const std::string& action_name(int player, Action action) const {
    return actions_[player][action];
  }
  const std::vector<std::vector<std::string>>& action_names() const {
    return actions_;
  }

  std::size_t index_of(const ActionProfile& profile) const;
  ActionProfile profile_at(std::size_t index) const;
  Action action_at(int player, std::size_t index) const {
    return static_cast<Action>((index / strides_[player]) %
                               actions_[player].size());
  }

  // Index of a_{-player} for the full profile at `index`.
  std::size_t opponent_index(int player, std::size_t index) const {
    const std::size_t stride = strides_[player];
    const std::size_t block = stride * actions_[player].size();
    return (index / block) * stride + index % stride;
  }
  std::size_t opponent_index(int player, const ActionProfile& profile) const {
    return opponent_index(player, index_of(profile));
  }
  // Full profile index of (own, a_{-player}).
  std::size_t combine(int player, Action own,
                      std::size_t opponent_index) const {
    const std::size_t stride = strides_[player];
    return ((opponent_index / stride) * actions_[player].size() + own) *
               stride +
           opponent_index % stride;
  }
  // Opponent actions in ascending player order (length n-1).
  ActionProfile opponent_profile_at(int player,
                                    std::size_t opponent_index) const;
  std::size_t opponent_index_of(int player,
                                const ActionProfile& opponents) const;

  const PayoffVector& payoff(std::size_t index) const {
    return payoffs_[index];
  }
  const PayoffVector& payoff(const ActionProfile& profile) const {
    return payoffs_[index_of(profile)];
  }
  const Rational& payoff(int player, std::size_t index) const {
    return payoffs_[index][player];
  }
  const std::vector<PayoffVector>& payoffs() const { return payoffs_; }

  // Largest payoff of `player` over all profiles.
  const Rational& max_payoff(int player) const { return max_payoff_[player]; }

  // "(x,A,L)" using action names.
  std::string profile_label(std::size_t index) const;

  friend bool operator==(const Game& lhs, const Game& rhs);

 private:
  std::string title_;
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> actions_;
  std::vector<PayoffVector> payoffs_;
  std::vector<std::size_t> strides_;
  std::vector<Rational> max_payoff_;
};

// Returns the game with every payoff of player i shifted by -min_a u_i(a)
// when that minimum is negative. This changes the game: the disagreement
// payoff is a fixed 0, so relative positions of agreements and
// disagreements move. Never applied implicitly.
Game shift_to_nonnegative(std::vector<std::string> players,
                          std::vector<std::vector<std::string>> actions,
                          std::vector<PayoffVector> payoffs,
                          std::string title = {});

// argmax_{a_i} u_i(a_i, a_{-i}), ascending action order, never empty.
std::vector<Action> best_responses(const Game& game, int player,
                                   std::size_t opponent_index);
std::vector<Action> best_responses(const Game& game, int player,
                                   const ActionProfile& opponents);

struct Maximin {
  Rational value;
  std::vector<Action> witnesses;
};

// max_{a_i} min_{a_{-i}} u_i(a_i, a_{-i}) over pure actions.
Maximin pure_maximin(const Game& game, int player);

// u_i >= v_i for every component.
bool pareto_dominates_weakly(const PayoffVector& u, const PayoffVector& v);

// Weak dominance with at least one strict component.
bool pareto_dominates_strictly(const PayoffVector& u, const PayoffVector& v);

bool is_pareto_optimal(const Game& game, std::size_t index);

struct ParetoMaxProfile {
  std::size_t profile;
  int player;
};

// A Pareto-optimal profile at which some player attains their global
// maximum. Picks the lowest player id (always player 0), then among that
// player's maximisers the lexicographically largest payoff vector, then the
// smallest profile index. Lexicographic maximality over the full vector
// rules out any strict Pareto improvement.
ParetoMaxProfile pareto_optimal_with_max_player(const Game& game);

// Pure Nash equilibria in ascending profile order.
std::vector<std::size_t> pure_nash_equilibria(const Game& game);

}  // namespace cse

#endif  // CSE_GAME_HPP_
