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

#include "cse/game.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cse/error.hpp"

namespace cse {

Game::Game(std::vector<std::string> players,
           std::vector<std::vector<std::string>> actions,
           std::vector<PayoffVector> payoffs, std::string title)
    : title_(std::move(title)),
      players_(std::move(players)),
      actions_(std::move(actions)),
      payoffs_(std::move(payoffs)) {
  const std::size_t n = actions_.size();
  if (n < 2) {
    throw ArityMismatch("a game needs at least two players, got " +
                        std::to_string(n));
  }
  if (players_.size() != n) {
    throw ArityMismatch(std::to_string(players_.size()) +
                        " player names for " + std::to_string(n) +
                        " action lists");
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (actions_[i].empty()) {
      throw ArityMismatch("player " + std::to_string(i + 1) +
                          " has no actions");
    }
    total *= actions_[i].size();
  }
  if (payoffs_.size() != total) {
    throw ArityMismatch("expected " + std::to_string(total) +
                        " payoff vectors, got " +
                        std::to_string(payoffs_.size()));
  }
  strides_.assign(n, 1);
  for (std::size_t i = n - 1; i > 0; --i) {
    strides_[i - 1] = strides_[i] * actions_[i].size();
  }
  for (std::size_t k = 0; k < total; ++k) {
    if (payoffs_[k].size() != n) {
      throw ArityMismatch("payoff vector " + std::to_string(k) + " has " +
                          std::to_string(payoffs_[k].size()) +
                          " entries, expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (payoffs_[k][i] < 0) {
        throw NegativePayoff(profile_label(k), static_cast<int>(i));
      }
    }
  }
  max_payoff_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    max_payoff_[i] = payoffs_[0][i];
    for (const auto& u : payoffs_) max_payoff_[i] = std::max(max_payoff_[i], u[i]);
  }
}

Game Game::from_sizes(const std::vector<int>& num_actions,
                      std::vector<PayoffVector> payoffs) {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actions;
  for (std::size_t i = 0; i < num_actions.size(); ++i) {
    players.push_back("P" + std::to_string(i + 1));
    std::vector<std::string> names;
    for (int a = 0; a < num_actions[i]; ++a) {
      names.push_back("a" + std::to_string(a + 1));
    }
    actions.push_back(std::move(names));
  }
  return Game(std::move(players), std::move(actions), std::move(payoffs));
}

std::size_t Game::index_of(const ActionProfile& profile) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    index += static_cast<std::size_t>(profile[i]) * strides_[i];
  }
  return index;
}

ActionProfile Game::profile_at(std::size_t index) const {
  ActionProfile profile(actions_.size());
  for (int i = 0; i < num_players(); ++i) profile[i] = action_at(i, index);
  return profile;
}

ActionProfile Game::opponent_profile_at(int player,
                                        std::size_t opponent_index) const {
  ActionProfile full = profile_at(combine(player, 0, opponent_index));
  full.erase(full.begin() + player);
  return full;
}

std::size_t Game::opponent_index_of(int player,
                                    const ActionProfile& opponents) const {
  ActionProfile full(opponents.begin(), opponents.end());
  full.insert(full.begin() + player, 0);
  return opponent_index(player, index_of(full));
}

std::string Game::profile_label(std::size_t index) const {
  std::string label = "(";
  for (int i = 0; i < num_players(); ++i) {
    if (i > 0) label += ",";
    label += actions_[i][action_at(i, index)];
  }
  return label + ")";
}

bool operator==(const Game& lhs, const Game& rhs) {
  return lhs.title_ == rhs.title_ && lhs.players_ == rhs.players_ &&
         lhs.actions_ == rhs.actions_ && lhs.payoffs_ == rhs.payoffs_;
}

Game shift_to_nonnegative(std::vector<std::string> players,
                          std::vector<std::vector<std::string>> actions,
                          std::vector<PayoffVector> payoffs,
                          std::string title) {
  if (!payoffs.empty()) {
    for (std::size_t i = 0; i < payoffs.front().size(); ++i) {
      Rational low = payoffs.front()[i];
      for (const auto& u : payoffs) {
        if (i < u.size()) low = std::min(low, u[i]);
      }
      if (low < 0) {
        for (auto& u : payoffs) {
          if (i < u.size()) u[i] -= low;
        }
      }
    }
  }
  return Game(std::move(players), std::move(actions), std::move(payoffs),
              std::move(title));
}

std::vector<Action> best_responses(const Game& game, int player,
                                   std::size_t opponent_index) {
  std::vector<Action> best;
  const Rational* best_value = nullptr;
  for (Action a = 0; a < game.num_actions(player); ++a) {
    const Rational& v =
        game.payoff(player, game.combine(player, a, opponent_index));
    if (best_value == nullptr || v > *best_value) {
      best.assign(1, a);
      best_value = &v;
    } else if (v == *best_value) {
      best.push_back(a);
    }
  }
  return best;
}

std::vector<Action> best_responses(const Game& game, int player,
                                   const ActionProfile& opponents) {
  return best_responses(game, player, game.opponent_index_of(player, opponents));
}

Maximin pure_maximin(const Game& game, int player) {
  Maximin result;
  const std::size_t opponents = game.num_opponent_profiles(player);
  for (Action a = 0; a < game.num_actions(player); ++a) {
    Rational worst = game.payoff(player, game.combine(player, a, 0));
    for (std::size_t x = 1; x < opponents; ++x) {
      worst = std::min(worst, game.payoff(player, game.combine(player, a, x)));
    }
    if (result.witnesses.empty() || worst > result.value) {
      result.value = worst;
      result.witnesses.assign(1, a);
    } else if (worst == result.value) {
      result.witnesses.push_back(a);
    }
  }
  return result;
}

bool pareto_dominates_weakly(const PayoffVector& u, const PayoffVector& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < v[i]) return false;
  }
  return true;
}

bool pareto_dominates_strictly(const PayoffVector& u, const PayoffVector& v) {
  return pareto_dominates_weakly(u, v) && u != v;
}

bool is_pareto_optimal(const Game& game, std::size_t index) {
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    if (pareto_dominates_strictly(game.payoff(k), game.payoff(index))) {
      return false;
    }
  }
  return true;
}

ParetoMaxProfile pareto_optimal_with_max_player(const Game& game) {
  constexpr int kPlayer = 0;
  std::size_t best = game.num_profiles();
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    if (game.payoff(kPlayer, k) != game.max_payoff(kPlayer)) continue;
    // Strictly greater keeps the smallest index among equal vectors.
    if (best == game.num_profiles() || game.payoff(k) > game.payoff(best)) {
      best = k;
    }
  }
  return {best, kPlayer};
}

std::vector<std::size_t> pure_nash_equilibria(const Game& game) {
  std::vector<std::size_t> result;
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    bool stable = true;
    for (int i = 0; i < game.num_players() && stable; ++i) {
      const std::size_t x = game.opponent_index(i, k);
      for (Action a = 0; a < game.num_actions(i); ++a) {
        if (game.payoff(i, game.combine(i, a, x)) > game.payoff(i, k)) {
          stable = false;
          break;
        }
      }
    }
    if (stable) result.push_back(k);
  }
  return result;
}

}  // namespace cse
