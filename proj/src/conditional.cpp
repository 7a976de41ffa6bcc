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

#include "cse/conditional.hpp"

#include <algorithm>
#include <string>

#include "cse/error.hpp"

namespace cse {

void validate(const Game& game, const ConditionalStrategy& strategy) {
  const int owner = strategy.owner;
  if (owner < 0 || owner >= game.num_players()) {
    throw InvalidArgument("strategy owner " + std::to_string(owner + 1) +
                          " is not a player");
  }
  if (strategy.table.size() != game.num_opponent_profiles(owner)) {
    throw InvalidArgument("strategy of player " + std::to_string(owner + 1) +
                          " has " + std::to_string(strategy.table.size()) +
                          " entries, expected " +
                          std::to_string(game.num_opponent_profiles(owner)));
  }
  for (Action a : strategy.table) {
    if (a < 0 || a >= game.num_actions(owner)) {
      throw InvalidArgument("strategy of player " +
                            std::to_string(owner + 1) +
                            " plays invalid action " + std::to_string(a));
    }
  }
}

void validate(const Game& game, const ConditionalProfile& profile) {
  if (static_cast<int>(profile.size()) != game.num_players()) {
    throw InvalidArgument("profile has " + std::to_string(profile.size()) +
                          " strategies for " +
                          std::to_string(game.num_players()) + " players");
  }
  for (int i = 0; i < game.num_players(); ++i) {
    if (profile[i].owner != i) {
      throw InvalidArgument("strategy " + std::to_string(i + 1) +
                            " is owned by player " +
                            std::to_string(profile[i].owner + 1));
    }
    validate(game, profile[i]);
  }
}

std::string to_string(AgreementRule rule) {
  return rule == AgreementRule::kDominant ? "dominant" : "unique";
}

std::string to_string(DisagreementRule rule) {
  return rule == DisagreementRule::kZero ? "zero" : "average";
}

std::string to_string(SemanticsMode mode) {
  return to_string(mode.agreement) + "+" + to_string(mode.disagreement);
}

bool is_fixed_point(const Game& game, const ConditionalProfile& profile,
                    std::size_t index) {
  for (int i = 0; i < game.num_players(); ++i) {
    if (profile[i].respond(game.opponent_index(i, index)) !=
        game.action_at(i, index)) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> fixed_points(const Game& game,
                                      const ConditionalProfile& profile) {
  std::vector<std::size_t> points;
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    if (is_fixed_point(game, profile, k)) points.push_back(k);
  }
  return points;
}

std::vector<std::size_t> disagreement_set(const Game& game,
                                          const ConditionalProfile& profile) {
  std::vector<std::size_t> points = fixed_points(game, profile);
  if (!points.empty()) return points;
  std::vector<bool> seen(game.num_profiles(), false);
  for (int i = 0; i < game.num_players(); ++i) {
    for (std::size_t x = 0; x < game.num_opponent_profiles(i); ++x) {
      seen[game.combine(i, profile[i].respond(x), x)] = true;
    }
  }
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (seen[k]) points.push_back(k);
  }
  return points;
}

AgreementReport classify(const Game& game, const ConditionalProfile& profile,
                         SemanticsMode mode) {
  AgreementReport report;
  report.fixed_points = fixed_points(game, profile);
  const auto& points = report.fixed_points;

  if (mode.agreement == AgreementRule::kUnique) {
    if (points.size() == 1) report.dominant_point = points.front();
  } else {
    for (std::size_t candidate : points) {
      const bool dominates =
          std::all_of(points.begin(), points.end(), [&](std::size_t other) {
            return pareto_dominates_weakly(game.payoff(candidate),
                                           game.payoff(other));
          });
      if (dominates) {
        report.dominant_point = candidate;
        break;
      }
    }
  }

  report.is_agreement = report.dominant_point.has_value();
  if (report.is_agreement) {
    report.payoff = game.payoff(*report.dominant_point);
    return report;
  }

  const int n = game.num_players();
  report.payoff.assign(n, Rational(0));
  if (mode.disagreement == DisagreementRule::kAverage) {
    report.disagreement_set =
        points.empty() ? disagreement_set(game, profile) : points;
    for (std::size_t k : report.disagreement_set) {
      for (int i = 0; i < n; ++i) report.payoff[i] += game.payoff(i, k);
    }
    const Rational size(static_cast<long>(report.disagreement_set.size()));
    for (auto& value : report.payoff) value /= size;
  }
  return report;
}

Integer strategy_space_size(const Game& game, int player) {
  return boost::multiprecision::pow(
      Integer(game.num_actions(player)),
      static_cast<unsigned>(game.num_opponent_profiles(player)));
}

ConditionalStrategy constant_strategy(const Game& game, int player,
                                      Action action) {
  if (action < 0 || action >= game.num_actions(player)) {
    throw InvalidArgument("invalid action " + std::to_string(action) +
                          " for player " + std::to_string(player + 1));
  }
  return ConditionalStrategy{
      player,
      std::vector<Action>(game.num_opponent_profiles(player), action)};
}

ConditionalProfile constant_profile(const Game& game,
                                    const ActionProfile& actions) {
  ConditionalProfile profile;
  for (int i = 0; i < game.num_players(); ++i) {
    profile.push_back(constant_strategy(game, i, actions[i]));
  }
  return profile;
}

}  // namespace cse
