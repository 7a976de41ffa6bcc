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

#ifndef CSE_CONDITIONAL_HPP_
#define CSE_CONDITIONAL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cse/game.hpp"
#include "cse/rational.hpp"

namespace cse {

// A pure conditional strategy: a total table from opponent profiles
// (indexed as in Game::opponent_index) to the owner's actions.
struct ConditionalStrategy {
  int owner = 0;
  std::vector<Action> table;

  Action respond(std::size_t opponent_index) const {
    return table[opponent_index];
  }

  friend bool operator==(const ConditionalStrategy&,
                         const ConditionalStrategy&) = default;
};

// One strategy per player, in player order.
using ConditionalProfile = std::vector<ConditionalStrategy>;

// Throws InvalidArgument unless `strategy` is a total table of valid actions
// for its owner.
void validate(const Game& game, const ConditionalStrategy& strategy);
void validate(const Game& game, const ConditionalProfile& profile);

enum class AgreementRule {
  kDominant,  // some fixed point weakly Pareto-dominates every fixed point
  kUnique,    // exactly one fixed point
};

enum class DisagreementRule {
  kZero,     // disagreement pays the zero vector
  kAverage,  // disagreement pays the average over D(s)
};

struct SemanticsMode {
  AgreementRule agreement = AgreementRule::kDominant;
  DisagreementRule disagreement = DisagreementRule::kZero;

  friend bool operator==(const SemanticsMode&, const SemanticsMode&) = default;
};

std::string to_string(AgreementRule rule);
std::string to_string(DisagreementRule rule);
std::string to_string(SemanticsMode mode);

struct AgreementReport {
  // Profile indices with s(a) = a, ascending.
  std::vector<std::size_t> fixed_points;
  bool is_agreement = false;
  // Lowest-index fixed point whose payoff weakly dominates every fixed point
  // (kDominant) or the single fixed point (kUnique).
  std::optional<std::size_t> dominant_point;
  // Only populated for a disagreement under kAverage.
  std::vector<std::size_t> disagreement_set;
  // The induced payoff U(s).
  PayoffVector payoff;
};

// True when every player's table maps a_{-i} to a_i at `index`.
bool is_fixed_point(const Game& game, const ConditionalProfile& profile,
                    std::size_t index);

std::vector<std::size_t> fixed_points(const Game& game,
                                      const ConditionalProfile& profile);

AgreementReport classify(const Game& game, const ConditionalProfile& profile,
                         SemanticsMode mode = {});

// D(s): the fixed points if any, otherwise the set of all points
// (s_i(a_{-i}), a_{-i}) over players and opponent profiles, deduplicated.
std::vector<std::size_t> disagreement_set(const Game& game,
                                          const ConditionalProfile& profile);

// m_i ^ (prod_{j != i} m_j).
Integer strategy_space_size(const Game& game, int player);

ConditionalStrategy constant_strategy(const Game& game, int player,
                                      Action action);
ConditionalProfile constant_profile(const Game& game,
                                    const ActionProfile& actions);

}  // namespace cse

#endif  // CSE_CONDITIONAL_HPP_
