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

#ifndef CSE_CONSTRUCTORS_HPP_
#define CSE_CONSTRUCTORS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cse/conditional.hpp"
#include "cse/deviation.hpp"
#include "cse/game.hpp"

namespace cse {

enum class Construction {
  kExistence,   // sequential best-response chain, any n
  kFolk,        // two players, any individually rational target
  kPareto3,     // three players, Pareto-optimal agreement
  kStrong,      // strong equilibrium at a double-max profile
  kGeneral2p,   // two players under averaging disagreement
  kSupportN4,   // search-based support of a target, n >= 4
};

std::string to_string(Construction construction);

struct ConstructionResult {
  Construction construction = Construction::kExistence;
  SemanticsMode mode;
  ConditionalProfile profile;
  // Absent only for the general two-player best-response profile, which has
  // no fixed point.
  std::optional<std::size_t> intended_point;
  // Human-readable trace of the choices made (tie-breaks, a', cases).
  std::vector<std::string> notes;
  // Filled by constructions that verify themselves during the build.
  std::optional<DeviationCertificate> certificate;
};

// Player 0 best-responds (lowest index); every later player k commits to the
// action maximising u_k along the chain of earlier responses, as a function
// of the actions of players after k only. The last player is constant.
// Mode: dominant + zero.
ConstructionResult build_existence(const Game& game);

// Two players. Plays the target on path and, off path, the action that
// minimises the opponent's payoff. Throws NotIndividuallyRational when the
// target is below some player's pure maximin. Mode: dominant + zero.
ConstructionResult build_folk(const Game& game, const ActionProfile& target);

// Three players, every m_l >= 2. Unique fixed point at a Pareto-optimal
// profile where one player gets their maximum. Mode: dominant + zero.
ConstructionResult build_pareto3(const Game& game);

// Needs a profile where two players with >= 2 actions each both get their
// maximum payoff. Throws NoDoubleMaxProfile (or ActionSetTooSmall when such
// profiles exist only for single-action players).
ConstructionResult build_strong(const Game& game);

// Two players, dominant + average. Pure Nash → constants; otherwise the
// mutual best-response profile if it is stable; otherwise a constant
// commitment by the profitable deviator.
ConstructionResult build_general_2p(
    const Game& game, std::uint64_t budget = kDefaultBruteForceBudget);

// n >= 4, every m_i >= 2. Searches for tables with the target as the unique
// fixed point such that no single player can create a fixed point at all;
// failing that, such that no single player can create one they prefer to the
// target. The result is verified with the deviation oracle before returning.
// Throws SearchExhausted when neither search succeeds within `node_budget`.
ConstructionResult build_support_n4(const Game& game,
                                    const ActionProfile& target,
                                    std::uint64_t node_budget = 1u << 22);

}  // namespace cse

#endif  // CSE_CONSTRUCTORS_HPP_
