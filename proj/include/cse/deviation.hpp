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

#ifndef CSE_DEVIATION_HPP_
#define CSE_DEVIATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cse/conditional.hpp"
#include "cse/game.hpp"
#include "cse/rational.hpp"

namespace cse {

inline constexpr std::uint64_t kDefaultBruteForceBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Points that are fixed for every player outside `coalition`:
//   F_{-C} = { a : s_j(a_{-j}) = a_j for all j not in C }.
// For a singleton coalition {i} the points are also grouped into classes by
// a_{-i}; `classes[x]` lists the actions a_i with (a_i, x) in F_{-i}.
struct ResidualFixedSet {
  std::vector<int> coalition;
  std::vector<std::size_t> points;
  std::vector<std::vector<Action>> classes;  // singleton coalitions only
};

ResidualFixedSet residual_fixed_set(const Game& game,
                                    const ConditionalProfile& profile,
                                    const std::vector<int>& coalition);

struct DeviationValue {
  Rational value;
  // A strategy attaining `value`. Absent when the value comes from a forced
  // disagreement in the class-selection oracle.
  std::optional<ConditionalStrategy> witness;
};

// max over s'_i of U_i(s'_i, s_{-i}) without enumerating S_i.
//
// Under zero disagreement a deviation only pays through an agreement. A
// deviation chooses, for every class of F_{-i}, either one member to keep as
// a fixed point or (if the class is not all of A_i) none. The best value is
// the best point a* that can be made the agreement: under kDominant every
// other class must be excludable or offer a member weakly dominated by
// u(a*); under kUnique every other class must be excludable.
//
// Throws UnsupportedSemantics for kAverage.
DeviationValue best_unilateral_deviation_value(
    const Game& game, const ConditionalProfile& profile, int player,
    SemanticsMode mode = {});

// Exhaustive max over all m_i^(prod m_j) tables; valid in every mode.
// Ties keep the first table in odometer order (entry 0 least significant).
// Throws BudgetExceeded when |S_i| > budget.
DeviationValue brute_force_deviation_value(
    const Game& game, const ConditionalProfile& profile, int player,
    SemanticsMode mode = {}, std::uint64_t budget = kDefaultBruteForceBudget);

enum class Verdict { kNoProfitableDeviation, kDeviationFound };

std::string to_string(Verdict verdict);

struct DeviationCertificate {
  Verdict verdict = Verdict::kNoProfitableDeviation;
  SemanticsMode mode;
  PayoffVector baseline;  // U(s)

  // Populated only for kDeviationFound.
  std::vector<int> deviators;
  std::vector<ConditionalStrategy> deviation;  // one table per deviator
  std::optional<std::size_t> agreement_point;  // of the deviated profile
  PayoffVector deviated_payoff;                // U(s') for all players
  std::vector<Rational> gains;                 // per deviator, strictly > 0
};

// Profile with the deviators' tables swapped in.
ConditionalProfile apply_deviation(const ConditionalProfile& profile,
                                   const DeviationCertificate& certificate);

// Unilateral check for every player. Zero disagreement uses the
// class-selection oracle; average disagreement enumerates each S_i within
// `budget`.
DeviationCertificate is_cse(const Game& game, const ConditionalProfile& profile,
                            SemanticsMode mode = {},
                            std::uint64_t budget = kDefaultBruteForceBudget);

struct JointDeviation {
  std::vector<int> coalition;
  std::vector<ConditionalStrategy> tables;
  std::size_t agreement_point;
  PayoffVector payoff;
};

// Looks for tables of the coalition that make some point a* in F_{-C} the
// agreement with u_j(a*) > U_j(s) for every member. Candidate points are
// tried in ascending index order; feasibility is a DisequalityCsp over the
// coalition's table entries. Zero disagreement only.
std::optional<JointDeviation> coalition_deviation_exists(
    const Game& game, const ConditionalProfile& profile,
    const std::vector<int>& coalition, SemanticsMode mode = {});

// All 2^n - 1 coalitions, by size and then lexicographically.
std::vector<std::vector<int>> all_coalitions(int num_players);

DeviationCertificate is_strong_ce(const Game& game,
                                  const ConditionalProfile& profile,
                                  SemanticsMode mode = {});

struct CseEntry {
  ConditionalProfile profile;
  PayoffVector payoff;
  std::optional<std::size_t> agreement_point;
};

// Visits every conditional profile in odometer order (player 0's table
// varies fastest, each table in the same order as the brute-force oracle).
// The visitor returns false to stop early.
template <typename Visitor>
void for_each_profile(const Game& game, Visitor&& visit);

// Every CSE of the conditional extension. Throws BudgetExceeded when
// prod_i |S_i| > budget.
std::vector<CseEntry> enumerate_cse(
    const Game& game, SemanticsMode mode = {},
    std::uint64_t budget = kDefaultEnumerationBudget);

// prod_i |S_i|.
Integer conditional_profile_count(const Game& game);

// Advances `table` to the next table over `num_actions` actions (odometer,
// entry 0 least significant). Returns false after the last one.
bool next_table(std::vector<Action>& table, int num_actions);

template <typename Visitor>
void for_each_profile(const Game& game, Visitor&& visit) {
  const int n = game.num_players();
  ConditionalProfile profile;
  for (int i = 0; i < n; ++i) {
    profile.push_back(ConditionalStrategy{
        i, std::vector<Action>(game.num_opponent_profiles(i), 0)});
  }
  while (true) {
    if (!visit(static_cast<const ConditionalProfile&>(profile))) return;
    int player = 0;
    while (player < n &&
           !next_table(profile[player].table, game.num_actions(player))) {
      ++player;
    }
    if (player == n) return;
  }
}

}  // namespace cse

#endif  // CSE_DEVIATION_HPP_
