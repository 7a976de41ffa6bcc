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

#include "cse/constructors.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "cse/disequality_csp.hpp"
#include "cse/error.hpp"

namespace cse {
namespace {

constexpr SemanticsMode kDominantZero{AgreementRule::kDominant,
                                      DisagreementRule::kZero};
constexpr SemanticsMode kDominantAverage{AgreementRule::kDominant,
                                         DisagreementRule::kAverage};

std::string player_label(const Game& game, int player) {
  return game.player_name(player);
}

void require_players(const Game& game, int count, const char* code) {
  if (game.num_players() != count) {
    throw WrongPlayerCount(code, "this construction needs exactly " +
                                     std::to_string(count) +
                                     " players, the game has " +
                                     std::to_string(game.num_players()));
  }
}

void check_target(const Game& game, const ActionProfile& target) {
  if (static_cast<int>(target.size()) != game.num_players()) {
    throw InvalidArgument("target has " + std::to_string(target.size()) +
                          " actions for " + std::to_string(game.num_players()) +
                          " players");
  }
  for (int i = 0; i < game.num_players(); ++i) {
    if (target[i] < 0 || target[i] >= game.num_actions(i)) {
      throw InvalidArgument("target action out of range for player " +
                            std::to_string(i + 1));
    }
  }
}

// Sequential chain of the existence construction. For player k >= 1 the
// commitment a_hat_k depends on the actions of players k+1..n-1 only and is
// memoised by the suffix's index.
class ExistenceChain {
 public:
  explicit ExistenceChain(const Game& game)
      : game_(game), memo_(game.num_players()) {}

  // Fills players k-1..0 of `profile` from the actions of players k..n-1.
  void complete(int k, ActionProfile& profile) {
    for (int l = k - 1; l >= 1; --l) profile[l] = commitment(l, profile);
    profile[0] = best_responses(game_, 0, game_.opponent_index(0, game_.index_of(profile)))
                     .front();
  }

  // a_hat_k(a_{k+1}, ..., a_{n-1}), read from `profile`.
  Action commitment(int k, const ActionProfile& profile) {
    std::size_t suffix = 0;
    for (int l = k + 1; l < game_.num_players(); ++l) {
      suffix = suffix * game_.num_actions(l) + profile[l];
    }
    auto& memo = memo_[k];
    if (auto it = memo.find(suffix); it != memo.end()) return it->second;

    Action best = 0;
    Rational best_value;
    for (Action a = 0; a < game_.num_actions(k); ++a) {
      ActionProfile trial = profile;
      trial[k] = a;
      complete(k, trial);
      const Rational& value = game_.payoff(k, game_.index_of(trial));
      if (a == 0 || value > best_value) {
        best = a;
        best_value = value;
      }
    }
    memo.emplace(suffix, best);
    return best;
  }

 private:
  const Game& game_;
  std::vector<std::map<std::size_t, Action>> memo_;
};

}  // namespace

std::string to_string(Construction construction) {
  switch (construction) {
    case Construction::kExistence: return "EXISTENCE";
    case Construction::kFolk: return "FOLK";
    case Construction::kPareto3: return "PARETO3";
    case Construction::kStrong: return "STRONG";
    case Construction::kGeneral2p: return "GENERAL2P";
    case Construction::kSupportN4: return "SUPPORT_N4";
  }
  return "UNKNOWN";
}

ConstructionResult build_existence(const Game& game) {
  const int n = game.num_players();
  ExistenceChain chain(game);
  ConstructionResult result;
  result.construction = Construction::kExistence;
  result.mode = kDominantZero;

  ConditionalStrategy first{0, {}};
  for (std::size_t x = 0; x < game.num_opponent_profiles(0); ++x) {
    first.table.push_back(best_responses(game, 0, x).front());
  }
  result.profile.push_back(std::move(first));

  for (int k = 1; k < n; ++k) {
    ConditionalStrategy strategy{k, {}};
    for (std::size_t x = 0; x < game.num_opponent_profiles(k); ++x) {
      ActionProfile profile = game.profile_at(game.combine(k, 0, x));
      strategy.table.push_back(chain.commitment(k, profile));
    }
    result.profile.push_back(std::move(strategy));
  }

  ActionProfile point(n, 0);
  for (int k = n - 1; k >= 1; --k) point[k] = chain.commitment(k, point);
  point[0] = result.profile[0].respond(game.opponent_index(0, game.index_of(point)));
  result.intended_point = game.index_of(point);
  result.notes.push_back("player " + player_label(game, 0) +
                         " best-responds with lowest-index ties");
  result.notes.push_back("chain point " +
                         game.profile_label(*result.intended_point));
  return result;
}

ConstructionResult build_folk(const Game& game, const ActionProfile& target) {
  require_players(game, 2, "NotTwoPlayers");
  check_target(game, target);
  const std::size_t bar = game.index_of(target);
  for (int i = 0; i < 2; ++i) {
    const Maximin maximin = pure_maximin(game, i);
    if (game.payoff(i, bar) < maximin.value) {
      throw NotIndividuallyRational(i, to_string(maximin.value),
                                    to_string(game.payoff(i, bar)));
    }
  }

  ConstructionResult result;
  result.construction = Construction::kFolk;
  result.mode = kDominantZero;
  for (int i = 0; i < 2; ++i) {
    const int other = 1 - i;
    ConditionalStrategy strategy{i, {}};
    const std::size_t on_path = game.opponent_index(i, bar);
    for (std::size_t x = 0; x < game.num_opponent_profiles(i); ++x) {
      if (x == on_path) {
        strategy.table.push_back(target[i]);
        continue;
      }
      // Punish: argmin over own actions of the opponent's payoff.
      Action worst = 0;
      for (Action a = 1; a < game.num_actions(i); ++a) {
        if (game.payoff(other, game.combine(i, a, x)) <
            game.payoff(other, game.combine(i, worst, x))) {
          worst = a;
        }
      }
      strategy.table.push_back(worst);
    }
    result.profile.push_back(std::move(strategy));
  }
  result.intended_point = bar;
  result.notes.push_back("target " + game.profile_label(bar) +
                         " is individually rational");
  return result;
}

ConstructionResult build_pareto3(const Game& game) {
  require_players(game, 3, "NotThreePlayers");
  for (int l = 0; l < 3; ++l) {
    if (game.num_actions(l) < 2) throw ActionSetTooSmall(l);
  }
  const ParetoMaxProfile pm = pareto_optimal_with_max_player(game);
  const ActionProfile bar = game.profile_at(pm.profile);
  ActionProfile alt(3);
  for (int l = 0; l < 3; ++l) alt[l] = bar[l] == 0 ? 1 : 0;

  const int i = pm.player;
  std::vector<int> others;
  for (int l = 0; l < 3; ++l) {
    if (l != i) others.push_back(l);
  }
  const int j = others[0];
  const int k = others[1];

  ConstructionResult result;
  result.construction = Construction::kPareto3;
  result.mode = kDominantZero;
  result.profile.resize(3);
  for (int owner = 0; owner < 3; ++owner) {
    ConditionalStrategy strategy{owner, {}};
    for (std::size_t x = 0; x < game.num_opponent_profiles(owner); ++x) {
      const ActionProfile a = game.profile_at(game.combine(owner, 0, x));
      Action play;
      if (owner == i) {
        const bool k_off = a[k] != bar[k];
        const bool j_off = a[j] != bar[j];
        if (!k_off && !j_off) play = bar[i];
        else if (k_off && j_off) play = bar[i];  // (3)
        else play = alt[i];                      // (1), (2)
      } else {
        // s_k: (4), (5), (6); s_j: (7), (8), (9).
        const int partner = owner == k ? j : k;
        const bool both_off = a[i] != bar[i] && a[partner] != bar[partner];
        play = both_off ? alt[owner] : bar[owner];
      }
      strategy.table.push_back(play);
    }
    result.profile[owner] = std::move(strategy);
  }
  result.intended_point = pm.profile;
  result.notes.push_back("a_bar " + game.profile_label(pm.profile) +
                         ", maximum for " + player_label(game, i));
  result.notes.push_back("a' " + game.profile_label(game.index_of(alt)));
  result.notes.push_back("j = " + player_label(game, j) +
                         ", k = " + player_label(game, k));
  return result;
}

ConstructionResult build_strong(const Game& game) {
  const int n = game.num_players();
  std::optional<std::size_t> bar;
  int first = -1;
  int second = -1;
  bool saw_double_max = false;
  for (std::size_t p = 0; p < game.num_profiles() && !bar; ++p) {
    std::vector<int> at_max;
    for (int l = 0; l < n; ++l) {
      if (game.payoff(l, p) == game.max_payoff(l)) at_max.push_back(l);
    }
    if (at_max.size() >= 2) saw_double_max = true;
    std::vector<int> usable;
    for (int l : at_max) {
      if (game.num_actions(l) >= 2) usable.push_back(l);
    }
    if (usable.size() >= 2) {
      bar = p;
      first = usable[0];
      second = usable[1];
    }
  }
  if (!bar) {
    if (!saw_double_max) throw NoDoubleMaxProfile();
    for (int l = 0; l < n; ++l) {
      if (game.num_actions(l) < 2) throw ActionSetTooSmall(l);
    }
    throw NoDoubleMaxProfile();
  }

  // No profile other than a_bar may be fixed for both `first` and `second`.
  DisequalityCsp csp;
  std::vector<int> var_first;
  std::vector<int> var_second;
  for (std::size_t x = 0; x < game.num_opponent_profiles(first); ++x) {
    var_first.push_back(csp.add_variable(game.num_actions(first)));
  }
  for (std::size_t x = 0; x < game.num_opponent_profiles(second); ++x) {
    var_second.push_back(csp.add_variable(game.num_actions(second)));
  }
  csp.fix(var_first[game.opponent_index(first, *bar)], game.action_at(first, *bar));
  csp.fix(var_second[game.opponent_index(second, *bar)],
          game.action_at(second, *bar));
  for (std::size_t p = 0; p < game.num_profiles(); ++p) {
    if (p == *bar) continue;
    csp.add_clause({{var_first[game.opponent_index(first, p)], game.action_at(first, p)},
                    {var_second[game.opponent_index(second, p)],
                     game.action_at(second, p)}});
  }
  DisequalityCsp::Stats stats;
  auto solution = csp.solve(std::uint64_t{1} << 24, &stats);
  if (!solution) {
    throw SearchExhausted("no table assignment separates the fixed points of " +
                          player_label(game, first) + " and " +
                          player_label(game, second));
  }

  ConstructionResult result;
  result.construction = Construction::kStrong;
  result.mode = kDominantZero;
  for (int m = 0; m < n; ++m) {
    if (m == first || m == second) {
      const auto& vars = m == first ? var_first : var_second;
      ConditionalStrategy strategy{m, {}};
      for (int v : vars) strategy.table.push_back((*solution)[v]);
      result.profile.push_back(std::move(strategy));
    } else {
      ConditionalStrategy strategy = constant_strategy(game, m, 0);
      strategy.table[game.opponent_index(m, *bar)] = game.action_at(m, *bar);
      result.profile.push_back(std::move(strategy));
    }
  }
  result.intended_point = *bar;
  result.notes.push_back("a_bar " + game.profile_label(*bar) + ", maxima for " +
                         player_label(game, first) + " and " +
                         player_label(game, second));
  result.notes.push_back("search nodes " + std::to_string(stats.nodes));
  return result;
}

ConstructionResult build_general_2p(const Game& game, std::uint64_t budget) {
  require_players(game, 2, "NotTwoPlayers");
  ConstructionResult result;
  result.construction = Construction::kGeneral2p;
  result.mode = kDominantAverage;

  const auto nash = pure_nash_equilibria(game);
  if (!nash.empty()) {
    result.profile = constant_profile(game, game.profile_at(nash.front()));
    result.intended_point = nash.front();
    result.notes.push_back("case (a): pure Nash " +
                           game.profile_label(nash.front()));
    return result;
  }

  ConditionalProfile mutual;
  for (int i = 0; i < 2; ++i) {
    ConditionalStrategy strategy{i, {}};
    for (std::size_t x = 0; x < game.num_opponent_profiles(i); ++x) {
      strategy.table.push_back(best_responses(game, i, x).front());
    }
    mutual.push_back(std::move(strategy));
  }
  const PayoffVector baseline = classify(game, mutual, result.mode).payoff;

  for (int i = 0; i < 2; ++i) {
    DeviationValue best =
        brute_force_deviation_value(game, mutual, i, result.mode, budget);
    if (best.value <= baseline[i]) continue;

    ConditionalProfile deviated = mutual;
    deviated[i] = *best.witness;
    const auto points = fixed_points(game, deviated);
    if (points.empty()) {
      // A deviation without fixed points cannot beat the best responses.
      throw Error("InternalError",
                  "profitable deviation without a fixed point");
    }
    std::size_t chosen = points.front();
    for (std::size_t p : points) {
      if (game.payoff(i, p) > game.payoff(i, chosen)) chosen = p;
    }
    const Action committed = game.action_at(i, chosen);
    result.profile = mutual;
    result.profile[i] = constant_strategy(game, i, committed);
    const int other = 1 - i;
    ActionProfile point(2);
    point[i] = committed;
    point[other] = mutual[other].respond(
        game.opponent_index(other, game.combine(i, committed, 0)));
    result.intended_point = game.index_of(point);
    result.notes.push_back("case (c): " + player_label(game, i) +
                           " deviates profitably; commits to " +
                           game.action_name(i, committed));
    return result;
  }

  result.profile = std::move(mutual);
  result.notes.push_back("case (b): mutual best responses are stable");
  return result;
}

ConstructionResult build_support_n4(const Game& game,
                                    const ActionProfile& target,
                                    std::uint64_t node_budget) {
  const int n = game.num_players();
  if (n < 4) {
    throw WrongPlayerCount("TooFewPlayers",
                           "support search needs at least 4 players, the "
                           "game has " + std::to_string(n));
  }
  for (int l = 0; l < n; ++l) {
    if (game.num_actions(l) < 2) throw ActionSetTooSmall(l);
  }
  check_target(game, target);
  const std::size_t goal = game.index_of(target);

  auto attempt = [&](bool strict, DisequalityCsp::Stats& stats)
      -> std::optional<ConditionalProfile> {
    DisequalityCsp csp;
    std::vector<std::vector<int>> var(n);
    for (int j = 0; j < n; ++j) {
      for (std::size_t x = 0; x < game.num_opponent_profiles(j); ++x) {
        var[j].push_back(csp.add_variable(game.num_actions(j)));
      }
      csp.fix(var[j][game.opponent_index(j, goal)], target[j]);
    }
    auto literal = [&](int j, std::size_t p) {
      return DisequalityCsp::Literal{var[j][game.opponent_index(j, p)],
                                     game.action_at(j, p)};
    };
    for (std::size_t p = 0; p < game.num_profiles(); ++p) {
      if (p == goal) continue;
      std::vector<DisequalityCsp::Literal> anyone;
      for (int j = 0; j < n; ++j) anyone.push_back(literal(j, p));
      csp.add_clause(std::move(anyone));
      // Player i alone must not be able to complete p, unless (relaxed) i
      // gains nothing from it.
      for (int i = 0; i < n; ++i) {
        if (!strict && game.payoff(i, p) <= game.payoff(i, goal)) continue;
        std::vector<DisequalityCsp::Literal> others;
        for (int j = 0; j < n; ++j) {
          if (j != i) others.push_back(literal(j, p));
        }
        csp.add_clause(std::move(others));
      }
    }
    auto solution = csp.solve(node_budget, &stats);
    if (!solution) return std::nullopt;
    ConditionalProfile profile;
    for (int j = 0; j < n; ++j) {
      ConditionalStrategy strategy{j, {}};
      for (int v : var[j]) strategy.table.push_back((*solution)[v]);
      profile.push_back(std::move(strategy));
    }
    return profile;
  };

  ConstructionResult result;
  result.construction = Construction::kSupportN4;
  result.mode = kDominantZero;
  DisequalityCsp::Stats strict_stats;
  auto profile = attempt(true, strict_stats);
  std::string variant = "no unilateral deviation creates a fixed point";
  DisequalityCsp::Stats relaxed_stats;
  if (!profile) {
    profile = attempt(false, relaxed_stats);
    variant = "no unilateral deviation creates a preferred fixed point";
  }
  if (!profile) {
    const bool budget = strict_stats.budget_exhausted ||
                        relaxed_stats.budget_exhausted;
    throw SearchExhausted(
        std::string("no supporting profile found for ") +
        game.profile_label(goal) +
        (budget ? " within the node budget" : " (search space exhausted)"));
  }
  result.profile = std::move(*profile);
  result.intended_point = goal;
  result.notes.push_back(variant);
  result.notes.push_back("search nodes " +
                         std::to_string(strict_stats.nodes + relaxed_stats.nodes));

  DeviationCertificate certificate = is_cse(game, result.profile, result.mode);
  for (int i = 0; i < n; ++i) {
    const auto best =
        best_unilateral_deviation_value(game, result.profile, i, result.mode);
    if (best.value > game.payoff(i, goal)) {
      throw Error("InternalError", "support profile admits a profitable "
                                   "deviation for player " + std::to_string(i + 1));
    }
  }
  result.certificate = std::move(certificate);
  return result;
}

}  // namespace cse
