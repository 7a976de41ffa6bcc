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

#include "cse/deviation.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cse/disequality_csp.hpp"
#include "cse/error.hpp"

namespace cse {
namespace {

bool in_coalition(const std::vector<int>& coalition, int player) {
  return std::find(coalition.begin(), coalition.end(), player) !=
         coalition.end();
}

// Lowest action outside `members` (members ascending, size < num_actions).
Action lowest_excluded(const std::vector<Action>& members, int num_actions) {
  Action a = 0;
  for (Action m : members) {
    if (m != a) break;
    ++a;
  }
  return a < num_actions ? a : 0;
}

void require_zero(SemanticsMode mode, const char* what) {
  if (mode.disagreement != DisagreementRule::kZero) {
    throw UnsupportedSemantics(std::string(what) +
                               " requires zero disagreement; use the "
                               "brute-force oracle for average semantics");
  }
}

ConditionalProfile with_tables(const ConditionalProfile& profile,
                               const std::vector<ConditionalStrategy>& tables) {
  ConditionalProfile deviated = profile;
  for (const auto& table : tables) deviated[table.owner] = table;
  return deviated;
}

DeviationCertificate found(const Game& game, const ConditionalProfile& profile,
                           SemanticsMode mode, const PayoffVector& baseline,
                           std::vector<int> deviators,
                           std::vector<ConditionalStrategy> tables) {
  DeviationCertificate certificate;
  certificate.verdict = Verdict::kDeviationFound;
  certificate.mode = mode;
  certificate.baseline = baseline;
  const AgreementReport report =
      classify(game, with_tables(profile, tables), mode);
  certificate.agreement_point = report.dominant_point;
  certificate.deviated_payoff = report.payoff;
  for (int j : deviators) {
    certificate.gains.push_back(report.payoff[j] - baseline[j]);
  }
  certificate.deviators = std::move(deviators);
  certificate.deviation = std::move(tables);
  return certificate;
}

}  // namespace

ResidualFixedSet residual_fixed_set(const Game& game,
                                    const ConditionalProfile& profile,
                                    const std::vector<int>& coalition) {
  ResidualFixedSet result;
  result.coalition = coalition;
  std::sort(result.coalition.begin(), result.coalition.end());
  const bool singleton = result.coalition.size() == 1;
  if (singleton) {
    result.classes.resize(game.num_opponent_profiles(result.coalition[0]));
  }
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    bool fixed = true;
    for (int j = 0; j < game.num_players() && fixed; ++j) {
      if (in_coalition(result.coalition, j)) continue;
      fixed = profile[j].respond(game.opponent_index(j, k)) ==
              game.action_at(j, k);
    }
    if (!fixed) continue;
    result.points.push_back(k);
    if (singleton) {
      const int i = result.coalition[0];
      result.classes[game.opponent_index(i, k)].push_back(game.action_at(i, k));
    }
  }
  return result;
}

DeviationValue best_unilateral_deviation_value(const Game& game,
                                               const ConditionalProfile& profile,
                                               int player, SemanticsMode mode) {
  require_zero(mode, "best_unilateral_deviation_value");
  const int m = game.num_actions(player);
  const ResidualFixedSet residual = residual_fixed_set(game, profile, {player});
  const auto& classes = residual.classes;

  // Only classes covering all of A_i are forced to keep a fixed point.
  std::vector<std::size_t> forced;
  for (std::size_t x = 0; x < classes.size(); ++x) {
    if (static_cast<int>(classes[x].size()) == m) forced.push_back(x);
  }

  std::optional<std::size_t> best;
  std::vector<Action> best_choice;  // per forced class, the kept member
  for (std::size_t k : residual.points) {
    if (best && game.payoff(player, k) <= game.payoff(player, *best)) continue;
    const std::size_t own_class = game.opponent_index(player, k);
    std::vector<Action> choice;
    bool ok = true;
    for (std::size_t x : forced) {
      if (x == own_class) {
        choice.push_back(game.action_at(player, k));
        continue;
      }
      if (mode.agreement == AgreementRule::kUnique) {
        ok = false;
        break;
      }
      bool kept = false;
      for (Action a : classes[x]) {
        if (pareto_dominates_weakly(game.payoff(k),
                                    game.payoff(game.combine(player, a, x)))) {
          choice.push_back(a);
          kept = true;
          break;
        }
      }
      if (!kept) {
        ok = false;
        break;
      }
    }
    if (ok) {
      best = k;
      best_choice = std::move(choice);
    }
  }

  DeviationValue result;
  if (!best) {
    result.value = 0;
    return result;
  }
  result.value = game.payoff(player, *best);
  ConditionalStrategy witness{player, std::vector<Action>(classes.size())};
  for (std::size_t x = 0; x < classes.size(); ++x) {
    witness.table[x] = lowest_excluded(classes[x], m);
  }
  for (std::size_t f = 0; f < forced.size(); ++f) {
    witness.table[forced[f]] = best_choice[f];
  }
  witness.table[game.opponent_index(player, *best)] =
      game.action_at(player, *best);
  result.witness = std::move(witness);
  return result;
}

bool next_table(std::vector<Action>& table, int num_actions) {
  for (auto& entry : table) {
    if (++entry < num_actions) return true;
    entry = 0;
  }
  return false;
}

DeviationValue brute_force_deviation_value(const Game& game,
                                           const ConditionalProfile& profile,
                                           int player, SemanticsMode mode,
                                           std::uint64_t budget) {
  const Integer size = strategy_space_size(game, player);
  if (size > budget) {
    throw BudgetExceeded("strategy space of player " +
                             std::to_string(player + 1),
                         size.str(), budget);
  }
  ConditionalProfile deviated = profile;
  auto& table = deviated[player].table;
  std::fill(table.begin(), table.end(), 0);
  DeviationValue result;
  do {
    Rational value = classify(game, deviated, mode).payoff[player];
    if (!result.witness || value > result.value) {
      result.value = std::move(value);
      result.witness = deviated[player];
    }
  } while (next_table(table, game.num_actions(player)));
  return result;
}

std::string to_string(Verdict verdict) {
  return verdict == Verdict::kNoProfitableDeviation ? "NO_PROFITABLE_DEVIATION"
                                                    : "DEVIATION_FOUND";
}

ConditionalProfile apply_deviation(const ConditionalProfile& profile,
                                   const DeviationCertificate& certificate) {
  return with_tables(profile, certificate.deviation);
}

DeviationCertificate is_cse(const Game& game, const ConditionalProfile& profile,
                            SemanticsMode mode, std::uint64_t budget) {
  validate(game, profile);
  const PayoffVector baseline = classify(game, profile, mode).payoff;
  for (int i = 0; i < game.num_players(); ++i) {
    DeviationValue best =
        mode.disagreement == DisagreementRule::kZero
            ? best_unilateral_deviation_value(game, profile, i, mode)
            : brute_force_deviation_value(game, profile, i, mode, budget);
    if (best.value > baseline[i]) {
      return found(game, profile, mode, baseline, {i}, {*best.witness});
    }
  }
  DeviationCertificate certificate;
  certificate.mode = mode;
  certificate.baseline = baseline;
  return certificate;
}

std::optional<JointDeviation> coalition_deviation_exists(
    const Game& game, const ConditionalProfile& profile,
    const std::vector<int>& coalition, SemanticsMode mode) {
  require_zero(mode, "coalition_deviation_exists");
  if (coalition.empty()) throw InvalidArgument("empty coalition");
  const PayoffVector baseline = classify(game, profile, mode).payoff;
  const ResidualFixedSet residual =
      residual_fixed_set(game, profile, coalition);
  const auto& members = residual.coalition;

  for (std::size_t target : residual.points) {
    const bool profitable =
        std::all_of(members.begin(), members.end(), [&](int j) {
          return game.payoff(j, target) > baseline[j];
        });
    if (!profitable) continue;

    DisequalityCsp csp;
    std::vector<std::vector<int>> var(members.size());
    for (std::size_t c = 0; c < members.size(); ++c) {
      const int j = members[c];
      for (std::size_t x = 0; x < game.num_opponent_profiles(j); ++x) {
        var[c].push_back(csp.add_variable(game.num_actions(j)));
      }
      csp.fix(var[c][game.opponent_index(j, target)], game.action_at(j, target));
    }
    for (std::size_t k : residual.points) {
      if (k == target) continue;
      // Harmless under kDominant: keeping k as a fixed point leaves the
      // target dominant.
      if (mode.agreement == AgreementRule::kDominant &&
          pareto_dominates_weakly(game.payoff(target), game.payoff(k))) {
        continue;
      }
      std::vector<DisequalityCsp::Literal> clause;
      for (std::size_t c = 0; c < members.size(); ++c) {
        const int j = members[c];
        clause.push_back({var[c][game.opponent_index(j, k)], game.action_at(j, k)});
      }
      csp.add_clause(std::move(clause));
    }
    auto solution = csp.solve();
    if (!solution) continue;

    JointDeviation deviation;
    deviation.coalition = members;
    for (std::size_t c = 0; c < members.size(); ++c) {
      ConditionalStrategy table{members[c], {}};
      for (int v : var[c]) table.table.push_back((*solution)[v]);
      deviation.tables.push_back(std::move(table));
    }
    deviation.agreement_point = target;
    deviation.payoff = game.payoff(target);
    return deviation;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> all_coalitions(int num_players) {
  std::vector<std::vector<int>> result;
  for (int size = 1; size <= num_players; ++size) {
    std::vector<bool> pick(num_players, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<int> coalition;
      for (int j = 0; j < num_players; ++j) {
        if (pick[j]) coalition.push_back(j);
      }
      result.push_back(std::move(coalition));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return result;
}

DeviationCertificate is_strong_ce(const Game& game,
                                  const ConditionalProfile& profile,
                                  SemanticsMode mode) {
  validate(game, profile);
  require_zero(mode, "is_strong_ce");
  const PayoffVector baseline = classify(game, profile, mode).payoff;
  for (const auto& coalition : all_coalitions(game.num_players())) {
    auto deviation = coalition_deviation_exists(game, profile, coalition, mode);
    if (deviation) {
      return found(game, profile, mode, baseline, deviation->coalition,
                   std::move(deviation->tables));
    }
  }
  DeviationCertificate certificate;
  certificate.mode = mode;
  certificate.baseline = baseline;
  return certificate;
}

Integer conditional_profile_count(const Game& game) {
  Integer count = 1;
  for (int i = 0; i < game.num_players(); ++i) {
    count *= strategy_space_size(game, i);
  }
  return count;
}

std::vector<CseEntry> enumerate_cse(const Game& game, SemanticsMode mode,
                                    std::uint64_t budget) {
  const Integer count = conditional_profile_count(game);
  if (count > budget) {
    throw BudgetExceeded("conditional profile space", count.str(), budget);
  }
  std::vector<CseEntry> result;
  for_each_profile(game, [&](const ConditionalProfile& profile) {
    if (is_cse(game, profile, mode).verdict == Verdict::kNoProfitableDeviation) {
      AgreementReport report = classify(game, profile, mode);
      result.push_back({profile, std::move(report.payoff), report.dominant_point});
    }
    return true;
  });
  return result;
}

}  // namespace cse
