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

#include <set>
#include <vector>

#include "doctest.h"

#include "cse/conditional.hpp"
#include "cse/error.hpp"
#include "support/oracles.hpp"
#include "support/random_games.hpp"

namespace cse {
namespace {

using testing::Rng;

const SemanticsMode kDominantZero{AgreementRule::kDominant, DisagreementRule::kZero};
const SemanticsMode kUniqueZero{AgreementRule::kUnique, DisagreementRule::kZero};
const SemanticsMode kDominantAverage{AgreementRule::kDominant,
                                     DisagreementRule::kAverage};
const SemanticsMode kUniqueAverage{AgreementRule::kUnique, DisagreementRule::kAverage};
const SemanticsMode kAllModes[] = {kDominantZero, kUniqueZero, kDominantAverage,
                                   kUniqueAverage};

Game binary_coordination() {
  return Game::from_sizes({2, 2}, {{2, 2}, {0, 0}, {0, 0}, {1, 1}});
}

Game matching_pennies() {
  return Game::from_sizes({2, 2}, {{1, 0}, {0, 1}, {0, 1}, {1, 0}});
}

TEST_CASE("fixed points of small binary profiles") {
  const Game g = binary_coordination();
  ConditionalProfile identity{{0, {0, 1}}, {1, {0, 1}}};
  CHECK(fixed_points(g, identity) == std::vector<std::size_t>{0, 3});
  ConditionalProfile flip{{0, {1, 0}}, {1, {0, 1}}};
  CHECK(fixed_points(g, flip).empty());
  CHECK(fixed_points(g, constant_profile(g, {1, 0})) == std::vector<std::size_t>{2});
}

TEST_CASE("validate rejects malformed profiles") {
  const Game g = binary_coordination();
  CHECK_THROWS_AS(validate(g, ConditionalProfile{{0, {0, 1}}}), InvalidArgument);
  CHECK_THROWS_AS(validate(g, ConditionalProfile{{0, {0, 1}}, {1, {0}}}),
                  InvalidArgument);
  CHECK_THROWS_AS(validate(g, ConditionalProfile{{0, {0, 2}}, {1, {0, 1}}}),
                  InvalidArgument);
  CHECK_THROWS_AS(validate(g, ConditionalProfile{{1, {0, 1}}, {0, {0, 1}}}),
                  InvalidArgument);
}

TEST_CASE("classification of the identity profile under both agreement rules") {
  const Game g = binary_coordination();
  ConditionalProfile identity{{0, {0, 1}}, {1, {0, 1}}};
  const AgreementReport dom = classify(g, identity, kDominantZero);
  CHECK(dom.is_agreement);
  CHECK(dom.dominant_point == std::size_t{0});
  CHECK(dom.payoff == PayoffVector{2, 2});
  const AgreementReport uni = classify(g, identity, kUniqueZero);
  CHECK_FALSE(uni.is_agreement);
  CHECK(uni.payoff == PayoffVector{0, 0});
  // Averaging falls back on the fixed points when there are any.
  const AgreementReport avg = classify(g, identity, kUniqueAverage);
  CHECK(avg.payoff == PayoffVector{Rational(3, 2), Rational(3, 2)});
  CHECK(avg.disagreement_set == std::vector<std::size_t>{0, 3});
}

TEST_CASE("matching pennies best-response profile averages over all profiles") {
  const Game g = matching_pennies();
  ConditionalProfile s{{0, {0, 1}}, {1, {1, 0}}};
  for (SemanticsMode mode : {kDominantAverage, kUniqueAverage}) {
    const AgreementReport r = classify(g, s, mode);
    CHECK(r.fixed_points.empty());
    CHECK_FALSE(r.is_agreement);
    CHECK(r.disagreement_set == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(r.payoff == PayoffVector{Rational(1, 2), Rational(1, 2)});
  }
  CHECK(disagreement_set(g, s) == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("disagreement set collapses duplicates before averaging") {
  // s_1 and s_2 copy player 3, s_3 plays the opposite of player 1. There is
  // no fixed point; the responses cover all eight profiles, twelve times.
  std::vector<PayoffVector> payoffs(8, PayoffVector{0, 0, 0});
  payoffs[0] = {1, 0, 0};
  const Game g = Game::from_sizes({2, 2, 2}, payoffs);
  ConditionalProfile s{{0, {0, 1, 0, 1}}, {1, {0, 1, 0, 1}}, {2, {1, 1, 0, 0}}};
  const AgreementReport r = classify(g, s, kDominantAverage);
  CHECK(r.fixed_points.empty());
  CHECK(r.disagreement_set.size() == 8);
  // (0,0,0) arises from both player 1 and player 2 but counts once.
  CHECK(r.payoff == PayoffVector{Rational(1, 8), 0, 0});
}

TEST_CASE("constant profiles agree at their point in every mode") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sizes = testing::random_sizes(rng, testing::uniform_int(rng, 2, 3), 3);
    const Game g = testing::random_game(rng, sizes, 6);
    const ActionProfile a = g.profile_at(static_cast<std::size_t>(
        testing::uniform_int(rng, 0, static_cast<int>(g.num_profiles()) - 1)));
    const ConditionalProfile s = constant_profile(g, a);
    for (const auto& strategy : s) {
      CHECK(std::set<Action>(strategy.table.begin(), strategy.table.end()) ==
            std::set<Action>{a[strategy.owner]});
    }
    for (SemanticsMode mode : kAllModes) {
      const AgreementReport r = classify(g, s, mode);
      CHECK(r.is_agreement);
      CHECK(r.fixed_points == std::vector<std::size_t>{g.index_of(a)});
      CHECK(r.payoff == g.payoff(a));
    }
  }
}

TEST_CASE("strategy space sizes") {
  CHECK(strategy_space_size(binary_coordination(), 0) == 4);
  const Game fig = Game::from_sizes({2, 2, 2}, std::vector<PayoffVector>(8, {0, 0, 0}));
  CHECK(strategy_space_size(fig, 2) == 16);
  const Game three = Game::from_sizes({3, 3}, std::vector<PayoffVector>(9, {0, 0}));
  CHECK(strategy_space_size(three, 1) == 27);
  const Game big = Game::from_sizes({4, 4, 4}, std::vector<PayoffVector>(64, {0, 0, 0}));
  CHECK(strategy_space_size(big, 0).str() == "4294967296");
}

TEST_CASE("classification matches the definitions on random profiles") {
  Rng rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const auto sizes = testing::random_sizes(rng, testing::uniform_int(rng, 2, 3), 3);
    const Game g = testing::random_game(rng, sizes, 3);
    const ConditionalProfile s = trial % 2 ? testing::anchored_profile(rng, g)
                                           : testing::random_profile(rng, g);
    const auto naive = testing::naive_fixed_points(g, s);
    const auto fixed = fixed_points(g, s);
    REQUIRE(naive.size() == fixed.size());
    for (std::size_t k = 0; k < fixed.size(); ++k) {
      CHECK(g.profile_at(fixed[k]) == naive[k]);
    }
    for (std::size_t p = 0; p < g.num_profiles(); ++p) {
      CHECK(is_fixed_point(g, s, p) ==
            std::binary_search(fixed.begin(), fixed.end(), p));
    }
    for (SemanticsMode mode : kAllModes) {
      const AgreementReport r = classify(g, s, mode);
      CHECK(r.payoff == testing::naive_value(g, s, mode));
      if (r.is_agreement) {
        REQUIRE(r.dominant_point.has_value());
        CHECK(r.payoff == g.payoff(*r.dominant_point));
        for (std::size_t f : fixed) {
          CHECK(pareto_dominates_weakly(r.payoff, g.payoff(f)));
        }
        if (mode.agreement == AgreementRule::kUnique) CHECK(fixed.size() == 1);
      }
      if (!r.is_agreement && mode.disagreement == DisagreementRule::kAverage) {
        PayoffVector sum(g.num_players(), Rational(0));
        for (std::size_t p : r.disagreement_set) {
          for (int i = 0; i < g.num_players(); ++i) sum[i] += g.payoff(i, p);
        }
        for (int i = 0; i < g.num_players(); ++i) {
          CHECK(r.payoff[i] * static_cast<long>(r.disagreement_set.size()) == sum[i]);
        }
      }
    }
  }
}

}  // namespace
}  // namespace cse
