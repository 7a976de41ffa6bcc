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

#include <map>
#include <numeric>
#include <vector>

#include "doctest.h"

#include "cse/error.hpp"
#include "cse/mixed_extension.hpp"
#include "support/random_games.hpp"

namespace cse {
namespace {

SimpleConditionalMixedStrategy make_sigma(std::vector<std::string> actions,
                                          std::vector<Distribution> cells) {
  PartitionSpec partition;
  for (std::size_t l = 0; l < cells.size(); ++l) {
    partition.labels.push_back("X" + std::to_string(l + 1));
  }
  return SimpleConditionalMixedStrategy(0, std::move(actions), partition,
                                        std::move(cells));
}

TEST_CASE("hand example decomposes into the product measure") {
  const auto sigma = make_sigma({"H", "T"}, {{Rational(1, 2), Rational(1, 2)}, {1, 0}});
  const FiniteSupportMeasure mu = decompose(sigma);
  REQUIRE(mu.atoms.size() == 4);
  CHECK(mu.atoms[0].actions == std::vector<int>{0, 0});
  CHECK(mu.atoms[0].weight == Rational(1, 2));
  CHECK(mu.atoms[1].weight == 0);
  CHECK(mu.atoms[2].actions == std::vector<int>{1, 0});
  CHECK(mu.atoms[2].weight == Rational(1, 2));
  CHECK(mu.atoms[3].weight == 0);
  CHECK(phi_evaluate(mu, 0) == Distribution{Rational(1, 2), Rational(1, 2)});
  CHECK(phi_evaluate(mu, "X2") == Distribution{1, 0});
  CHECK(verify_roundtrip(sigma));

  const FiniteSupportMeasure pruned = decompose(sigma, /*prune_zero=*/true);
  CHECK(pruned.atoms.size() == 2);
  CHECK(phi_evaluate(pruned, 1) == Distribution{1, 0});
}

TEST_CASE("single-cell and point-mass strategies") {
  const auto constant = make_sigma({"a", "b", "c"}, {{Rational(1, 6), Rational(1, 3),
                                                       Rational(1, 2)}});
  const FiniteSupportMeasure mu = decompose(constant);
  REQUIRE(mu.atoms.size() == 3);
  for (int a = 0; a < 3; ++a) {
    CHECK(mu.atoms[a].weight == constant.cell_distribution(0)[a]);
  }
  CHECK(verify_roundtrip(constant));

  const auto pure = make_sigma({"a", "b"}, {{0, 1}, {1, 0}, {0, 1}});
  const FiniteSupportMeasure point = decompose(pure, true);
  REQUIRE(point.atoms.size() == 1);
  CHECK(point.atoms[0].actions == std::vector<int>{1, 0, 1});
  CHECK(point.atoms[0].weight == 1);
  CHECK(phi_evaluate(point, 2) == Distribution{0, 1});
}

TEST_CASE("uniform cells give a uniform product") {
  const Rational third(1, 3);
  const auto sigma = make_sigma({"a", "b", "c"}, {{third, third, third},
                                                  {third, third, third}});
  const FiniteSupportMeasure mu = decompose(sigma);
  for (const auto& atom : mu.atoms) CHECK(atom.weight == Rational(1, 9));
  CHECK(phi_evaluate(mu, 1) == Distribution{third, third, third});
}

TEST_CASE("invalid strategies and cells are rejected") {
  CHECK_THROWS_AS(make_sigma({"a", "b"}, {{Rational(1, 2), Rational(1, 3)}}),
                  InvalidArgument);
  CHECK_THROWS_AS(make_sigma({"a", "b"}, {{Rational(3, 2), Rational(-1, 2)}}),
                  InvalidArgument);
  CHECK_THROWS_AS(make_sigma({"a", "b"}, {{1}}), InvalidArgument);
  CHECK_THROWS_AS(make_sigma({"a", "b"}, {}), InvalidArgument);
  const auto sigma = make_sigma({"a", "b"}, {{1, 0}});
  const FiniteSupportMeasure mu = decompose(sigma);
  CHECK_THROWS_AS(phi_evaluate(mu, 1), UnknownCell);
  CHECK_THROWS_AS(phi_evaluate(mu, "X9"), UnknownCell);
  CHECK_THROWS_AS(sigma.partition().cell_index("nope"), UnknownCell);
  const auto wide = make_sigma({"a", "b", "c"}, std::vector<Distribution>(
                                                    13, Distribution{1, 0, 0}));
  CHECK_THROWS_AS(decompose(wide, false, 1000), BudgetExceeded);
}

TEST_CASE("membership predicates pick the cell") {
  PartitionSpec partition;
  partition.labels = {"low", "high"};
  // Cell by whether the single opponent plays its first action with
  // probability at least 1/2.
  partition.membership = [](const MixedOpponentProfile& q) -> std::size_t {
    return q[0][0] >= Rational(1, 2) ? 1 : 0;
  };
  const SimpleConditionalMixedStrategy sigma(
      1, {"L", "R"}, partition, {{1, 0}, {Rational(1, 4), Rational(3, 4)}});
  CHECK(sigma({{Rational(1, 3), Rational(2, 3)}}) == Distribution{1, 0});
  CHECK(sigma({{Rational(1, 2), Rational(1, 2)}}) ==
        Distribution{Rational(1, 4), Rational(3, 4)});
  CHECK(sigma.partition().cell_index("high") == 1);
}

TEST_CASE("random strategies round-trip with exact marginals") {
  testing::Rng rng(301);
  for (int trial = 0; trial < 200; ++trial) {
    const int num_actions = testing::uniform_int(rng, 1, 3);
    const int cells = testing::uniform_int(rng, 1, 3);
    std::vector<std::string> actions;
    for (int a = 0; a < num_actions; ++a) actions.push_back("a" + std::to_string(a));
    std::vector<Distribution> dists;
    for (int l = 0; l < cells; ++l) {
      const int den = testing::uniform_int(rng, 1, 12);
      std::vector<int> parts(num_actions, 0);
      for (int unit = 0; unit < den; ++unit) {
        ++parts[testing::uniform_int(rng, 0, num_actions - 1)];
      }
      Distribution d;
      for (int part : parts) d.push_back(Rational(part, den));
      dists.push_back(d);
    }
    const auto sigma = make_sigma(actions, dists);
    const FiniteSupportMeasure mu = decompose(sigma);
    std::size_t expected = 1;
    for (int l = 0; l < cells; ++l) expected *= num_actions;
    CHECK(mu.atoms.size() == expected);
    Rational total = 0;
    for (const auto& atom : mu.atoms) {
      CHECK(atom.weight >= 0);
      total += atom.weight;
    }
    CHECK(total == 1);
    // Marginal consistency, summed by hand.
    for (int l = 0; l < cells; ++l) {
      std::map<int, Rational> marginal;
      for (const auto& atom : mu.atoms) marginal[atom.actions[l]] += atom.weight;
      for (int a = 0; a < num_actions; ++a) CHECK(marginal[a] == dists[l][a]);
      CHECK(phi_evaluate(mu, l) == dists[l]);
    }
    CHECK(verify_roundtrip(sigma));
  }
}

}  // namespace
}  // namespace cse
