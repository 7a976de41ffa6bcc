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

#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "cse/conditional.hpp"
#include "cse/error.hpp"
#include "cse/io.hpp"
#include "support/oracles.hpp"
#include "support/random_games.hpp"

namespace cse {
namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(CSE_DATA_DIR) + "/games/" + name);
  REQUIRE(in);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST_CASE("golden corpus round-trips byte for byte") {
  for (const char* name : {"fig1.json", "pd.json", "matching_pennies.json",
                           "coordination.json"}) {
    CAPTURE(name);
    const std::string text = read_data(name);
    const Game g = parse_game(text);
    CHECK(serialize_game(g) == text);
    CHECK(parse_game(serialize_game(g)) == g);
  }
}

TEST_CASE("the three-player file reads in nested-matrix order") {
  const Game g = parse_game(read_data("fig1.json"));
  CHECK(g.num_players() == 3);
  CHECK(g.payoff({1, 0, 1}) == PayoffVector{1, 0, 2});  // (y,A,R)
  CHECK(g.payoff({0, 1, 0}) == PayoffVector{0, 2, 1});  // (x,B,L)
  CHECK(g.player_name(2) == "P3");
  CHECK(g.action_name(1, 1) == "B");
}

TEST_CASE("legacy import matches the native encoding") {
  const Game native = parse_game(read_data("pd.json"));
  const Game legacy = import_nfg(read_data("pd.nfg"));
  CHECK(legacy == native);

  // Three players with counts only; payoffs listed first-player-fastest.
  const Game fig = parse_game(read_data("fig1.json"));
  std::string nfg = "NFG 1 R \"\" { \"P1\" \"P2\" \"P3\" } { 2 2 2 }\n";
  for (int c = 0; c < 2; ++c) {
    for (int b = 0; b < 2; ++b) {
      for (int a = 0; a < 2; ++a) {
        for (const auto& v : fig.payoff({a, b, c})) nfg += to_string(v) + " ";
      }
    }
  }
  const Game imported = import_nfg(nfg);
  for (std::size_t p = 0; p < fig.num_profiles(); ++p) {
    CHECK(imported.payoff(p) == fig.payoff(p));
  }
  CHECK(import_nfg("NFG 1 R \"t\" { \"a\" \"b\" } { 1 1 } \"comment\" 1.5 2e1")
            .payoff(0) == PayoffVector{Rational(3, 2), 20});
}

TEST_CASE("legacy import errors") {
  CHECK_THROWS_AS(import_nfg("NFG 1 R \"t\" { \"a\" \"b\" } { 2 1 }\n"
                             "{ { \"o1\" 1, 2 } { \"o2\" 3, 4 } }\n1 2"),
                  UnsupportedNfgFeature);
  CHECK_THROWS_AS(import_nfg("NFG 1 R \"t\" { \"solo\" } { 2 } 1 2"), ArityMismatch);
  CHECK_THROWS_AS(import_nfg("NFG 1 R \"t\" { \"a\" \"b\" } { 1 1 } 1 -2"),
                  NegativePayoff);
  CHECK_THROWS_AS(import_nfg("NFG 1 R \"t\" { \"a\" \"b\" } { 1 1 } 1"), ArityMismatch);
  CHECK_THROWS_AS(import_nfg("GAME"), ParseError);
}

TEST_CASE("exact payoffs and parse errors") {
  const Game g = parse_game(R"({"players": ["A", "B"], "actions": [["u"], ["v"]],
                                "payoffs": [["1/3", 2]]})");
  CHECK(g.payoff(0, 0) == Rational(1, 3));
  CHECK(serialize_game(g).find("\"1/3\"") != std::string::npos);
  CHECK(parse_game(serialize_game(g)) == g);

  CHECK_THROWS_AS(parse_game(R"({"players": ["A", "B"], "actions": [["u"], ["v"]],
                                 "payoffs": [["-1", 2]]})"),
                  NegativePayoff);
  CHECK_THROWS_AS(parse_game(R"({"players": ["A", "B"], "actions": [["u"], ["v"]],
                                 "payoffs": [[1, 2, 3]]})"),
                  ArityMismatch);
  CHECK_THROWS_AS(parse_game(R"({"players": ["A", "B"], "actions": [["u"], ["v"]],
                                 "payoffs": [[1.5, 2]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_game(R"({"players": ["A", "B"], "actions": [["u", "u"], ["v"]],
                                 "payoffs": [[1, 2], [1, 2]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_game(R"({"players": ["A", "B"], "actions": [["u"], ["v"]]})"),
                  ParseError);
  try {
    parse_game("{\n  \"players\": [\"A\",\n  oops\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("payoff list order matches an independent mixed-radix index") {
  testing::Rng rng(401);
  for (int trial = 0; trial < 40; ++trial) {
    const auto sizes = testing::random_sizes(rng, testing::uniform_int(rng, 2, 4), 3);
    const Game g = testing::random_game(rng, sizes, 9);
    const auto doc = nlohmann::json::parse(serialize_game(g));
    const Game back = parse_game(serialize_game(g));
    CHECK(back == g);
    for (const auto& a : testing::all_profiles(sizes)) {
      const std::size_t k = testing::naive_index(sizes, a);
      for (int i = 0; i < g.num_players(); ++i) {
        CHECK(Rational(doc["payoffs"][k][i].get<int>()) == g.payoff(a)[i]);
      }
    }
  }
}

TEST_CASE("profile files round-trip and reject partial tables") {
  const Game g = parse_game(read_data("fig1.json"));
  testing::Rng rng(403);
  for (int trial = 0; trial < 20; ++trial) {
    const ConditionalProfile s = testing::random_profile(rng, g);
    CHECK(parse_profile(g, profile_to_json(g, s).dump()) == s);
  }
  const auto doc = profile_to_json(g, constant_profile(g, {0, 0, 0}));
  CHECK(doc["strategies"][1]["table"][2]["given"] == nlohmann::json{"y", "L"});

  auto missing = doc;
  missing["strategies"][0]["table"].erase(1);
  CHECK_THROWS_AS(profile_from_json(g, missing), ParseError);
  auto twice = doc;
  twice["strategies"][0]["table"][1] = twice["strategies"][0]["table"][0];
  CHECK_THROWS_AS(profile_from_json(g, twice), ParseError);
  auto unknown = doc;
  unknown["strategies"][2]["table"][0]["play"] = "Z";
  CHECK_THROWS_AS(profile_from_json(g, unknown), ParseError);
}

TEST_CASE("sigma files") {
  const auto sigma = parse_sigma(R"({"owner": 2, "actions": ["H", "T"],
      "cells": [{"label": "left", "distribution": ["1/2", "1/2"]},
                {"distribution": [1, 0]}]})");
  CHECK(sigma.owner() == 1);
  CHECK(sigma.num_cells() == 2);
  CHECK(sigma.partition().labels[0] == "left");
  CHECK(sigma.partition().labels[1] == "X2");
  CHECK(sigma.cell_distribution(0)[1] == Rational(1, 2));
  CHECK_THROWS_AS(parse_sigma(R"({"actions": ["H"], "cells": [{"distribution": ["1/2"]}]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_sigma(R"({"owner": 0, "actions": ["H"],
                                  "cells": [{"distribution": [1]}]})"),
                  ParseError);
}

TEST_CASE("rational JSON helpers") {
  CHECK(rational_to_json(Rational(3)) == nlohmann::json(3));
  CHECK(rational_to_json(Rational(1, 2)) == nlohmann::json("1/2"));
  CHECK(payoff_to_json({Rational(1, 2), 2}) == nlohmann::json{"1/2", "2"});
  CHECK(rational_from_json(nlohmann::json("4/8"), "x") == Rational(1, 2));
  CHECK_THROWS_AS(rational_from_json(nlohmann::json(0.5), "x"), ParseError);
}

}  // namespace
}  // namespace cse
