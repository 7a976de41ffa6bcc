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

#ifndef CSE_IO_HPP_
#define CSE_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "cse/conditional.hpp"
#include "cse/game.hpp"
#include "cse/mixed_extension.hpp"

namespace cse {

// Game file (JSON):
//   {
//     "title": "...",                      (optional)
//     "players": ["P1", "P2"],
//     "actions": [["C", "D"], ["C", "D"]],
//     "payoffs": [[3, 3], [0, 4], [4, 0], [1, 1]]
//   }
// payoffs[k] belongs to the profile whose mixed-radix index (player 1 most
// significant, last player fastest) is k. Each value is an integer or a
// string "p/q".
Game parse_game(std::string_view text);
Game game_from_json(const nlohmann::json& document);
nlohmann::json game_to_json(const Game& game);
// Canonical text form: parse_game(serialize_game(g)) == g, and
// serialize_game(parse_game(t)) == t for canonical t.
std::string serialize_game(const Game& game);

// Legacy .nfg import, payoff-list variant only:
//   NFG 1 R "title" { "P1" "P2" } { 2 2 }
//   <payoffs, first player's action fastest>
// The strategy block may also list names: { { "C" "D" } { "L" "R" } }.
// Outcome-based files throw UnsupportedNfgFeature.
Game import_nfg(std::string_view text);

// Profile file (JSON):
//   {"strategies": [{"player": "P1",
//                    "table": [{"given": ["C"], "play": "D"}, ...]}, ...]}
// `given` lists opponent action names in ascending player order; each
// opponent profile must appear exactly once.
ConditionalProfile parse_profile(const Game& game, std::string_view text);
ConditionalProfile profile_from_json(const Game& game,
                                     const nlohmann::json& document);
nlohmann::json profile_to_json(const Game& game,
                               const ConditionalProfile& profile);

// Sigma file (JSON):
//   {"owner": 1, "actions": ["H", "T"],
//    "cells": [{"label": "X1", "distribution": ["1/2", "1/2"]}, ...]}
// "owner" defaults to 1 and a missing label to X<l>.
SimpleConditionalMixedStrategy parse_sigma(std::string_view text);

nlohmann::json rational_to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& value,
                            const std::string& where);
nlohmann::json payoff_to_json(const PayoffVector& payoff);
nlohmann::json profile_label_json(const Game& game, std::size_t index);

}  // namespace cse

#endif  // CSE_IO_HPP_
