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

#include "cse/io.hpp"

#include <cstdint>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "cse/error.hpp"

namespace cse {
namespace {

using nlohmann::json;

const json& field(const json& object, const char* name, const std::string& where) {
  if (!object.is_object()) throw ParseError(where, "expected an object");
  auto it = object.find(name);
  if (it == object.end()) {
    throw ParseError(where, std::string("missing field '") + name + "'");
  }
  return *it;
}

std::string string_at(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where, "expected a string");
  return value.get<std::string>();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based; translate to a line number for the message.
    std::size_t line = 1;
    for (std::size_t b = 0; b + 1 < e.byte && b < text.size(); ++b) {
      if (text[b] == '\n') ++line;
    }
    throw ParseError("line " + std::to_string(line), e.what());
  }
}

int action_index(const Game& game, int player, const std::string& name,
                 const std::string& where) {
  for (Action a = 0; a < game.num_actions(player); ++a) {
    if (game.action_name(player, a) == name) return a;
  }
  throw ParseError(where, "unknown action '" + name + "' for player " +
                              game.player_name(player));
}

}  // namespace

json rational_to_json(const Rational& value) {
  if (is_integer(value)) {
    const Integer num = boost::multiprecision::numerator(value);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
      return json(num.convert_to<std::int64_t>());
    }
  }
  return json(to_string(value));
}

Rational rational_from_json(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned()
               ? Rational(Integer(value.get<std::uint64_t>()))
               : Rational(Integer(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where, e.what());
    }
  }
  if (value.is_number_float()) {
    throw ParseError(where, "floating-point payoffs are inexact; write \"p/q\"");
  }
  throw ParseError(where, "expected an integer or a \"p/q\" string");
}

json payoff_to_json(const PayoffVector& payoff) {
  json out = json::array();
  for (const auto& v : payoff) out.push_back(to_string(v));
  return out;
}

json profile_label_json(const Game& game, std::size_t index) {
  json out = json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    out.push_back(game.action_name(i, game.action_at(i, index)));
  }
  return out;
}

Game game_from_json(const json& document) {
  const std::string root = "game";
  std::string title;
  if (document.is_object() && document.contains("title")) {
    title = string_at(document["title"], root + ".title");
  }
  const json& players_json = field(document, "players", root);
  const json& actions_json = field(document, "actions", root);
  const json& payoffs_json = field(document, "payoffs", root);
  if (!players_json.is_array()) throw ParseError("game.players", "expected an array");
  if (!actions_json.is_array()) throw ParseError("game.actions", "expected an array");
  if (!payoffs_json.is_array()) throw ParseError("game.payoffs", "expected an array");

  std::vector<std::string> players;
  for (std::size_t i = 0; i < players_json.size(); ++i) {
    players.push_back(
        string_at(players_json[i], "game.players[" + std::to_string(i) + "]"));
  }
  std::vector<std::vector<std::string>> actions;
  for (std::size_t i = 0; i < actions_json.size(); ++i) {
    const std::string where = "game.actions[" + std::to_string(i) + "]";
    if (!actions_json[i].is_array()) throw ParseError(where, "expected an array");
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (std::size_t a = 0; a < actions_json[i].size(); ++a) {
      names.push_back(string_at(actions_json[i][a],
                                where + "[" + std::to_string(a) + "]"));
      if (!seen.insert(names.back()).second) {
        throw ParseError(where, "duplicate action '" + names.back() + "'");
      }
    }
    actions.push_back(std::move(names));
  }
  std::vector<PayoffVector> payoffs;
  for (std::size_t k = 0; k < payoffs_json.size(); ++k) {
    const std::string where = "game.payoffs[" + std::to_string(k) + "]";
    if (!payoffs_json[k].is_array()) throw ParseError(where, "expected an array");
    PayoffVector u;
    for (std::size_t i = 0; i < payoffs_json[k].size(); ++i) {
      u.push_back(rational_from_json(payoffs_json[k][i],
                                     where + "[" + std::to_string(i) + "]"));
    }
    payoffs.push_back(std::move(u));
  }
  return Game(std::move(players), std::move(actions), std::move(payoffs),
              std::move(title));
}

Game parse_game(std::string_view text) { return game_from_json(parse_json(text)); }

json game_to_json(const Game& game) {
  json out = json::object();
  if (!game.title().empty()) out["title"] = game.title();
  out["players"] = game.player_names();
  out["actions"] = game.action_names();
  json payoffs = json::array();
  for (const auto& u : game.payoffs()) {
    json row = json::array();
    for (const auto& v : u) row.push_back(rational_to_json(v));
    payoffs.push_back(std::move(row));
  }
  out["payoffs"] = std::move(payoffs);
  return out;
}

std::string serialize_game(const Game& game) {
  auto inline_array = [](const json& value) {
    std::string s = "[";
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i > 0) s += ", ";
      s += value[i].dump();
    }
    return s + "]";
  };
  const json doc = game_to_json(game);
  std::ostringstream out;
  out << "{\n";
  if (doc.contains("title")) out << "  \"title\": " << doc["title"].dump() << ",\n";
  out << "  \"players\": " << inline_array(doc["players"]) << ",\n";
  out << "  \"actions\": [";
  for (std::size_t i = 0; i < doc["actions"].size(); ++i) {
    out << (i > 0 ? ", " : "") << inline_array(doc["actions"][i]);
  }
  out << "],\n";
  out << "  \"payoffs\": [\n";
  const json& payoffs = doc["payoffs"];
  for (std::size_t k = 0; k < payoffs.size(); ++k) {
    out << "    " << inline_array(payoffs[k])
        << (k + 1 < payoffs.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

ConditionalProfile profile_from_json(const Game& game, const json& document) {
  const json& strategies = field(document, "strategies", "profile");
  if (!strategies.is_array() ||
      static_cast<int>(strategies.size()) != game.num_players()) {
    throw ParseError("profile.strategies",
                     "expected one strategy per player (" +
                         std::to_string(game.num_players()) + ")");
  }
  ConditionalProfile profile;
  for (int i = 0; i < game.num_players(); ++i) {
    const std::string where = "profile.strategies[" + std::to_string(i) + "]";
    const json& entry = strategies[i];
    if (entry.is_object() && entry.contains("player") &&
        string_at(entry["player"], where + ".player") != game.player_name(i)) {
      throw ParseError(where, "expected player " + game.player_name(i));
    }
    const json& table = field(entry, "table", where);
    if (!table.is_array()) throw ParseError(where + ".table", "expected an array");
    ConditionalStrategy strategy{i, std::vector<Action>(
                                        game.num_opponent_profiles(i), -1)};
    for (std::size_t r = 0; r < table.size(); ++r) {
      const std::string row = where + ".table[" + std::to_string(r) + "]";
      const json& given = field(table[r], "given", row);
      if (!given.is_array() ||
          static_cast<int>(given.size()) != game.num_players() - 1) {
        throw ParseError(row + ".given", "expected " +
                                             std::to_string(game.num_players() - 1) +
                                             " opponent actions");
      }
      ActionProfile opponents;
      int g = 0;
      for (int j = 0; j < game.num_players(); ++j) {
        if (j == i) continue;
        opponents.push_back(action_index(
            game, j, string_at(given[g], row + ".given"), row + ".given"));
        ++g;
      }
      const std::size_t x = game.opponent_index_of(i, opponents);
      if (strategy.table[x] != -1) {
        throw ParseError(row, "opponent profile listed twice");
      }
      strategy.table[x] =
          action_index(game, i, string_at(field(table[r], "play", row), row + ".play"),
                       row + ".play");
    }
    for (std::size_t x = 0; x < strategy.table.size(); ++x) {
      if (strategy.table[x] == -1) {
        throw ParseError(where + ".table", "missing opponent profile #" +
                                               std::to_string(x));
      }
    }
    profile.push_back(std::move(strategy));
  }
  return profile;
}

ConditionalProfile parse_profile(const Game& game, std::string_view text) {
  return profile_from_json(game, parse_json(text));
}

json profile_to_json(const Game& game, const ConditionalProfile& profile) {
  json strategies = json::array();
  for (const auto& strategy : profile) {
    const int i = strategy.owner;
    json table = json::array();
    for (std::size_t x = 0; x < strategy.table.size(); ++x) {
      json given = json::array();
      const ActionProfile opponents = game.opponent_profile_at(i, x);
      int g = 0;
      for (int j = 0; j < game.num_players(); ++j) {
        if (j == i) continue;
        given.push_back(game.action_name(j, opponents[g++]));
      }
      table.push_back({{"given", std::move(given)},
                       {"play", game.action_name(i, strategy.table[x])}});
    }
    strategies.push_back(
        {{"player", game.player_name(i)}, {"table", std::move(table)}});
  }
  return {{"strategies", std::move(strategies)}};
}

SimpleConditionalMixedStrategy parse_sigma(std::string_view text) {
  const json doc = parse_json(text);
  const json& actions_json = field(doc, "actions", "sigma");
  const json& cells_json = field(doc, "cells", "sigma");
  if (!actions_json.is_array()) throw ParseError("sigma.actions", "expected an array");
  if (!cells_json.is_array()) throw ParseError("sigma.cells", "expected an array");
  int owner = 0;
  if (doc.contains("owner")) {
    if (!doc["owner"].is_number_integer() || doc["owner"].get<int>() < 1) {
      throw ParseError("sigma.owner", "expected a 1-based player number");
    }
    owner = doc["owner"].get<int>() - 1;
  }
  std::vector<std::string> actions;
  for (std::size_t a = 0; a < actions_json.size(); ++a) {
    actions.push_back(
        string_at(actions_json[a], "sigma.actions[" + std::to_string(a) + "]"));
  }
  PartitionSpec partition;
  std::vector<Distribution> cells;
  for (std::size_t l = 0; l < cells_json.size(); ++l) {
    const std::string where = "sigma.cells[" + std::to_string(l) + "]";
    if (cells_json[l].is_object() && cells_json[l].contains("label")) {
      partition.labels.push_back(string_at(cells_json[l]["label"], where + ".label"));
    } else {
      partition.labels.push_back("X" + std::to_string(l + 1));
    }
    const json& dist = field(cells_json[l], "distribution", where);
    if (!dist.is_array()) throw ParseError(where + ".distribution", "expected an array");
    Distribution mu;
    for (std::size_t a = 0; a < dist.size(); ++a) {
      mu.push_back(rational_from_json(
          dist[a], where + ".distribution[" + std::to_string(a) + "]"));
    }
    cells.push_back(std::move(mu));
  }
  return SimpleConditionalMixedStrategy(owner, std::move(actions),
                                        std::move(partition), std::move(cells));
}

}  // namespace cse
