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

#include "cse/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cse/conditional.hpp"
#include "cse/constructors.hpp"
#include "cse/deviation.hpp"
#include "cse/error.hpp"
#include "cse/game.hpp"
#include "cse/io.hpp"
#include "cse/mixed_extension.hpp"

namespace cse {
namespace {

using nlohmann::json;

struct Options {
  std::string command;
  std::string game_path;
  std::string profile_path;
  std::string report_path;
  std::string sigma_path;
  std::string target;
  std::string mode = "dominant";
  std::string disagreement = "zero";
  std::uint64_t budget = 0;
  bool json_output = false;
  bool exhaustive = false;
  bool prune = false;
  std::string out_path;
  bool mode_given = false;
};

struct Budgets {
  std::uint64_t brute_force = kDefaultBruteForceBudget;
  std::uint64_t enumeration = kDefaultEnumerationBudget;
  std::uint64_t decompose = kDefaultDecomposeBudget;
};

Budgets resolve_budgets(const Options& options) {
  Budgets budgets;
  std::uint64_t override_value = 0;
  if (const char* env = std::getenv("CSE_BUDGET"); env != nullptr && *env) {
    try {
      override_value = std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("CSE_BUDGET is not a number: ") + env);
    }
  }
  if (options.budget > 0) override_value = options.budget;
  if (override_value > 0) {
    budgets.brute_force = budgets.enumeration = budgets.decompose = override_value;
  }
  return budgets;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write '" + temp + "'");
    out << content;
    if (!out) throw InvalidArgument("failed writing '" + temp + "'");
  }
  std::filesystem::rename(temp, path);
}

Game load_game(const std::string& path) {
  if (path.empty()) throw InvalidArgument("--game is required");
  const std::string text = read_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".nfg") {
    return import_nfg(text);
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error&) {
    return parse_game(text);  // reports the parse position
  }
  if (doc.is_object() && doc.contains("game") && !doc.contains("players")) {
    return game_from_json(doc["game"]);
  }
  return game_from_json(doc);
}

SemanticsMode parse_mode(const Options& options) {
  SemanticsMode mode;
  if (options.mode == "dominant") {
    mode.agreement = AgreementRule::kDominant;
  } else if (options.mode == "unique") {
    mode.agreement = AgreementRule::kUnique;
  } else {
    throw InvalidArgument("--mode must be dominant or unique");
  }
  if (options.disagreement == "zero") {
    mode.disagreement = DisagreementRule::kZero;
  } else if (options.disagreement == "average") {
    mode.disagreement = DisagreementRule::kAverage;
  } else {
    throw InvalidArgument("--disagreement must be zero or average");
  }
  return mode;
}

SemanticsMode mode_from_json(const json& doc) {
  SemanticsMode mode;
  const std::string agreement = doc.at("agreement").get<std::string>();
  const std::string disagreement = doc.at("disagreement").get<std::string>();
  mode.agreement =
      agreement == "unique" ? AgreementRule::kUnique : AgreementRule::kDominant;
  mode.disagreement = disagreement == "average" ? DisagreementRule::kAverage
                                                : DisagreementRule::kZero;
  return mode;
}

json mode_to_json(SemanticsMode mode) {
  return {{"agreement", to_string(mode.agreement)},
          {"disagreement", to_string(mode.disagreement)}};
}

ActionProfile parse_target(const Game& game, const std::string& text) {
  if (text.empty()) throw InvalidArgument("--target is required");
  std::vector<std::string> names;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) names.push_back(item);
  if (static_cast<int>(names.size()) != game.num_players()) {
    throw InvalidArgument("--target needs one action per player");
  }
  ActionProfile target;
  for (int i = 0; i < game.num_players(); ++i) {
    Action found = -1;
    for (Action a = 0; a < game.num_actions(i); ++a) {
      if (game.action_name(i, a) == names[i]) found = a;
    }
    if (found < 0) {
      throw InvalidArgument("unknown action '" + names[i] + "' for " +
                            game.player_name(i));
    }
    target.push_back(found);
  }
  return target;
}

json certificate_to_json(const Game& game, const DeviationCertificate& c) {
  json out = {{"verdict", to_string(c.verdict)},
              {"mode", mode_to_json(c.mode)},
              {"baseline", payoff_to_json(c.baseline)}};
  if (c.verdict == Verdict::kDeviationFound) {
    json deviators = json::array();
    for (int j : c.deviators) deviators.push_back(game.player_name(j));
    out["deviators"] = std::move(deviators);
    json tables = json::array();
    for (const auto& table : c.deviation) {
      json row = json::array();
      for (Action a : table.table) row.push_back(game.action_name(table.owner, a));
      tables.push_back(std::move(row));
    }
    out["deviation_tables"] = std::move(tables);
    out["agreement_point"] = c.agreement_point
                                 ? profile_label_json(game, *c.agreement_point)
                                 : json(nullptr);
    out["deviated_payoff"] = payoff_to_json(c.deviated_payoff);
    out["gains"] = payoff_to_json(c.gains);
  }
  return out;
}

json construction_to_json(const Game& game, const ConstructionResult& r) {
  json out = {{"construction", to_string(r.construction)},
              {"construction_mode", mode_to_json(r.mode)},
              {"notes", r.notes},
              {"profile", profile_to_json(game, r.profile)}};
  if (r.intended_point) {
    out["intended_point"] = profile_label_json(game, *r.intended_point);
  } else {
    out["intended_point"] = nullptr;
  }
  out["payoff"] = payoff_to_json(classify(game, r.profile, r.mode).payoff);
  return out;
}

json compact_tables(const Game& game, const ConditionalProfile& profile) {
  json out = json::array();
  for (const auto& s : profile) {
    json row = json::array();
    for (Action a : s.table) row.push_back(game.action_name(s.owner, a));
    out.push_back(std::move(row));
  }
  return out;
}

struct Outcome {
  json result;
  int exit_code = 0;
  std::vector<std::string> summary;  // human-readable lines
  std::optional<SemanticsMode> mode;  // when it differs from the flags
};

std::string verdict_line(const Game& game, const DeviationCertificate& c) {
  std::string line = "verdict: " + to_string(c.verdict);
  if (c.verdict == Verdict::kDeviationFound) {
    line += " by";
    for (int j : c.deviators) line += " " + game.player_name(j);
    if (c.agreement_point) line += " reaching " + game.profile_label(*c.agreement_point);
  }
  return line;
}

void describe_construction(const Game& game, const ConstructionResult& r,
                           std::vector<std::string>& lines) {
  lines.push_back("construction: " + to_string(r.construction) + " (" +
                  to_string(r.mode) + ")");
  lines.push_back("intended point: " + (r.intended_point
                                            ? game.profile_label(*r.intended_point)
                                            : std::string("none")));
  std::string payoff = "payoff U:";
  for (const auto& v : classify(game, r.profile, r.mode).payoff) {
    payoff += " " + to_string(v);
  }
  lines.push_back(payoff);
  for (const auto& note : r.notes) lines.push_back("  " + note);
  for (const auto& s : r.profile) {
    std::string row = "  " + game.player_name(s.owner) + ":";
    for (std::size_t x = 0; x < s.table.size(); ++x) {
      const ActionProfile opp = game.opponent_profile_at(s.owner, x);
      std::string given;
      int g = 0;
      for (int j = 0; j < game.num_players(); ++j) {
        if (j == s.owner) continue;
        given += (given.empty() ? "" : ",") + game.action_name(j, opp[g++]);
      }
      row += " " + given + "->" + game.action_name(s.owner, s.table[x]);
    }
    lines.push_back(row);
  }
}

Outcome finish_construction(const Game& game, const ConstructionResult& built,
                            const DeviationCertificate& certificate) {
  Outcome outcome;
  outcome.result = construction_to_json(game, built);
  outcome.result["verification"] = certificate_to_json(game, certificate);
  describe_construction(game, built, outcome.summary);
  outcome.summary.push_back(verdict_line(game, certificate));
  outcome.exit_code = certificate.verdict == Verdict::kNoProfitableDeviation ? 0 : 2;
  return outcome;
}

Outcome run_verify(const Options& options, const Game& game, SemanticsMode mode,
                   const Budgets& budgets, bool strong) {
  ConditionalProfile profile;
  std::optional<std::string> embedded;
  if (!options.report_path.empty()) {
    const json report = json::parse(read_file(options.report_path));
    profile = profile_from_json(game, report.at("result").at("profile"));
    if (!options.mode_given && report.contains("mode")) {
      mode = mode_from_json(report["mode"]);
    }
    const json& result = report.at("result");
    if (result.contains("verification")) {
      embedded = result["verification"].at("verdict").get<std::string>();
    }
  } else {
    if (options.profile_path.empty()) {
      throw InvalidArgument("--profile or --report is required");
    }
    profile = parse_profile(game, read_file(options.profile_path));
  }
  validate(game, profile);
  const DeviationCertificate certificate =
      strong ? is_strong_ce(game, profile, mode)
             : is_cse(game, profile, mode, budgets.brute_force);
  const AgreementReport report = classify(game, profile, mode);

  Outcome outcome;
  outcome.result = {{"profile", profile_to_json(game, profile)},
                    {"agreement", report.is_agreement},
                    {"agreement_point", report.dominant_point
                                            ? profile_label_json(game, *report.dominant_point)
                                            : json(nullptr)},
                    {"payoff", payoff_to_json(report.payoff)},
                    {"verification", certificate_to_json(game, certificate)}};
  json fixed = json::array();
  for (std::size_t k : report.fixed_points) fixed.push_back(profile_label_json(game, k));
  outcome.result["fixed_points"] = std::move(fixed);
  outcome.summary.push_back(std::string(strong ? "strong " : "") +
                            "check under " + to_string(mode));
  outcome.summary.push_back(
      "agreement: " + std::string(report.is_agreement ? "yes at " : "no") +
      (report.dominant_point ? game.profile_label(*report.dominant_point) : ""));
  outcome.summary.push_back(verdict_line(game, certificate));
  outcome.exit_code = certificate.verdict == Verdict::kNoProfitableDeviation ? 0 : 2;
  outcome.mode = mode;
  if (embedded) {
    const bool match = *embedded == to_string(certificate.verdict);
    outcome.result["matches_embedded_verdict"] = match;
    outcome.summary.push_back(std::string("embedded verdict ") +
                              (match ? "reproduced" : "NOT reproduced"));
    if (!match) outcome.exit_code = 1;
  }
  return outcome;
}

Outcome run_verify_strong_exhaustive(const Game& game, SemanticsMode mode,
                                     const Budgets& budgets) {
  const Integer count = conditional_profile_count(game);
  if (count > budgets.enumeration) {
    throw BudgetExceeded("conditional profile space", count.str(),
                         budgets.enumeration);
  }
  std::uint64_t total = 0;
  json strong = json::array();
  for_each_profile(game, [&](const ConditionalProfile& profile) {
    ++total;
    if (is_strong_ce(game, profile, mode).verdict ==
        Verdict::kNoProfitableDeviation) {
      strong.push_back(compact_tables(game, profile));
    }
    return true;
  });
  Outcome outcome;
  outcome.result = {{"profiles_checked", total},
                    {"strong_ce_count", strong.size()},
                    {"strong_ce", strong}};
  outcome.summary.push_back(std::to_string(strong.size()) + " strong CE among " +
                            std::to_string(total) + " profiles (" +
                            to_string(mode) + ")");
  return outcome;
}

Outcome run_enumerate(const Game& game, SemanticsMode mode, const Budgets& budgets) {
  const auto entries = enumerate_cse(game, mode, budgets.enumeration);
  json list = json::array();
  std::vector<std::size_t> points;
  for (const auto& e : entries) {
    list.push_back({{"tables", compact_tables(game, e.profile)},
                    {"payoff", payoff_to_json(e.payoff)},
                    {"agreement_point", e.agreement_point
                                            ? profile_label_json(game, *e.agreement_point)
                                            : json(nullptr)}});
    if (e.agreement_point) points.push_back(*e.agreement_point);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  json supported = json::array();
  Outcome outcome;
  outcome.summary.push_back(std::to_string(entries.size()) + " CSE among " +
                            conditional_profile_count(game).str() +
                            " profiles (" + to_string(mode) + ")");
  std::string line = "agreement points:";
  for (std::size_t p : points) {
    supported.push_back(profile_label_json(game, p));
    line += " " + game.profile_label(p);
  }
  outcome.summary.push_back(line);
  outcome.result = {{"profiles_checked", conditional_profile_count(game).str()},
                    {"cse_count", entries.size()},
                    {"agreement_points", supported},
                    {"equilibria", list}};
  return outcome;
}

Outcome run_mixed_decompose(const Options& options, const Budgets& budgets) {
  if (options.sigma_path.empty()) throw InvalidArgument("--sigma is required");
  const SimpleConditionalMixedStrategy sigma =
      parse_sigma(read_file(options.sigma_path));
  const FiniteSupportMeasure mu = decompose(sigma, options.prune, budgets.decompose);
  json atoms = json::array();
  Rational total = 0;
  Outcome outcome;
  outcome.summary.push_back("atoms: " + std::to_string(mu.atoms.size()));
  for (const auto& atom : mu.atoms) {
    json actions = json::array();
    std::string line = "  (";
    for (std::size_t l = 0; l < atom.actions.size(); ++l) {
      actions.push_back(sigma.action_names()[atom.actions[l]]);
      line += (l ? "," : "") + sigma.action_names()[atom.actions[l]];
    }
    atoms.push_back({{"actions", actions}, {"weight", to_string(atom.weight)}});
    total += atom.weight;
    outcome.summary.push_back(line + "): " + to_string(atom.weight));
  }
  json marginals = json::object();
  for (std::size_t l = 0; l < sigma.num_cells(); ++l) {
    marginals[mu.cell_labels[l]] = payoff_to_json(phi_evaluate(mu, l));
  }
  const bool roundtrip = verify_roundtrip(sigma);
  outcome.summary.push_back("weights sum to " + to_string(total));
  outcome.summary.push_back(std::string("phi(mu) == sigma: ") +
                            (roundtrip ? "yes" : "no"));
  outcome.result = {{"cells", mu.cell_labels},
                    {"atoms", atoms},
                    {"total_weight", to_string(total)},
                    {"phi", marginals},
                    {"roundtrip", roundtrip}};
  outcome.exit_code = roundtrip ? 0 : 1;
  return outcome;
}

Outcome dispatch(const Options& options, json& report) {
  const Budgets budgets = resolve_budgets(options);
  const SemanticsMode requested = parse_mode(options);
  report["mode"] = mode_to_json(requested);
  if (options.command == "mixed-decompose") {
    return run_mixed_decompose(options, budgets);
  }

  const Game game = load_game(options.game_path);
  report["game"] = game_to_json(game);
  const std::string& cmd = options.command;

  auto verify_built = [&](const ConstructionResult& built, bool strong) {
    const SemanticsMode mode = options.mode_given ? requested : built.mode;
    report["mode"] = mode_to_json(mode);
    const DeviationCertificate certificate =
        strong ? is_strong_ce(game, built.profile, mode)
               : is_cse(game, built.profile, mode, budgets.brute_force);
    return finish_construction(game, built, certificate);
  };

  if (cmd == "solve") return verify_built(build_existence(game), false);
  if (cmd == "folk") {
    return verify_built(build_folk(game, parse_target(game, options.target)), false);
  }
  if (cmd == "pareto3") return verify_built(build_pareto3(game), false);
  if (cmd == "strong") return verify_built(build_strong(game), true);
  if (cmd == "general2p") {
    return verify_built(build_general_2p(game, budgets.brute_force), false);
  }
  if (cmd == "support-n4") {
    return verify_built(
        build_support_n4(game, parse_target(game, options.target)), false);
  }
  if (cmd == "verify") return run_verify(options, game, requested, budgets, false);
  if (cmd == "verify-strong") {
    if (options.exhaustive) return run_verify_strong_exhaustive(game, requested, budgets);
    return run_verify(options, game, requested, budgets, true);
  }
  if (cmd == "enumerate") return run_enumerate(game, requested, budgets);
  throw InvalidArgument("unknown command '" + cmd + "'");
}

void emit(const Options& options, const std::string& text, std::ostream& out) {
  if (options.out_path.empty()) {
    out << text;
  } else {
    write_atomically(options.out_path, text);
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  Options options;
  CLI::App app{"Conditional strategy equilibrium toolkit", "cse"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  struct Spec {
    const char* name;
    const char* help;
  };
  const std::vector<Spec> specs = {
      {"solve", "build and verify the sequential existence construction"},
      {"folk", "support an individually rational target (two players)"},
      {"pareto3", "Pareto-optimal equilibrium for three players"},
      {"strong", "strong equilibrium at a double-max profile"},
      {"general2p", "two-player equilibrium under averaging disagreement"},
      {"support-n4", "search-based support of a target (n >= 4)"},
      {"verify", "check a conditional profile for unilateral deviations"},
      {"verify-strong", "check a profile (or all profiles) for coalition deviations"},
      {"enumerate", "list every conditional strategy equilibrium"},
      {"mixed-decompose", "decompose a simple conditional mixed strategy"},
  };
  std::vector<CLI::App*> subcommands;
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--game", options.game_path, "game file (.json or legacy .nfg)");
    sub->add_option("--profile", options.profile_path, "profile file");
    sub->add_option("--report", options.report_path,
                    "re-verify the game and profile embedded in a report");
    sub->add_option("--sigma", options.sigma_path, "sigma specification file");
    sub->add_option("--target", options.target, "comma-separated action names");
    auto* mode_opt = sub->add_option("--mode", options.mode, "dominant|unique");
    auto* dis_opt = sub->add_option("--disagreement", options.disagreement,
                                    "zero|average");
    sub->add_option("--budget", options.budget, "enumeration budget override");
    sub->add_flag("--json", options.json_output, "emit the JSON report");
    sub->add_flag("--exhaustive", options.exhaustive, "check every profile");
    sub->add_flag("--prune", options.prune, "drop zero-weight atoms");
    sub->add_option("--out", options.out_path, "write output to a file");
    sub->callback([&options, sub, mode_opt, dis_opt] {
      options.command = sub->get_name();
      options.mode_given = mode_opt->count() > 0 || dis_opt->count() > 0;
    });
    subcommands.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  json report = {{"version", kVersion}, {"command", args}};
  Outcome outcome;
  bool failed = false;
  try {
    outcome = dispatch(options, report);
  } catch (const Error& e) {
    outcome.exit_code = e.negative_result() ? 2 : 1;
    outcome.result = {{"status", e.code()}, {"message", e.what()}};
    outcome.summary.push_back(e.code() + ": " + e.what());
    if (const auto* nir = dynamic_cast<const NotIndividuallyRational*>(&e)) {
      outcome.result["player"] = nir->player() + 1;
      outcome.result["maximin"] = nir->maximin();
      outcome.result["value"] = nir->value();
    }
    if (!e.negative_result()) {
      failed = true;
      err << "error: " << e.code() << ": " << e.what() << "\n";
    }
  } catch (const std::exception& e) {
    outcome.exit_code = 1;
    outcome.result = {{"status", "Error"}, {"message", e.what()}};
    failed = true;
    err << "error: " << e.what() << "\n";
  }
  if (outcome.mode) report["mode"] = mode_to_json(*outcome.mode);
  report["result"] = outcome.result;
  if (!report["result"].contains("status")) {
    report["result"]["status"] = outcome.exit_code == 0 ? "ok" : "negative";
  }
  report["exit_code"] = outcome.exit_code;

  try {
    if (options.json_output) {
      emit(options, report.dump(2) + "\n", out);
    } else if (!failed) {
      std::string text;
      if (report.contains("game") && report["game"].contains("title")) {
        text += report["game"]["title"].get<std::string>() + "\n";
      }
      if (options.command != "mixed-decompose") {
        text += options.command + " [" +
                report["mode"]["agreement"].get<std::string>() + "+" +
                report["mode"]["disagreement"].get<std::string>() + "]\n";
      }
      for (const auto& line : outcome.summary) text += line + "\n";
      emit(options, text, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return outcome.exit_code;
}

}  // namespace cse
