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

// Acceptance gate: one PASS/FAIL line per criterion. Every comparison is
// exact rational equality; there are no tolerances.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cse/conditional.hpp"
#include "cse/constructors.hpp"
#include "cse/deviation.hpp"
#include "cse/error.hpp"
#include "cse/game.hpp"
#include "cse/io.hpp"
#include "cse/mixed_extension.hpp"
#include "support/oracles.hpp"
#include "support/random_games.hpp"

namespace cse {
namespace {

using testing::Rng;
using testing::uniform_int;

const SemanticsMode kDominantZero{AgreementRule::kDominant, DisagreementRule::kZero};
const SemanticsMode kUniqueZero{AgreementRule::kUnique, DisagreementRule::kZero};
const SemanticsMode kDominantAverage{AgreementRule::kDominant,
                                     DisagreementRule::kAverage};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string read_data(const std::string& relative) {
  std::ifstream in(std::string(CSE_DATA_DIR) + "/" + relative);
  if (!in) throw std::runtime_error("missing data file " + relative);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool verified(const DeviationCertificate& c) {
  return c.verdict == Verdict::kNoProfitableDeviation;
}

// A DEVIATION_FOUND certificate must replay exactly: the deviated profile is
// an agreement with the claimed payoff and every deviator gains strictly.
bool certificate_replays(const Game& g, const ConditionalProfile& s,
                         const DeviationCertificate& c, SemanticsMode mode) {
  if (c.verdict != Verdict::kDeviationFound || c.deviators.empty()) return false;
  const PayoffVector base = testing::naive_value(g, s, mode);
  const ConditionalProfile deviated = apply_deviation(s, c);
  const PayoffVector after = testing::naive_value(g, deviated, mode);
  if (after != c.deviated_payoff || base != c.baseline) return false;
  for (int j : c.deviators) {
    if (!(after[j] > base[j])) return false;
  }
  return true;
}

Outcome criterion_counterexample() {
  const Game g = parse_game(read_data("games/fig1.json"));
  Outcome out;
  for (SemanticsMode mode : {kDominantZero, kUniqueZero}) {
    std::size_t profiles = 0;
    std::size_t strong = 0;
    std::size_t bad_certificates = 0;
    for_each_profile(g, [&](const ConditionalProfile& s) {
      ++profiles;
      const DeviationCertificate c = is_strong_ce(g, s, mode);
      if (verified(c)) {
        ++strong;
      } else if (!certificate_replays(g, s, c, mode)) {
        ++bad_certificates;
      }
      return true;
    });
    out.pass = out.pass && profiles == 4096 && strong == 0 && bad_certificates == 0;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += to_string(mode) + ": " + std::to_string(strong) + " strong CE among " +
                  std::to_string(profiles) + " profiles, " +
                  std::to_string(bad_certificates) + " unreplayable certificates";
  }
  return out;
}

Outcome criterion_existence() {
  Rng rng(1001);
  int games = 0, passed = 0, cross_checked = 0, disagreements = 0;
  for (; games < 200; ++games) {
    const int n = uniform_int(rng, 2, 3);
    const Game g = testing::random_game(rng, testing::random_sizes(rng, n, 3), 10);
    const ConstructionResult r = build_existence(g);
    const AgreementReport report = classify(g, r.profile, kDominantZero);
    const bool ok = verified(is_cse(g, r.profile, kDominantZero)) && report.is_agreement &&
                    report.payoff == g.payoff(*r.intended_point);
    passed += ok;
    bool small = true;
    for (int i = 0; i < n; ++i) small = small && strategy_space_size(g, i) <= 4096;
    if (small) {
      ++cross_checked;
      disagreements += ok != testing::naive_is_cse(g, r.profile, kDominantZero);
    }
  }
  return {passed == games && disagreements == 0,
          std::to_string(passed) + "/" + std::to_string(games) +
              " games verified; naive re-check on " + std::to_string(cross_checked) +
              " small games, " + std::to_string(disagreements) + " disagreements"};
}

Outcome criterion_oracle() {
  Rng rng(1003);
  int triples = 0, equal = 0, large = 0;
  while (triples < 500) {
    const int n = uniform_int(rng, 2, 3);
    // Payoffs in [0,4] keep ties (and so dominance subtleties) frequent.
    const Game g = testing::random_game(rng, testing::random_sizes(rng, n, 3, 2), 4);
    const int i = uniform_int(rng, 0, n - 1);
    if (strategy_space_size(g, i) > 100000) continue;
    const ConditionalProfile s = triples % 2 ? testing::anchored_profile(rng, g)
                                             : testing::random_profile(rng, g);
    ++triples;
    large += strategy_space_size(g, i) >= 512;
    bool same = true;
    for (SemanticsMode mode : {kDominantZero, kUniqueZero}) {
      const Rational fast = best_unilateral_deviation_value(g, s, i, mode).value;
      const Rational brute = brute_force_deviation_value(g, s, i, mode, 100000).value;
      same = same && fast == brute;
    }
    equal += same;
  }
  return {equal == triples, std::to_string(equal) + "/" + std::to_string(triples) +
                                " triples equal under dominant+zero and unique+zero (" +
                                std::to_string(large) + " with >= 512 tables)"};
}

Outcome criterion_folk() {
  int games = 0, targets = 0, supported = 0, violations = 0, coverage_gaps = 0;
  std::vector<int> v(8, 0);
  while (true) {
    std::vector<PayoffVector> payoffs;
    for (int p = 0; p < 4; ++p) payoffs.push_back({v[2 * p], v[2 * p + 1]});
    const Game g = Game::from_sizes({2, 2}, payoffs);
    ++games;
    const PayoffVector floor{pure_maximin(g, 0).value, pure_maximin(g, 1).value};
    std::set<std::size_t> rational;
    for (std::size_t t = 0; t < 4; ++t) {
      if (!pareto_dominates_weakly(g.payoff(t), floor)) continue;
      rational.insert(t);
      ++targets;
      const ConstructionResult r = build_folk(g, g.profile_at(t));
      const AgreementReport report = classify(g, r.profile, kDominantZero);
      supported += verified(is_cse(g, r.profile, kDominantZero)) && report.is_agreement &&
                   is_fixed_point(g, r.profile, t) && report.payoff == g.payoff(t);
    }
    std::set<std::size_t> agreement_payoff_points;
    for (const auto& e : enumerate_cse(g, kDominantZero)) {
      if (!e.agreement_point) continue;
      if (!pareto_dominates_weakly(e.payoff, floor)) ++violations;
      // Every fixed point tying the agreement payoff is an agreement point.
      for (std::size_t p = 0; p < 4; ++p) {
        if (g.payoff(p) == e.payoff && is_fixed_point(g, e.profile, p)) {
          agreement_payoff_points.insert(p);
        }
      }
    }
    for (std::size_t t : rational) coverage_gaps += !agreement_payoff_points.count(t);
    int k = 7;
    while (k >= 0 && ++v[k] == 3) v[k--] = 0;
    if (k < 0) break;
  }
  return {games == 6561 && supported == targets && violations == 0 && coverage_gaps == 0,
          std::to_string(games) + " games; (a) " + std::to_string(supported) + "/" +
              std::to_string(targets) + " rational targets supported; (b) " +
              std::to_string(violations) + " CSE agreement points below maximin, " +
              std::to_string(coverage_gaps) + " rational targets missing from enumeration"};
}

Outcome criterion_pareto3() {
  Rng rng(1005);
  int games = 0, passed = 0, disagreements = 0;
  for (; games < 120; ++games) {
    const std::vector<int> sizes = games % 2 ? std::vector<int>{3, 2, 2}
                                             : std::vector<int>{2, 2, 2};
    const Game g = testing::random_game(rng, sizes, 10);
    const ConstructionResult r = build_pareto3(g);
    const auto fixed = fixed_points(g, r.profile);
    const bool unique = fixed.size() == 1 && fixed[0] == *r.intended_point;
    const bool optimal = unique && testing::naive_pareto_optimal(g, g.profile_at(fixed[0]));
    const bool cse = verified(is_cse(g, r.profile, kDominantZero)) &&
                     verified(is_cse(g, r.profile, kUniqueZero));
    passed += unique && optimal && cse;
    disagreements += cse != (testing::naive_is_cse(g, r.profile, kDominantZero) &&
                             testing::naive_is_cse(g, r.profile, kUniqueZero));
  }
  return {passed == games && disagreements == 0,
          std::to_string(passed) + "/" + std::to_string(games) +
              " games with a unique, Pareto-optimal, verified fixed point; " +
              std::to_string(disagreements) + " disagreements with the naive check"};
}

Outcome criterion_strong() {
  Rng rng(1007);
  int games = 0, passed = 0, cross_checked = 0, disagreements = 0;
  for (; games < 60; ++games) {
    const int n = uniform_int(rng, 2, 3);
    const Game g = testing::planted_double_max_game(
        rng, testing::random_sizes(rng, n, n == 2 ? 3 : 2, 2), 10);
    const ConstructionResult r = build_strong(g);
    const bool ok = verified(is_strong_ce(g, r.profile, kDominantZero)) &&
                    verified(is_strong_ce(g, r.profile, kUniqueZero)) &&
                    fixed_points(g, r.profile).size() == 1;
    passed += ok;
    if (n == 2) {
      ++cross_checked;
      disagreements += ok != (testing::naive_is_strong(g, r.profile, kDominantZero) &&
                              testing::naive_is_strong(g, r.profile, kUniqueZero));
    }
  }
  return {passed == games && disagreements == 0,
          std::to_string(passed) + "/" + std::to_string(games) +
              " planted games verified; naive re-check on " +
              std::to_string(cross_checked) + " two-player games, " +
              std::to_string(disagreements) + " disagreements"};
}

Outcome criterion_general2p() {
  Rng rng(1009);
  int games = 0, passed = 0, disagreements = 0, case_c = 0;
  while (games < 120) {
    const Game g = testing::random_game(rng, testing::random_sizes(rng, 2, 3, 2), 10);
    if (!pure_nash_equilibria(g).empty()) continue;
    ++games;
    const ConstructionResult r = build_general_2p(g);
    case_c += r.intended_point.has_value();
    const bool ok = verified(is_cse(g, r.profile, kDominantAverage));
    passed += ok;
    disagreements += ok != testing::naive_is_cse(g, r.profile, kDominantAverage);
  }
  const Game mp = parse_game(read_data("games/matching_pennies.json"));
  const ConstructionResult r = build_general_2p(mp);
  const bool spot = !r.intended_point &&
                    classify(mp, r.profile, kDominantAverage).payoff ==
                        PayoffVector{Rational(1, 2), Rational(1, 2)};
  return {passed == games && disagreements == 0 && spot,
          std::to_string(passed) + "/" + std::to_string(games) + " games verified (" +
              std::to_string(case_c) + " via a committed deviation); " +
              std::to_string(disagreements) + " disagreements with the naive check; " +
              "matching pennies U = " +
              to_string(classify(mp, r.profile, kDominantAverage).payoff[0]) + "," +
              to_string(classify(mp, r.profile, kDominantAverage).payoff[1])};
}

Outcome criterion_mixed() {
  Rng rng(1011);
  int strategies = 0, passed = 0;
  for (; strategies < 250; ++strategies) {
    const int num_actions = uniform_int(rng, 1, 3);
    const int cells = uniform_int(rng, 1, 3);
    std::vector<std::string> actions;
    for (int a = 0; a < num_actions; ++a) actions.push_back("a" + std::to_string(a));
    PartitionSpec partition;
    std::vector<Distribution> dists;
    for (int l = 0; l < cells; ++l) {
      partition.labels.push_back("X" + std::to_string(l + 1));
      const int den = uniform_int(rng, 1, 12);
      std::vector<int> parts(num_actions, 0);
      for (int unit = 0; unit < den; ++unit) ++parts[uniform_int(rng, 0, num_actions - 1)];
      Distribution d;
      for (int part : parts) d.push_back(Rational(part, den));
      dists.push_back(d);
    }
    const SimpleConditionalMixedStrategy sigma(0, actions, partition, dists);
    const FiniteSupportMeasure mu = decompose(sigma);
    std::size_t expected = 1;
    for (int l = 0; l < cells; ++l) expected *= num_actions;
    Rational total = 0;
    bool nonnegative = true;
    for (const auto& atom : mu.atoms) {
      total += atom.weight;
      nonnegative = nonnegative && atom.weight >= 0;
    }
    passed += verify_roundtrip(sigma) && total == 1 && nonnegative &&
              mu.atoms.size() == expected;
  }
  return {passed == strategies, std::to_string(passed) + "/" + std::to_string(strategies) +
                                    " strategies: exact round-trip, unit mass, full support"};
}

Outcome criterion_io() {
  int identical = 0;
  const std::vector<std::string> corpus = {"fig1.json", "pd.json", "matching_pennies.json",
                                           "coordination.json"};
  for (const auto& name : corpus) {
    const std::string text = read_data("games/" + name);
    identical += serialize_game(parse_game(text)) == text;
  }
  const bool legacy = import_nfg(read_data("games/pd.nfg")) ==
                      parse_game(read_data("games/pd.json"));
  return {identical == static_cast<int>(corpus.size()) && legacy,
          std::to_string(identical) + "/" + std::to_string(corpus.size()) +
              " corpus files byte-identical after round-trip; legacy PD import " +
              (legacy ? "equal" : "DIFFERENT")};
}

}  // namespace
}  // namespace cse

int main() {
  struct Criterion {
    const char* name;
    std::function<cse::Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"three-player counterexample has no strong CE", cse::criterion_counterexample},
      {"existence construction is a CSE", cse::criterion_existence},
      {"class oracle equals brute force", cse::criterion_oracle},
      {"folk characterisation on all 2x2 games over {0,1,2}", cse::criterion_folk},
      {"three-player Pareto-optimal construction", cse::criterion_pareto3},
      {"strong construction at double-max profiles", cse::criterion_strong},
      {"two-player construction under averaging", cse::criterion_general2p},
      {"mixed strategy decomposition", cse::criterion_mixed},
      {"game file round-trip and legacy import", cse::criterion_io},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    cse::Outcome outcome;
    try {
      outcome = criteria[k].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !outcome.pass;
    std::printf("%s %zu  %s: %s [%.1fs]\n", outcome.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].name, outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
