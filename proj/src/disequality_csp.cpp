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

#include "cse/disequality_csp.hpp"

#include <bit>
#include <utility>

#include "cse/error.hpp"

namespace cse {
namespace {

constexpr std::uint64_t bit(int value) { return std::uint64_t{1} << value; }

bool singleton(std::uint64_t domain) { return std::has_single_bit(domain); }

int lowest(std::uint64_t domain) { return std::countr_zero(domain); }

}  // namespace

int DisequalityCsp::add_variable(int domain_size) {
  if (domain_size < 1 || domain_size > 64) {
    throw InvalidArgument("domain size must be in [1, 64], got " +
                          std::to_string(domain_size));
  }
  domains_.push_back(domain_size == 64 ? ~std::uint64_t{0}
                                       : bit(domain_size) - 1);
  return static_cast<int>(domains_.size()) - 1;
}

void DisequalityCsp::fix(int var, int value) {
  domains_[var] &= bit(value);
  if (domains_[var] == 0) trivially_false_ = true;
}

void DisequalityCsp::forbid(int var, int value) {
  domains_[var] &= ~bit(value);
  if (domains_[var] == 0) trivially_false_ = true;
}

void DisequalityCsp::add_clause(std::vector<Literal> clause) {
  if (clause.empty()) trivially_false_ = true;
  clauses_.push_back(std::move(clause));
}

// Fixpoint of unit propagation. A literal (x != v) is true once v has left
// x's domain and false once x's domain is exactly {v}.
bool DisequalityCsp::propagate(Domains& domains) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& clause : clauses_) {
      int open = -1;
      int open_count = 0;
      bool satisfied = false;
      for (std::size_t l = 0; l < clause.size(); ++l) {
        const std::uint64_t d = domains[clause[l].var];
        if ((d & bit(clause[l].value)) == 0) {
          satisfied = true;
          break;
        }
        if (!singleton(d)) {
          ++open_count;
          open = static_cast<int>(l);
        }
      }
      if (satisfied) continue;
      if (open_count == 0) return false;
      if (open_count == 1) {
        domains[clause[open].var] &= ~bit(clause[open].value);
        changed = true;
      }
    }
  }
  return true;
}

bool DisequalityCsp::search(Domains& domains, std::uint64_t budget,
                            Stats& stats) const {
  if (++stats.nodes > budget) {
    stats.budget_exhausted = true;
    return false;
  }
  if (!propagate(domains)) return false;

  // Branch on the first open literal of the first unsatisfied clause.
  for (const auto& clause : clauses_) {
    bool satisfied = false;
    int branch_var = -1;
    for (const auto& literal : clause) {
      const std::uint64_t d = domains[literal.var];
      if ((d & bit(literal.value)) == 0) {
        satisfied = true;
        break;
      }
      if (branch_var < 0 && !singleton(d)) branch_var = literal.var;
    }
    if (satisfied) continue;
    std::uint64_t remaining = domains[branch_var];
    while (remaining != 0) {
      const int value = lowest(remaining);
      remaining &= remaining - 1;
      Domains child = domains;
      child[branch_var] = bit(value);
      if (search(child, budget, stats)) {
        domains = std::move(child);
        return true;
      }
      if (stats.budget_exhausted) return false;
    }
    return false;
  }
  return true;
}

std::optional<std::vector<int>> DisequalityCsp::solve(std::uint64_t node_budget,
                                                      Stats* stats) const {
  Stats local;
  Stats& s = stats ? *stats : local;
  s = Stats{};
  if (trivially_false_) return std::nullopt;
  Domains domains = domains_;
  if (!search(domains, node_budget, s)) return std::nullopt;
  std::vector<int> values(domains.size());
  for (std::size_t v = 0; v < domains.size(); ++v) values[v] = lowest(domains[v]);
  return values;
}

}  // namespace cse
