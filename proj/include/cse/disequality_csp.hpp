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

#ifndef CSE_DISEQUALITY_CSP_HPP_
#define CSE_DISEQUALITY_CSP_HPP_

#include <cstdint>
#include <optional>
#include <vector>

namespace cse {

// A small finite-domain CSP whose constraints are clauses of disequalities:
// (x1 != v1) OR (x2 != v2) OR ... Every question of the form "can these
// table entries be chosen so that none of these profiles is a fixed point"
// reduces to it.
//
// Search is depth-first with unit propagation. Branching picks the first
// unsatisfied clause and its first open literal, trying values in ascending
// order; variables left unconstrained at the end take their lowest remaining
// value. Results are therefore deterministic.
class DisequalityCsp {
 public:
  struct Literal {
    int var;
    int value;  // satisfied iff var != value
  };

  struct Stats {
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
  };

  // Domain is {0, ..., domain_size - 1}; domain_size must be in [1, 64].
  int add_variable(int domain_size);
  void fix(int var, int value);
  void forbid(int var, int value);
  void add_clause(std::vector<Literal> clause);

  int num_variables() const { return static_cast<int>(domains_.size()); }
  std::size_t num_clauses() const { return clauses_.size(); }

  // Returns one value per variable, or nullopt when infeasible or the node
  // budget ran out (distinguishable through `stats`).
  std::optional<std::vector<int>> solve(std::uint64_t node_budget = 1u << 22,
                                        Stats* stats = nullptr) const;

 private:
  using Domains = std::vector<std::uint64_t>;

  bool propagate(Domains& domains) const;
  bool search(Domains& domains, std::uint64_t budget, Stats& stats) const;

  std::vector<std::uint64_t> domains_;
  std::vector<std::vector<Literal>> clauses_;
  bool trivially_false_ = false;
};

}  // namespace cse

#endif  // CSE_DISEQUALITY_CSP_HPP_
