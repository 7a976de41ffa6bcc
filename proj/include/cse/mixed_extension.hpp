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

#ifndef CSE_MIXED_EXTENSION_HPP_
#define CSE_MIXED_EXTENSION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cse/rational.hpp"

namespace cse {

using Distribution = std::vector<Rational>;
// One distribution per opponent, ascending player order.
using MixedOpponentProfile = std::vector<Distribution>;

// A finite partition of the opponents' mixed profiles. The cells are
// labels; `membership`, when set, maps a queried point to its cell index.
struct PartitionSpec {
  std::vector<std::string> labels;
  std::function<std::size_t(const MixedOpponentProfile&)> membership;

  std::size_t size() const { return labels.size(); }
  // Throws UnknownCell.
  std::size_t cell_index(const std::string& label) const;
};

// A simple conditional mixed strategy: constant distribution mu_l on each
// cell X_l of its partition.
class SimpleConditionalMixedStrategy {
 public:
  // Throws InvalidArgument unless every distribution has one entry per
  // action, is nonnegative and sums to exactly 1.
  SimpleConditionalMixedStrategy(int owner,
                                 std::vector<std::string> action_names,
                                 PartitionSpec partition,
                                 std::vector<Distribution> cell_distributions);

  int owner() const { return owner_; }
  int num_actions() const { return static_cast<int>(actions_.size()); }
  const std::vector<std::string>& action_names() const { return actions_; }
  const PartitionSpec& partition() const { return partition_; }
  std::size_t num_cells() const { return cells_.size(); }
  const Distribution& cell_distribution(std::size_t cell) const {
    return cells_[cell];
  }

  // sigma_i(q_{-i}); requires a membership function.
  const Distribution& operator()(const MixedOpponentProfile& q) const;

 private:
  int owner_;
  std::vector<std::string> actions_;
  PartitionSpec partition_;
  std::vector<Distribution> cells_;
};

// A finite-support measure over partition-measurable pure conditional
// strategies. Each atom is a tuple (a^1, ..., a^L): the action played on
// every cell.
struct FiniteSupportMeasure {
  struct Atom {
    std::vector<int> actions;  // one per cell
    Rational weight;
  };
  int num_actions = 0;
  std::vector<std::string> cell_labels;
  std::vector<Atom> atoms;
};

inline constexpr std::uint64_t kDefaultDecomposeBudget = 1'000'000;

// Product measure mu((a^1..a^L)) = prod_l mu_l(a^l) over A_i^L, atoms in
// lexicographic order with cell 1 most significant. Zero-weight atoms are
// kept unless `prune_zero`. Throws BudgetExceeded when |A_i|^L > budget.
FiniteSupportMeasure decompose(const SimpleConditionalMixedStrategy& sigma,
                               bool prune_zero = false,
                               std::uint64_t budget = kDefaultDecomposeBudget);

// phi(mu) on one cell: the total weight of atoms playing each action there.
Distribution phi_evaluate(const FiniteSupportMeasure& mu, std::size_t cell);
// Throws UnknownCell.
Distribution phi_evaluate(const FiniteSupportMeasure& mu,
                          const std::string& label);

// phi(decompose(sigma)) == sigma on every cell, exactly.
bool verify_roundtrip(const SimpleConditionalMixedStrategy& sigma);

}  // namespace cse

#endif  // CSE_MIXED_EXTENSION_HPP_
