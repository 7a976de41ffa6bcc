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

#include "cse/mixed_extension.hpp"

#include <string>
#include <utility>

#include "cse/error.hpp"

namespace cse {

std::size_t PartitionSpec::cell_index(const std::string& label) const {
  for (std::size_t l = 0; l < labels.size(); ++l) {
    if (labels[l] == label) return l;
  }
  throw UnknownCell(label);
}

SimpleConditionalMixedStrategy::SimpleConditionalMixedStrategy(
    int owner, std::vector<std::string> action_names, PartitionSpec partition,
    std::vector<Distribution> cell_distributions)
    : owner_(owner),
      actions_(std::move(action_names)),
      partition_(std::move(partition)),
      cells_(std::move(cell_distributions)) {
  if (actions_.empty()) throw InvalidArgument("empty action set");
  if (cells_.empty()) throw InvalidArgument("a partition needs at least one cell");
  if (partition_.labels.empty()) {
    for (std::size_t l = 0; l < cells_.size(); ++l) {
      partition_.labels.push_back("X" + std::to_string(l + 1));
    }
  }
  if (partition_.labels.size() != cells_.size()) {
    throw InvalidArgument(std::to_string(partition_.labels.size()) +
                          " cell labels for " + std::to_string(cells_.size()) +
                          " distributions");
  }
  for (std::size_t l = 0; l < cells_.size(); ++l) {
    const auto& mu = cells_[l];
    if (mu.size() != actions_.size()) {
      throw InvalidArgument("cell " + partition_.labels[l] + " has " +
                            std::to_string(mu.size()) + " probabilities for " +
                            std::to_string(actions_.size()) + " actions");
    }
    Rational total = 0;
    for (const auto& p : mu) {
      if (p < 0) {
        throw InvalidArgument("negative probability in cell " +
                              partition_.labels[l]);
      }
      total += p;
    }
    if (total != 1) {
      throw InvalidArgument("cell " + partition_.labels[l] + " sums to " +
                            to_string(total) + ", not 1");
    }
  }
}

const Distribution& SimpleConditionalMixedStrategy::operator()(
    const MixedOpponentProfile& q) const {
  if (!partition_.membership) {
    throw InvalidArgument("partition has no membership function");
  }
  const std::size_t cell = partition_.membership(q);
  if (cell >= cells_.size()) {
    throw UnknownCell("#" + std::to_string(cell));
  }
  return cells_[cell];
}

FiniteSupportMeasure decompose(const SimpleConditionalMixedStrategy& sigma,
                               bool prune_zero, std::uint64_t budget) {
  const std::size_t cells = sigma.num_cells();
  const int m = sigma.num_actions();
  Integer size = boost::multiprecision::pow(Integer(m),
                                            static_cast<unsigned>(cells));
  if (size > budget) {
    throw BudgetExceeded("product space A_i^L", size.str(), budget);
  }

  FiniteSupportMeasure mu;
  mu.num_actions = m;
  mu.cell_labels = sigma.partition().labels;
  // Odometer with the last cell fastest, so atoms come out in lexicographic
  // order with cell 1 most significant.
  std::vector<int> tuple(cells, 0);
  while (true) {
    Rational weight = 1;
    for (std::size_t l = 0; l < cells; ++l) {
      weight *= sigma.cell_distribution(l)[tuple[l]];
    }
    if (!prune_zero || weight != 0) mu.atoms.push_back({tuple, weight});
    std::size_t l = cells;
    while (l > 0) {
      --l;
      if (++tuple[l] < m) break;
      tuple[l] = 0;
      if (l == 0) return mu;
    }
  }
}

Distribution phi_evaluate(const FiniteSupportMeasure& mu, std::size_t cell) {
  if (cell >= mu.cell_labels.size()) {
    throw UnknownCell("#" + std::to_string(cell + 1));
  }
  Distribution result(mu.num_actions, Rational(0));
  for (const auto& atom : mu.atoms) result[atom.actions[cell]] += atom.weight;
  return result;
}

Distribution phi_evaluate(const FiniteSupportMeasure& mu,
                          const std::string& label) {
  for (std::size_t l = 0; l < mu.cell_labels.size(); ++l) {
    if (mu.cell_labels[l] == label) return phi_evaluate(mu, l);
  }
  throw UnknownCell(label);
}

bool verify_roundtrip(const SimpleConditionalMixedStrategy& sigma) {
  const FiniteSupportMeasure mu = decompose(sigma);
  for (std::size_t l = 0; l < sigma.num_cells(); ++l) {
    if (phi_evaluate(mu, l) != sigma.cell_distribution(l)) return false;
  }
  return true;
}

}  // namespace cse
