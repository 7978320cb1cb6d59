// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADASUB_UTILITY_HPP
#define ADASUB_UTILITY_HPP

#include <vector>

#include "adasub/model.hpp"

namespace adasub {

// Dense lookup table over (subset bitmask, realization index); the canonical
// desk-scale utility representation.
class TableUtility : public UtilityFunction {
 public:
  // values[mask][realization_index], 2^n rows and s^n columns.
  TableUtility(int num_items, int num_states,
               std::vector<std::vector<double>> values);

  double eval(ItemSet items, const Realization& phi) const override;

  int num_items() const { return num_items_; }
  int num_states() const { return num_states_; }
  const std::vector<std::vector<double>>& values() const { return values_; }
  double& at(ItemSet items, std::uint32_t realization) {
    return values_[items][realization];
  }

 private:
  int num_items_;
  int num_states_;
  std::vector<std::vector<double>> values_;
};

// Weighted coverage: f(S, φ) is the weight of the union of the universe
// elements covered by each selected item in its realized state.  Monotone
// and pointwise submodular by construction.
class CoverageUtility : public UtilityFunction {
 public:
  CoverageUtility(int universe_size, std::vector<double> weights,
                  std::vector<std::vector<std::vector<int>>> covered);

  double eval(ItemSet items, const Realization& phi) const override;

  int universe_size() const { return universe_size_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<std::vector<std::vector<int>>>& covered() const {
    return covered_;
  }

 private:
  int universe_size_;
  std::vector<double> weights_;
  // covered[item][state] = universe elements, each in [0, universe_size).
  std::vector<std::vector<std::vector<int>>> covered_;
};

// f(S, φ) = Σ_{e∈S} w[e][φ(e)].  Marginals are independent of the
// observation, so the function is adaptive and pointwise submodular.
class ModularUtility : public UtilityFunction {
 public:
  explicit ModularUtility(std::vector<std::vector<double>> weights);

  double eval(ItemSet items, const Realization& phi) const override;

  const std::vector<std::vector<double>>& weights() const { return weights_; }

 private:
  std::vector<std::vector<double>> weights_;  // weights[item][state]
};

}  // namespace adasub

#endif  // ADASUB_UTILITY_HPP
