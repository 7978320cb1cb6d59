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

#ifndef ADASUB_TESTS_FIXTURES_HPP
#define ADASUB_TESTS_FIXTURES_HPP

#include <memory>
#include <vector>

#include "adasub/model.hpp"
#include "adasub/utility.hpp"

namespace adasub::testing {

// Uniform prior over all s^n realizations.
inline Prior uniform_prior(int n, int s) {
  std::vector<std::vector<double>> marginals(
      n, std::vector<double>(s, 1.0 / s));
  return Prior::from_independent(marginals);
}

// Prior concentrated on a single realization.
inline Prior deterministic_prior(const Realization& phi, int s) {
  return Prior::from_support(static_cast<int>(phi.states.size()), s, {phi},
                             {1.0});
}

// Dense table with every value zero, to be filled in by hand.
inline std::vector<std::vector<double>> zero_table(int n, int s) {
  std::size_t realizations = 1;
  for (int i = 0; i < n; ++i) realizations *= s;
  return std::vector<std::vector<double>>(
      std::size_t{1} << n, std::vector<double>(realizations, 0.0));
}

// State-independent table from per-subset values.
inline std::shared_ptr<TableUtility> set_function_table(
    int n, int s, const std::vector<double>& per_mask) {
  auto values = zero_table(n, s);
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    for (auto& v : values[mask]) v = per_mask[mask];
  }
  return std::make_shared<TableUtility>(n, s, std::move(values));
}

// f(S,φ) = |S|, independent of states.
inline std::shared_ptr<TableUtility> cardinality_utility(int n, int s) {
  std::vector<double> per_mask(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < per_mask.size(); ++mask) {
    per_mask[mask] = set_size(static_cast<ItemSet>(mask));
  }
  return set_function_table(n, s, per_mask);
}

// The supermodular pair on a deterministic prior: f(∅)=f({0})=f({1})=0,
// f({0,1})=1; violates adaptive submodularity.
inline std::shared_ptr<TableUtility> supermodular_violation_table() {
  auto values = zero_table(2, 2);
  for (auto& v : values[3]) v = 1.0;
  return std::make_shared<TableUtility>(2, 2, std::move(values));
}

}  // namespace adasub::testing

#endif  // ADASUB_TESTS_FIXTURES_HPP
