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

#include "adasub/utility.hpp"

#include <cmath>
#include <stdexcept>

namespace adasub {

TableUtility::TableUtility(int num_items, int num_states,
                           std::vector<std::vector<double>> values)
    : num_items_(num_items),
      num_states_(num_states),
      values_(std::move(values)) {
  const std::size_t masks = std::size_t{1} << num_items;
  std::size_t realizations = 1;
  for (int i = 0; i < num_items; ++i) realizations *= num_states;
  if (values_.size() != masks) {
    throw std::invalid_argument("table must have 2^n rows");
  }
  for (const auto& row : values_) {
    if (row.size() != realizations) {
      throw std::invalid_argument("table row must have s^n entries");
    }
    for (double v : row) {
      if (v < 0.0 || !std::isfinite(v)) {
        throw std::invalid_argument("table values must be finite and >= 0");
      }
    }
  }
}

double TableUtility::eval(ItemSet items, const Realization& phi) const {
  return values_[items][realization_index(phi, num_states_)];
}

CoverageUtility::CoverageUtility(
    int universe_size, std::vector<double> weights,
    std::vector<std::vector<std::vector<int>>> covered)
    : universe_size_(universe_size),
      weights_(std::move(weights)),
      covered_(std::move(covered)) {
  if (static_cast<int>(weights_.size()) != universe_size_) {
    throw std::invalid_argument("one weight per universe element");
  }
  for (double w : weights_) {
    if (w < 0.0) throw std::invalid_argument("coverage weights must be >= 0");
  }
  for (const auto& per_state : covered_) {
    for (const auto& elements : per_state) {
      for (int u : elements) {
        if (u < 0 || u >= universe_size_) {
          throw std::invalid_argument("covered element out of universe");
        }
      }
    }
  }
}

double CoverageUtility::eval(ItemSet items, const Realization& phi) const {
  std::uint64_t covered_mask = 0;
  for (ItemId e = 0; e < static_cast<ItemId>(covered_.size()); ++e) {
    if (!contains(items, e)) continue;
    for (int u : covered_[e][phi(e)]) covered_mask |= std::uint64_t{1} << u;
  }
  double total = 0.0;
  for (int u = 0; u < universe_size_; ++u) {
    if ((covered_mask >> u) & 1u) total += weights_[u];
  }
  return total;
}

ModularUtility::ModularUtility(std::vector<std::vector<double>> weights)
    : weights_(std::move(weights)) {}

double ModularUtility::eval(ItemSet items, const Realization& phi) const {
  double total = 0.0;
  for (ItemId e = 0; e < static_cast<ItemId>(weights_.size()); ++e) {
    if (contains(items, e)) total += weights_[e][phi(e)];
  }
  return total;
}

}  // namespace adasub
