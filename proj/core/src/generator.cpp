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

#include "adasub/generator.hpp"

#include <algorithm>
#include <cmath>

#include "adasub/checkers.hpp"

namespace adasub {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  // Desk-scale bounds; modulo bias is negligible against 2^64.
  return next() % bound;
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

namespace {

Prior sample_prior(SplitMix64& rng, int n, int s) {
  // Independent per-item categoricals with weights from {1, 2, 3}; the
  // resulting probabilities are small exact rationals.
  std::vector<std::vector<double>> marginals(n, std::vector<double>(s));
  for (int e = 0; e < n; ++e) {
    int total = 0;
    std::vector<int> weights(s);
    for (int o = 0; o < s; ++o) {
      weights[o] = 1 + static_cast<int>(rng.next_below(3));
      total += weights[o];
    }
    for (int o = 0; o < s; ++o) {
      marginals[e][o] = static_cast<double>(weights[o]) / total;
    }
  }
  return Prior::from_independent(marginals);
}

std::shared_ptr<TableUtility> sample_table(SplitMix64& rng, int n, int s) {
  const std::size_t masks = std::size_t{1} << n;
  std::size_t realizations = 1;
  for (int i = 0; i < n; ++i) realizations *= s;
  std::vector<std::vector<double>> values(
      masks, std::vector<double>(realizations, 0.0));
  for (std::size_t mask = 1; mask < masks; ++mask) {
    for (std::size_t r = 0; r < realizations; ++r) {
      // Uniform in [0, 1] rounded to the 1/16 grid.
      values[mask][r] = static_cast<double>(rng.next_below(17)) / 16.0;
    }
  }
  return std::make_shared<TableUtility>(n, s, std::move(values));
}

}  // namespace

GeneratedInstance generate_instance(std::uint64_t seed, int num_items,
                                    int num_states,
                                    const GeneratorProfile& profile,
                                    long max_attempts) {
  if (num_items < 1 || num_items > 5 || num_states < 2 || num_states > 3) {
    throw TooLargeToVerify("generator capped at 1 <= n <= 5, 2 <= s <= 3");
  }
  SplitMix64 rng(seed ^ 0xada5ab0000000000ULL);
  for (long attempt = 1; attempt <= max_attempts; ++attempt) {
    Prior prior = sample_prior(rng, num_items, num_states);
    auto table = sample_table(rng, num_items, num_states);

    if (check_adaptive_submodular(*table, prior)) continue;
    const bool nonmonotone = check_nonmonotone(*table, prior).has_value();
    if (nonmonotone != profile.nonmonotone) continue;
    const bool pointwise = !check_pointwise_submodular(*table, prior);
    if (profile.pointwise == Require::kYes && !pointwise) continue;
    if (profile.pointwise == Require::kNo && pointwise) continue;

    Instance instance;
    instance.num_items = num_items;
    instance.num_states = num_states;
    instance.prior = std::move(prior);
    instance.utility = table;
    // Costs on a 1/4 grid, budget a 1/4-grid point between the largest
    // single cost (every item affordable) and the total.
    instance.costs.resize(num_items);
    int max_quarters = 0;
    int total_quarters = 0;
    for (int e = 0; e < num_items; ++e) {
      const int quarters = 1 + static_cast<int>(rng.next_below(4));
      instance.costs[e] = quarters / 4.0;
      max_quarters = std::max(max_quarters, quarters);
      total_quarters += quarters;
    }
    instance.budget =
        (max_quarters +
         static_cast<int>(rng.next_below(total_quarters - max_quarters + 1))) /
        4.0;
    instance.certified = {"nonnegative", "adaptive_submodular"};
    instance.certified.push_back(nonmonotone ? "nonmonotone" : "monotone");
    instance.certified.push_back(pointwise ? "pointwise_submodular"
                                           : "not_pointwise_submodular");
    return GeneratedInstance{std::move(instance), attempt};
  }
  throw GenerationExhausted("no certified instance within attempt budget");
}

}  // namespace adasub
