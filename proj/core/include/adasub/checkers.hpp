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

#ifndef ADASUB_CHECKERS_HPP
#define ADASUB_CHECKERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "adasub/model.hpp"

namespace adasub {

// First counterexample found by one of the exhaustive checkers.
struct Violation {
  enum class Kind { kAdaptive, kPointwise, kNonnegative };
  Kind kind;
  PartialRealization psi;        // adaptive: the smaller observation
  PartialRealization psi_prime;  // adaptive: the larger observation
  ItemSet set_small = 0;         // pointwise: E1
  ItemSet set_large = 0;         // pointwise: E2
  std::uint32_t realization = 0; // pointwise/nonneg: realization index
  ItemId item = -1;
  double lhs = 0.0;
  double rhs = 0.0;

  std::string describe() const;
};

// Witness of a strictly negative conditional expected marginal utility.
struct NonmonotoneWitness {
  PartialRealization psi;
  ItemId item = -1;
  double marginal_value = 0.0;
};

// All positive-probability partial realizations of the prior, grouped by
// nothing in particular; order is deterministic (domain mask, then packed
// states ascending).
std::vector<PartialRealization> enumerate_partial_realizations(
    const Prior& prior);

// Δ(e|ψ) >= Δ(e|ψ') - ε for every nested positive-probability pair and
// every e outside dom(ψ').  Caps: n <= 6, s <= 3.
std::optional<Violation> check_adaptive_submodular(const UtilityFunction& f,
                                                   const Prior& prior);

// f(E1∪{e},φ) - f(E1,φ) >= f(E2∪{e},φ) - f(E2,φ) for all nested sets and
// every supported φ.
std::optional<Violation> check_pointwise_submodular(const UtilityFunction& f,
                                                    const Prior& prior);

// f(S,φ) >= -ε over every subset and supported realization.
std::optional<Violation> check_nonnegative(const UtilityFunction& f,
                                           const Prior& prior);

// Returns a witness (ψ, e) with Δ(e|ψ) < -ε when one exists; empty result
// means the function is adaptive monotone on this prior.
std::optional<NonmonotoneWitness> check_nonmonotone(const UtilityFunction& f,
                                                    const Prior& prior);

}  // namespace adasub

#endif  // ADASUB_CHECKERS_HPP
