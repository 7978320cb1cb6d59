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

#ifndef ADASUB_MODEL_HPP
#define ADASUB_MODEL_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "adasub/errors.hpp"

namespace adasub {

// Items and states use dense indices: an instance with n items and s states
// per item uses exactly {0..n-1} and {0..s-1}.
using ItemId = int;
using StateId = int;

// Item subsets as bitmasks: item i is bit i.
using ItemSet = std::uint32_t;

inline bool contains(ItemSet set, ItemId e) { return (set >> e) & 1u; }
inline ItemSet with_item(ItemSet set, ItemId e) { return set | (1u << e); }
inline int set_size(ItemSet set) { return __builtin_popcount(set); }
inline ItemSet full_set(int n) { return (n == 32) ? ~0u : ((1u << n) - 1u); }

// Total state assignment: position e holds the state of item e.
struct Realization {
  std::vector<StateId> states;

  StateId operator()(ItemId e) const { return states[e]; }
  bool operator==(const Realization& other) const = default;
};

// Mixed-radix little-endian index of a realization: item i contributes
// states[i] * s^i.  This is the on-disk realization-index convention.
std::uint32_t realization_index(const Realization& phi, int num_states);
Realization realization_from_index(std::uint32_t index, int num_items,
                                   int num_states);

// Observed (item, state) pairs in selection order.  Set-semantics operations
// ignore the order; no item appears twice.
class PartialRealization {
 public:
  PartialRealization() = default;
  explicit PartialRealization(
      std::vector<std::pair<ItemId, StateId>> assignments);

  // Returns the extension ψ ∪ {(e, o)}.  e must not already be assigned.
  PartialRealization extended(ItemId e, StateId state) const;

  bool has(ItemId e) const { return contains(domain_, e); }
  std::optional<StateId> state_of(ItemId e) const;
  ItemSet domain() const { return domain_; }
  int size() const { return static_cast<int>(assignments_.size()); }
  bool empty() const { return assignments_.empty(); }

  const std::vector<std::pair<ItemId, StateId>>& assignments() const {
    return assignments_;
  }

  // Canonical order-independent key (domain mask plus packed states),
  // usable for memoization.  Valid for n <= 16, s <= 8.
  std::uint64_t key(int num_states) const;

 private:
  std::vector<std::pair<ItemId, StateId>> assignments_;
  ItemSet domain_ = 0;
};

// ψ is consistent with φ iff they agree everywhere on dom(ψ).
bool is_consistent(const PartialRealization& psi, const Realization& phi);

// ψ ⊆ ψ' iff dom(ψ) ⊆ dom(ψ') and they agree on dom(ψ).
bool is_subrealization(const PartialRealization& psi,
                       const PartialRealization& psi_prime);

// Probability distribution over realizations.  Stored as an explicit
// positive-probability support; may be built from independent per-item
// marginals (the joint is expanded eagerly, capped at 2^24 outcomes).
class Prior {
 public:
  static Prior from_support(int num_items, int num_states,
                            std::vector<Realization> support,
                            std::vector<double> probabilities);
  static Prior from_independent(
      const std::vector<std::vector<double>>& marginals);

  int num_items() const { return num_items_; }
  int num_states() const { return num_states_; }

  const std::vector<Realization>& support() const { return support_; }
  const std::vector<double>& probabilities() const { return probabilities_; }

  // Per-item marginals when constructed from the independent form.
  const std::optional<std::vector<std::vector<double>>>& independent_form()
      const {
    return independent_;
  }

  // Pr[ψ ≺ Φ].
  double mass_consistent(const PartialRealization& psi) const;

  // p(φ | ψ): support restricted to realizations consistent with ψ,
  // renormalized.  Throws ZeroProbabilityObservation when the mass is zero.
  Prior conditioned(const PartialRealization& psi) const;

  // Pr[Φ(e) = o | ψ] for every state o.  Throws on zero-mass ψ.
  std::vector<double> state_distribution(ItemId e,
                                         const PartialRealization& psi) const;

 private:
  int num_items_ = 0;
  int num_states_ = 0;
  std::vector<Realization> support_;
  std::vector<double> probabilities_;
  std::optional<std::vector<std::vector<double>>> independent_;
};

// Oracle f(S, φ) >= 0 over item sets and supported realizations.
class UtilityFunction {
 public:
  virtual ~UtilityFunction() = default;
  virtual double eval(ItemSet items, const Realization& phi) const = 0;
};

// Σ_φ p(φ|ψ) f(S, φ) by exact enumeration over the conditioned support.
double expected_utility(const UtilityFunction& f, ItemSet items,
                        const Prior& prior, const PartialRealization& psi);

// Conditional expected marginal utility Δ(e|ψ); may be negative.
double marginal(const UtilityFunction& f, ItemId e,
                const PartialRealization& psi, const Prior& prior);

// f(e) = E_Φ f({e}, Φ) under the unconditioned prior.
double singleton_value(const UtilityFunction& f, ItemId e, const Prior& prior);

}  // namespace adasub

#endif  // ADASUB_MODEL_HPP
