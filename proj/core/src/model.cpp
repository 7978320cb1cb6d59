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

#include "adasub/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace adasub {

std::uint32_t realization_index(const Realization& phi, int num_states) {
  std::uint32_t index = 0;
  std::uint32_t radix = 1;
  for (StateId state : phi.states) {
    index += static_cast<std::uint32_t>(state) * radix;
    radix *= static_cast<std::uint32_t>(num_states);
  }
  return index;
}

Realization realization_from_index(std::uint32_t index, int num_items,
                                   int num_states) {
  Realization phi;
  phi.states.resize(num_items);
  for (int e = 0; e < num_items; ++e) {
    phi.states[e] = static_cast<StateId>(index % num_states);
    index /= static_cast<std::uint32_t>(num_states);
  }
  return phi;
}

PartialRealization::PartialRealization(
    std::vector<std::pair<ItemId, StateId>> assignments)
    : assignments_(std::move(assignments)) {
  for (const auto& [e, state] : assignments_) {
    if (contains(domain_, e)) {
      throw std::invalid_argument("duplicate item in partial realization");
    }
    domain_ = with_item(domain_, e);
  }
}

PartialRealization PartialRealization::extended(ItemId e,
                                                StateId state) const {
  PartialRealization result = *this;
  if (result.has(e)) {
    throw std::invalid_argument("item already assigned");
  }
  result.assignments_.emplace_back(e, state);
  result.domain_ = with_item(result.domain_, e);
  return result;
}

std::optional<StateId> PartialRealization::state_of(ItemId e) const {
  for (const auto& [item, state] : assignments_) {
    if (item == e) return state;
  }
  return std::nullopt;
}

std::uint64_t PartialRealization::key(int num_states) const {
  // Pack states in item-index order so the key ignores selection order.
  std::uint64_t packed = 0;
  for (int e = 15; e >= 0; --e) {
    if (contains(domain_, e)) {
      packed = packed * static_cast<std::uint64_t>(num_states) +
               static_cast<std::uint64_t>(*state_of(e));
    }
  }
  return (packed << 16) | static_cast<std::uint64_t>(domain_);
}

bool is_consistent(const PartialRealization& psi, const Realization& phi) {
  for (const auto& [e, state] : psi.assignments()) {
    if (phi(e) != state) return false;
  }
  return true;
}

bool is_subrealization(const PartialRealization& psi,
                       const PartialRealization& psi_prime) {
  if ((psi.domain() & ~psi_prime.domain()) != 0) return false;
  for (const auto& [e, state] : psi.assignments()) {
    if (*psi_prime.state_of(e) != state) return false;
  }
  return true;
}

Prior Prior::from_support(int num_items, int num_states,
                          std::vector<Realization> support,
                          std::vector<double> probabilities) {
  if (support.size() != probabilities.size()) {
    throw std::invalid_argument("support/probability size mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (static_cast<int>(support[i].states.size()) != num_items) {
      throw std::invalid_argument("realization length != n");
    }
    for (StateId state : support[i].states) {
      if (state < 0 || state >= num_states) {
        throw std::invalid_argument("state out of range");
      }
    }
    if (probabilities[i] <= 0.0) {
      throw std::invalid_argument("support probabilities must be positive");
    }
    total += probabilities[i];
  }
  if (std::abs(total - 1.0) > kEps) {
    throw std::invalid_argument("support probabilities must sum to 1");
  }
  Prior prior;
  prior.num_items_ = num_items;
  prior.num_states_ = num_states;
  prior.support_ = std::move(support);
  prior.probabilities_ = std::move(probabilities);
  return prior;
}

Prior Prior::from_independent(
    const std::vector<std::vector<double>>& marginals) {
  const int n = static_cast<int>(marginals.size());
  if (n == 0) throw std::invalid_argument("no items");
  const int s = static_cast<int>(marginals[0].size());
  double joint_bits = n * std::log2(static_cast<double>(s));
  if (joint_bits > 24.0) {
    throw TooLargeToEnumerate("independent prior expands past 2^24 outcomes");
  }
  std::uint64_t joint_size = 1;
  for (const auto& m : marginals) {
    if (static_cast<int>(m.size()) != s) {
      throw std::invalid_argument("ragged independent marginals");
    }
    double total = 0.0;
    for (double p : m) {
      if (p < 0.0) throw std::invalid_argument("negative marginal");
      total += p;
    }
    if (std::abs(total - 1.0) > kEps) {
      throw std::invalid_argument("item marginal must sum to 1");
    }
    joint_size *= static_cast<std::uint64_t>(s);
  }
  std::vector<Realization> support;
  std::vector<double> probabilities;
  for (std::uint64_t index = 0; index < joint_size; ++index) {
    Realization phi =
        realization_from_index(static_cast<std::uint32_t>(index), n, s);
    double p = 1.0;
    for (int e = 0; e < n; ++e) p *= marginals[e][phi(e)];
    if (p > 0.0) {
      support.push_back(std::move(phi));
      probabilities.push_back(p);
    }
  }
  Prior prior = from_support(n, s, std::move(support), std::move(probabilities));
  prior.independent_ = marginals;
  return prior;
}

double Prior::mass_consistent(const PartialRealization& psi) const {
  double mass = 0.0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (is_consistent(psi, support_[i])) mass += probabilities_[i];
  }
  return mass;
}

Prior Prior::conditioned(const PartialRealization& psi) const {
  if (psi.empty()) return *this;
  std::vector<Realization> support;
  std::vector<double> probabilities;
  double mass = 0.0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (is_consistent(psi, support_[i])) {
      support.push_back(support_[i]);
      probabilities.push_back(probabilities_[i]);
      mass += probabilities_[i];
    }
  }
  if (mass <= 0.0) {
    throw ZeroProbabilityObservation(
        "no supported realization is consistent with the observation");
  }
  for (double& p : probabilities) p /= mass;
  Prior result;
  result.num_items_ = num_items_;
  result.num_states_ = num_states_;
  result.support_ = std::move(support);
  result.probabilities_ = std::move(probabilities);
  return result;
}

std::vector<double> Prior::state_distribution(
    ItemId e, const PartialRealization& psi) const {
  std::vector<double> dist(num_states_, 0.0);
  double mass = 0.0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (is_consistent(psi, support_[i])) {
      dist[support_[i](e)] += probabilities_[i];
      mass += probabilities_[i];
    }
  }
  if (mass <= 0.0) {
    throw ZeroProbabilityObservation("state distribution on zero-mass ψ");
  }
  for (double& p : dist) p /= mass;
  return dist;
}

double expected_utility(const UtilityFunction& f, ItemSet items,
                        const Prior& prior, const PartialRealization& psi) {
  // Single pass over the support; equivalent to conditioning first.
  double value = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < prior.support().size(); ++i) {
    if (!is_consistent(psi, prior.support()[i])) continue;
    mass += prior.probabilities()[i];
    value += prior.probabilities()[i] * f.eval(items, prior.support()[i]);
  }
  if (mass <= 0.0) {
    throw ZeroProbabilityObservation("expected utility on zero-mass ψ");
  }
  return value / mass;
}

double marginal(const UtilityFunction& f, ItemId e,
                const PartialRealization& psi, const Prior& prior) {
  const ItemSet dom = psi.domain();
  const ItemSet dom_with_e = with_item(dom, e);
  double value = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < prior.support().size(); ++i) {
    const Realization& phi = prior.support()[i];
    if (!is_consistent(psi, phi)) continue;
    mass += prior.probabilities()[i];
    value += prior.probabilities()[i] *
             (f.eval(dom_with_e, phi) - f.eval(dom, phi));
  }
  if (mass <= 0.0) {
    throw ZeroProbabilityObservation("marginal on zero-mass ψ");
  }
  // dom(ψ) ∪ {e} = dom(ψ) makes the difference vanish term by term.
  return value / mass;
}

double singleton_value(const UtilityFunction& f, ItemId e, const Prior& prior) {
  double value = 0.0;
  for (std::size_t i = 0; i < prior.support().size(); ++i) {
    value += prior.probabilities()[i] * f.eval(1u << e, prior.support()[i]);
  }
  return value;
}

}  // namespace adasub
