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

#include "adasub/checkers.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace adasub {

namespace {

void require_desk_scale(const Prior& prior, const char* op) {
  if (prior.num_items() > 6 || prior.num_states() > 3) {
    throw TooLargeToVerify(std::string(op) + " capped at n <= 6, s <= 3");
  }
}

// ψ restricted to a sub-domain, keeping item-index order.
PartialRealization restrict(const PartialRealization& psi, ItemSet domain) {
  std::vector<std::pair<ItemId, StateId>> assignments;
  for (const auto& [e, state] : psi.assignments()) {
    if (contains(domain, e)) assignments.emplace_back(e, state);
  }
  return PartialRealization(std::move(assignments));
}

}  // namespace

std::string Violation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kAdaptive:
      out << "adaptive submodularity violated: item " << item << ", lhs "
          << lhs << " < rhs " << rhs;
      break;
    case Kind::kPointwise:
      out << "pointwise submodularity violated: item " << item << ", E1="
          << set_small << ", E2=" << set_large << ", realization "
          << realization << ", lhs " << lhs << " < rhs " << rhs;
      break;
    case Kind::kNonnegative:
      out << "negative utility " << lhs << " at set " << set_small
          << ", realization " << realization;
      break;
  }
  return out.str();
}

std::vector<PartialRealization> enumerate_partial_realizations(
    const Prior& prior) {
  const int n = prior.num_items();
  const int s = prior.num_states();
  std::vector<PartialRealization> result;
  for (ItemSet domain = 0; domain <= full_set(n); ++domain) {
    // Distinct restrictions of supported realizations to this domain.
    std::map<std::uint64_t, PartialRealization> seen;
    for (const Realization& phi : prior.support()) {
      std::vector<std::pair<ItemId, StateId>> assignments;
      for (ItemId e = 0; e < n; ++e) {
        if (contains(domain, e)) assignments.emplace_back(e, phi(e));
      }
      PartialRealization psi(std::move(assignments));
      seen.emplace(psi.key(s), std::move(psi));
    }
    for (auto& [key, psi] : seen) result.push_back(std::move(psi));
    if (domain == full_set(n)) break;
  }
  return result;
}

std::optional<Violation> check_adaptive_submodular(const UtilityFunction& f,
                                                   const Prior& prior) {
  require_desk_scale(prior, "check_adaptive_submodular");
  const int n = prior.num_items();
  const int s = prior.num_states();
  const auto psis = enumerate_partial_realizations(prior);

  // Δ(e|ψ) for every positive-probability ψ and e ∉ dom(ψ).
  std::unordered_map<std::uint64_t, std::vector<double>> delta;
  delta.reserve(psis.size());
  for (const auto& psi : psis) {
    std::vector<double> row(n, 0.0);
    for (ItemId e = 0; e < n; ++e) {
      if (!psi.has(e)) row[e] = marginal(f, e, psi, prior);
    }
    delta.emplace(psi.key(s), std::move(row));
  }

  for (const auto& psi_prime : psis) {
    const ItemSet domain = psi_prime.domain();
    const auto& larger = delta.at(psi_prime.key(s));
    // Every sub-domain restriction is itself positive-probability.
    for (ItemSet sub = domain;; sub = (sub - 1) & domain) {
      if (sub != domain) {
        const PartialRealization psi = restrict(psi_prime, sub);
        const auto& smaller = delta.at(psi.key(s));
        for (ItemId e = 0; e < n; ++e) {
          if (contains(domain, e)) continue;
          if (smaller[e] < larger[e] - kEps) {
            Violation v;
            v.kind = Violation::Kind::kAdaptive;
            v.psi = psi;
            v.psi_prime = psi_prime;
            v.item = e;
            v.lhs = smaller[e];
            v.rhs = larger[e];
            return v;
          }
        }
      }
      if (sub == 0) break;
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_pointwise_submodular(const UtilityFunction& f,
                                                    const Prior& prior) {
  require_desk_scale(prior, "check_pointwise_submodular");
  const int n = prior.num_items();
  const int s = prior.num_states();
  for (const Realization& phi : prior.support()) {
    for (ItemId e = 0; e < n; ++e) {
      const ItemSet others = full_set(n) & ~(1u << e);
      for (ItemSet large = others;; large = (large - 1) & others) {
        const double gain_large =
            f.eval(with_item(large, e), phi) - f.eval(large, phi);
        for (ItemSet small = large;; small = (small - 1) & large) {
          const double gain_small =
              f.eval(with_item(small, e), phi) - f.eval(small, phi);
          if (gain_small < gain_large - kEps) {
            Violation v;
            v.kind = Violation::Kind::kPointwise;
            v.set_small = small;
            v.set_large = large;
            v.realization = realization_index(phi, s);
            v.item = e;
            v.lhs = gain_small;
            v.rhs = gain_large;
            return v;
          }
          if (small == 0) break;
        }
        if (large == 0) break;
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_nonnegative(const UtilityFunction& f,
                                           const Prior& prior) {
  require_desk_scale(prior, "check_nonnegative");
  const int n = prior.num_items();
  const int s = prior.num_states();
  for (const Realization& phi : prior.support()) {
    for (ItemSet items = 0; items <= full_set(n); ++items) {
      const double value = f.eval(items, phi);
      if (value < -kEps) {
        Violation v;
        v.kind = Violation::Kind::kNonnegative;
        v.set_small = items;
        v.realization = realization_index(phi, s);
        v.lhs = value;
        return v;
      }
      if (items == full_set(n)) break;
    }
  }
  return std::nullopt;
}

std::optional<NonmonotoneWitness> check_nonmonotone(const UtilityFunction& f,
                                                    const Prior& prior) {
  require_desk_scale(prior, "check_nonmonotone");
  const int n = prior.num_items();
  for (const auto& psi : enumerate_partial_realizations(prior)) {
    for (ItemId e = 0; e < n; ++e) {
      if (psi.has(e)) continue;
      const double delta = marginal(f, e, psi, prior);
      if (delta < -kEps) {
        return NonmonotoneWitness{psi, e, delta};
      }
    }
  }
  return std::nullopt;
}

}  // namespace adasub
