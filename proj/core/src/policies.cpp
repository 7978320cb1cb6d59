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

#include "adasub/policies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adasub {

void SamplingParams::validate_knapsack() const {
  if (delta0 <= 0.0 || delta0 >= 1.0) {
    throw std::invalid_argument("delta0 must lie in (0,1)");
  }
  if (delta1 < 0.0 || delta2 < 0.0 || delta1 + delta2 > 1.0 + kEps) {
    throw std::invalid_argument("need delta1, delta2 >= 0 and delta1+delta2 <= 1");
  }
}

void SamplingParams::validate_ksystem() const {
  if (delta0 <= 0.0 || delta0 >= 1.0) {
    throw std::invalid_argument("delta0 must lie in (0,1)");
  }
  if (delta1 < 0.0 || delta1 > 1.0) {
    throw std::invalid_argument("delta1 must lie in [0,1]");
  }
}

namespace {

double partition_probability(ItemSet mask, int n, double p) {
  double prob = 1.0;
  for (ItemId e = 0; e < n; ++e) {
    prob *= contains(mask, e) ? p : (1.0 - p);
  }
  return prob;
}

void select(Trace& trace, PartialRealization& psi, ItemId e,
            const Realization& phi) {
  trace.selections.emplace_back(e, phi(e));
  trace.selected = with_item(trace.selected, e);
  psi = psi.extended(e, phi(e));
}

}  // namespace

Trace Policy::run_sampled(SplitMix64& rng, const Realization& phi) const {
  const double u = rng.next_unit();
  double cumulative = 0.0;
  const long count = branch_count();
  for (long branch = 0; branch < count; ++branch) {
    cumulative += branch_probability(branch);
    if (u < cumulative || branch == count - 1) return run(branch, phi);
  }
  return run(count - 1, phi);
}

std::vector<double> all_singleton_values(const UtilityFunction& f,
                                         const Prior& prior) {
  std::vector<double> values(prior.num_items());
  for (ItemId e = 0; e < prior.num_items(); ++e) {
    values[e] = singleton_value(f, e, prior);
  }
  return values;
}

Trace density_greedy_run(const UtilityFunction& f, const Prior& prior,
                         const Knapsack& kp,
                         const std::vector<double>& singleton_values,
                         ItemSet pool, const Realization& phi) {
  Trace trace;
  PartialRealization psi;
  double remaining = kp.budget;
  bool first_round = true;
  const int n = prior.num_items();
  while (true) {
    ItemId best = -1;
    double best_ratio = 0.0;
    for (ItemId e = 0; e < n; ++e) {
      if (!contains(pool, e) || contains(trace.selected, e)) continue;
      if (kp.costs[e] > remaining + kEps) continue;
      if (first_round && singleton_values[e] <= kEps) continue;
      const double delta = marginal(f, e, psi, prior);
      if (delta <= kEps) continue;
      const double ratio = delta / kp.costs[e];
      if (best == -1 || ratio > best_ratio + kEps) {
        best = e;
        best_ratio = ratio;
      }
    }
    if (best == -1) break;
    select(trace, psi, best, phi);
    remaining -= kp.costs[best];
    first_round = false;
  }
  return trace;
}

Trace greedy_run(const UtilityFunction& f, const Prior& prior,
                 const IndependenceSystem& sys,
                 const std::vector<double>& singleton_values, ItemSet pool,
                 const Realization& phi) {
  Trace trace;
  PartialRealization psi;
  bool first_round = true;
  const int n = prior.num_items();
  while (true) {
    ItemId best = -1;
    double best_delta = 0.0;
    for (ItemId e = 0; e < n; ++e) {
      if (!contains(pool, e) || contains(trace.selected, e)) continue;
      if (!sys.is_independent(with_item(trace.selected, e))) continue;
      if (first_round && singleton_values[e] <= kEps) continue;
      const double delta = marginal(f, e, psi, prior);
      if (delta <= kEps) continue;
      if (best == -1 || delta > best_delta + kEps) {
        best = e;
        best_delta = delta;
      }
    }
    if (best == -1) break;
    select(trace, psi, best, phi);
    first_round = false;
  }
  return trace;
}

Trace FixedSetPolicy::run(long, const Realization& phi) const {
  Trace trace;
  PartialRealization psi;
  for (ItemId e : items_) {
    if (!contains(trace.selected, e)) select(trace, psi, e, phi);
  }
  return trace;
}

BestSingletonPolicy::BestSingletonPolicy(const UtilityFunction& f,
                                         const Prior& prior,
                                         const Knapsack& kp) {
  double best_value = 0.0;
  for (ItemId e = 0; e < prior.num_items(); ++e) {
    if (kp.costs[e] > kp.budget + kEps) continue;
    const double value = singleton_value(f, e, prior);
    if (best_ == -1 || value > best_value + kEps) {
      best_ = e;
      best_value = value;
    }
  }
}

Trace BestSingletonPolicy::run(long, const Realization& phi) const {
  Trace trace;
  trace.bucket = 0;
  if (best_ != -1) {
    PartialRealization psi;
    select(trace, psi, best_, phi);
  }
  return trace;
}

DensityGreedyPolicy::DensityGreedyPolicy(const UtilityFunction& f,
                                         const Prior& prior,
                                         const Knapsack& kp, ItemSet pool)
    : f_(f),
      prior_(prior),
      kp_(kp),
      singleton_values_(all_singleton_values(f, prior)),
      pool_(pool) {}

Trace DensityGreedyPolicy::run(long, const Realization& phi) const {
  return density_greedy_run(f_, prior_, kp_, singleton_values_, pool_, phi);
}

GreedyPolicy::GreedyPolicy(const UtilityFunction& f, const Prior& prior,
                           const IndependenceSystem& sys, ItemSet pool)
    : f_(f),
      prior_(prior),
      sys_(sys),
      singleton_values_(all_singleton_values(f, prior)),
      pool_(pool) {}

Trace GreedyPolicy::run(long, const Realization& phi) const {
  return greedy_run(f_, prior_, sys_, singleton_values_, pool_, phi);
}

SampledDensityGreedyPolicy::SampledDensityGreedyPolicy(
    const UtilityFunction& f, const Prior& prior, const Knapsack& kp,
    double sigma)
    : f_(f),
      prior_(prior),
      kp_(kp),
      singleton_values_(all_singleton_values(f, prior)),
      sigma_(sigma),
      n_(prior.num_items()) {
  if (sigma <= 0.0 || sigma > 1.0) {
    throw std::invalid_argument("sigma must lie in (0,1]");
  }
  if (n_ > 12) throw TooLargeToEnumerate("sample enumeration capped at n <= 12");
}

double SampledDensityGreedyPolicy::branch_probability(long branch) const {
  return partition_probability(static_cast<ItemSet>(branch), n_, sigma_);
}

Trace SampledDensityGreedyPolicy::run(long branch,
                                      const Realization& phi) const {
  const ItemSet sample = static_cast<ItemSet>(branch);
  Trace trace =
      density_greedy_run(f_, prior_, kp_, singleton_values_, sample, phi);
  trace.sample = sample;
  return trace;
}

SampledGreedyPolicy::SampledGreedyPolicy(const UtilityFunction& f,
                                         const Prior& prior,
                                         const IndependenceSystem& sys,
                                         double sigma)
    : f_(f),
      prior_(prior),
      sys_(sys),
      singleton_values_(all_singleton_values(f, prior)),
      sigma_(sigma),
      n_(prior.num_items()) {
  if (sigma <= 0.0 || sigma > 1.0) {
    throw std::invalid_argument("sigma must lie in (0,1]");
  }
  if (n_ > 12) throw TooLargeToEnumerate("sample enumeration capped at n <= 12");
}

double SampledGreedyPolicy::branch_probability(long branch) const {
  return partition_probability(static_cast<ItemSet>(branch), n_, sigma_);
}

Trace SampledGreedyPolicy::run(long branch, const Realization& phi) const {
  const ItemSet sample = static_cast<ItemSet>(branch);
  Trace trace = greedy_run(f_, prior_, sys_, singleton_values_, sample, phi);
  trace.sample = sample;
  return trace;
}

PiSadPolicy::PiSadPolicy(const UtilityFunction& f, const Prior& prior,
                         const Knapsack& kp, SamplingParams params)
    : f_(f),
      prior_(prior),
      kp_(kp),
      params_(params),
      singleton_values_(all_singleton_values(f, prior)),
      n_(prior.num_items()) {
  params_.validate_knapsack();
  if (n_ > 12) {
    throw TooLargeToEnumerate("partition enumeration capped at n <= 12");
  }
  double best_value = 0.0;
  for (ItemId e = 0; e < n_; ++e) {
    if (kp_.costs[e] > kp_.budget + kEps) continue;
    if (best_singleton_ == -1 || singleton_values_[e] > best_value + kEps) {
      best_singleton_ = e;
      best_value = singleton_values_[e];
    }
  }
}

double PiSadPolicy::branch_probability(long branch) const {
  const int bucket = static_cast<int>(branch >> n_);
  const ItemSet mask = static_cast<ItemSet>(branch & (full_set(n_)));
  const double bucket_prob =
      bucket == 0 ? params_.delta1
                  : (bucket == 1 ? params_.delta2
                                 : 1.0 - params_.delta1 - params_.delta2);
  return bucket_prob * partition_probability(mask, n_, params_.delta0);
}

Trace PiSadPolicy::run(long branch, const Realization& phi) const {
  const int bucket = static_cast<int>(branch >> n_);
  const ItemSet s1 = static_cast<ItemSet>(branch & full_set(n_));
  Trace trace;
  if (bucket == 0) {
    if (best_singleton_ != -1) {
      PartialRealization psi;
      select(trace, psi, best_singleton_, phi);
    }
  } else {
    const ItemSet pool = bucket == 1 ? s1 : (full_set(n_) & ~s1);
    trace = density_greedy_run(f_, prior_, kp_, singleton_values_, pool, phi);
  }
  trace.bucket = bucket;
  trace.sample = s1;
  return trace;
}

SimplifiedPiSadPolicy::SimplifiedPiSadPolicy(const UtilityFunction& f,
                                             const Prior& prior,
                                             const Knapsack& kp)
    : f_(f),
      prior_(prior),
      kp_(kp),
      singleton_values_(all_singleton_values(f, prior)),
      n_(prior.num_items()) {
  if (n_ > 12) {
    throw TooLargeToEnumerate("sample enumeration capped at n <= 12");
  }
  double best_value = 0.0;
  for (ItemId e = 0; e < n_; ++e) {
    if (kp_.costs[e] > kp_.budget + kEps) continue;
    if (best_singleton_ == -1 || singleton_values_[e] > best_value + kEps) {
      best_singleton_ = e;
      best_value = singleton_values_[e];
    }
  }
}

double SimplifiedPiSadPolicy::branch_probability(long branch) const {
  if (branch == 0) return 0.2;
  return 0.8 * std::ldexp(1.0, -n_);
}

Trace SimplifiedPiSadPolicy::run(long branch, const Realization& phi) const {
  Trace trace;
  if (branch == 0) {
    if (best_singleton_ != -1) {
      PartialRealization psi;
      select(trace, psi, best_singleton_, phi);
    }
    trace.bucket = 0;
    return trace;
  }
  const ItemSet sample = static_cast<ItemSet>(branch - 1);
  trace = density_greedy_run(f_, prior_, kp_, singleton_values_, sample, phi);
  trace.bucket = 1;
  trace.sample = sample;
  return trace;
}

PiSagPolicy::PiSagPolicy(const UtilityFunction& f, const Prior& prior,
                         const IndependenceSystem& sys, SamplingParams params)
    : f_(f),
      prior_(prior),
      sys_(sys),
      params_(params),
      singleton_values_(all_singleton_values(f, prior)),
      n_(prior.num_items()) {
  params_.validate_ksystem();
  if (n_ > 12) {
    throw TooLargeToEnumerate("partition enumeration capped at n <= 12");
  }
}

double PiSagPolicy::branch_probability(long branch) const {
  const int bucket = static_cast<int>(branch >> n_);
  const ItemSet mask = static_cast<ItemSet>(branch & full_set(n_));
  const double bucket_prob = bucket == 0 ? params_.delta1 : 1.0 - params_.delta1;
  return bucket_prob * partition_probability(mask, n_, params_.delta0);
}

Trace PiSagPolicy::run(long branch, const Realization& phi) const {
  const int bucket = static_cast<int>(branch >> n_);
  const ItemSet s1 = static_cast<ItemSet>(branch & full_set(n_));
  const ItemSet pool = bucket == 0 ? s1 : (full_set(n_) & ~s1);
  Trace trace = greedy_run(f_, prior_, sys_, singleton_values_, pool, phi);
  trace.bucket = bucket;
  trace.sample = s1;
  return trace;
}

RandomFeasiblePolicy::RandomFeasiblePolicy(const Knapsack* kp,
                                           const IndependenceSystem* sys,
                                           int num_items)
    : kp_(kp), sys_(sys), n_(num_items) {
  if (n_ > 8) {
    throw TooLargeToEnumerate("permutation enumeration capped at n <= 8");
  }
}

long RandomFeasiblePolicy::branch_count() const {
  long count = 1;
  for (int i = 2; i <= n_; ++i) count *= i;
  return count;
}

double RandomFeasiblePolicy::branch_probability(long) const {
  return 1.0 / static_cast<double>(branch_count());
}

Trace RandomFeasiblePolicy::run(long branch, const Realization& phi) const {
  // Decode the branch as a Lehmer code into a permutation of the items.
  std::vector<ItemId> remaining(n_);
  for (int i = 0; i < n_; ++i) remaining[i] = i;
  std::vector<ItemId> order;
  for (int slots = n_; slots >= 1; --slots) {
    const long index = branch % slots;
    branch /= slots;
    order.push_back(remaining[index]);
    remaining.erase(remaining.begin() + index);
  }
  Trace trace;
  PartialRealization psi;
  double budget_left = kp_ ? kp_->budget : 0.0;
  for (ItemId e : order) {
    if (kp_ && kp_->costs[e] > budget_left + kEps) continue;
    if (sys_ && !sys_->is_independent(with_item(trace.selected, e))) continue;
    select(trace, psi, e, phi);
    if (kp_) budget_left -= kp_->costs[e];
  }
  return trace;
}

double ConcatPolicy::branch_probability(long branch) const {
  const long second_count = second_.branch_count();
  return first_.branch_probability(branch / second_count) *
         second_.branch_probability(branch % second_count);
}

Trace ConcatPolicy::run(long branch, const Realization& phi) const {
  const long second_count = second_.branch_count();
  const Trace first = first_.run(branch / second_count, phi);
  // The second policy runs blind: it ignores the first run's observations.
  const Trace second = second_.run(branch % second_count, phi);
  Trace combined = first;
  for (const auto& [e, state] : second.selections) {
    if (!contains(combined.selected, e)) {
      combined.selections.emplace_back(e, state);
      combined.selected = with_item(combined.selected, e);
    }
  }
  return combined;
}

Trace DecisionTreePolicy::run(long, const Realization& phi) const {
  Trace trace;
  PartialRealization psi;
  while (true) {
    const auto it = actions_.find(psi.key(num_states_));
    if (it == actions_.end() || it->second < 0) break;
    select(trace, psi, it->second, phi);
  }
  return trace;
}

ItemSet policy_range(const Policy& policy, const Prior& prior) {
  ItemSet range = 0;
  for (long branch = 0; branch < policy.branch_count(); ++branch) {
    if (policy.branch_probability(branch) <= 0.0) continue;
    for (const Realization& phi : prior.support()) {
      range |= policy.run(branch, phi).selected;
    }
  }
  return range;
}

}  // namespace adasub
