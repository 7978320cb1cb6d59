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

#include "adasub/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adasub {

EvalResult eval_exact(const Policy& policy, const UtilityFunction& f,
                      const Prior& prior) {
  const long branches = policy.branch_count();
  const long support = static_cast<long>(prior.support().size());
  if (branches <= 0 || branches > 2'000'000 ||
      branches * support > 50'000'000) {
    throw TooLargeToEnumerate("branch x support space too large for exact mode");
  }
  double value = 0.0;
  for (long branch = 0; branch < branches; ++branch) {
    const double branch_prob = policy.branch_probability(branch);
    if (branch_prob <= 0.0) continue;
    for (long i = 0; i < support; ++i) {
      const Realization& phi = prior.support()[i];
      const Trace trace = policy.run(branch, phi);
      value += branch_prob * prior.probabilities()[i] *
               f.eval(trace.selected, phi);
    }
  }
  EvalResult result;
  result.value = value;
  result.mode = EvalResult::Mode::kExact;
  result.branches = branches;
  return result;
}

EvalResult eval_mc(const Policy& policy, const UtilityFunction& f,
                   const Prior& prior, long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  SplitMix64 rng(seed ^ 0x5eeded00c0ffee00ULL);
  double sum = 0.0;
  double sum_squares = 0.0;
  for (long trial = 0; trial < trials; ++trial) {
    // Sample φ ~ p, then the policy's internal randomness.
    const double u = rng.next_unit();
    double cumulative = 0.0;
    std::size_t index = prior.support().size() - 1;
    for (std::size_t i = 0; i < prior.support().size(); ++i) {
      cumulative += prior.probabilities()[i];
      if (u < cumulative) {
        index = i;
        break;
      }
    }
    const Realization& phi = prior.support()[index];
    const Trace trace = policy.run_sampled(rng, phi);
    const double value = f.eval(trace.selected, phi);
    sum += value;
    sum_squares += value * value;
  }
  EvalResult result;
  result.mode = EvalResult::Mode::kMonteCarlo;
  result.trials = trials;
  result.value = sum / static_cast<double>(trials);
  if (trials > 1) {
    const double variance =
        std::max(0.0, (sum_squares - sum * sum / trials) / (trials - 1));
    result.std_error = std::sqrt(variance / static_cast<double>(trials));
  }
  return result;
}

namespace {

struct OptSearch {
  const UtilityFunction& f;
  const Prior& prior;
  const Knapsack* kp;
  const IndependenceSystem* sys;
  std::unordered_map<std::uint64_t, std::pair<double, ItemId>> memo;

  bool feasible_to_add(ItemSet selected, ItemId e) const {
    if (kp && kp->cost(selected) + kp->costs[e] > kp->budget + kEps) {
      return false;
    }
    if (sys && !sys->is_independent(with_item(selected, e))) return false;
    return true;
  }

  double visit(const PartialRealization& psi) {
    const std::uint64_t key = psi.key(prior.num_states());
    if (const auto it = memo.find(key); it != memo.end()) {
      return it->second.first;
    }
    double best = expected_utility(f, psi.domain(), prior, psi);
    ItemId action = -1;
    for (ItemId e = 0; e < prior.num_items(); ++e) {
      if (psi.has(e) || !feasible_to_add(psi.domain(), e)) continue;
      const std::vector<double> dist = prior.state_distribution(e, psi);
      double value = 0.0;
      for (StateId o = 0; o < prior.num_states(); ++o) {
        if (dist[o] <= 0.0) continue;
        value += dist[o] * visit(psi.extended(e, o));
      }
      if (value > best + kEps) {
        best = value;
        action = e;
      }
    }
    memo.emplace(key, std::make_pair(best, action));
    return best;
  }
};

}  // namespace

OptResult optimal_value(const UtilityFunction& f, const Prior& prior,
                        const Knapsack* kp, const IndependenceSystem* sys) {
  if (prior.num_items() > 5 || prior.support().size() > 32) {
    throw TooLargeToEnumerate(
        "optimal policy oracle capped at n <= 5, |support| <= 32");
  }
  OptSearch search{f, prior, kp, sys, {}};
  OptResult result;
  result.value = search.visit(PartialRealization{});
  result.actions.reserve(search.memo.size());
  for (const auto& [key, entry] : search.memo) {
    result.actions.emplace(key, entry.second);
  }
  return result;
}

Lemma1Report verify_lemma1(const Policy& pi_a, const Policy& pi_b,
                           const Policy& pi_c, const UtilityFunction& f,
                           const Prior& prior) {
  if ((policy_range(pi_b, prior) & policy_range(pi_c, prior)) != 0) {
    throw RangesOverlap("lemma requires disjoint ranges of the last two policies");
  }
  Lemma1Report report;
  report.base = eval_exact(pi_a, f, prior).value;
  report.with_b = eval_exact(ConcatPolicy(pi_a, pi_b), f, prior).value;
  report.with_c = eval_exact(ConcatPolicy(pi_a, pi_c), f, prior).value;
  report.holds = report.with_b + report.with_c >= report.base - kEps;
  return report;
}

Lemma2Report verify_lemma2(double sigma, const UtilityFunction& f,
                           const Prior& prior, const Knapsack& kp) {
  const SampledDensityGreedyPolicy pi(f, prior, kp, sigma);
  const OptResult opt = optimal_value(f, prior, &kp, nullptr);
  const DecisionTreePolicy opt_policy = opt.as_policy(prior.num_states());

  Lemma2Report report;
  report.pi_value = eval_exact(pi, f, prior).value;
  for (ItemId e = 0; e < prior.num_items(); ++e) {
    if (kp.costs[e] > kp.budget + kEps) continue;
    report.best_singleton =
        std::max(report.best_singleton, singleton_value(f, e, prior));
  }
  report.lhs = (2.0 + 1.0 / sigma) * report.pi_value + report.best_singleton;
  report.rhs = eval_exact(ConcatPolicy(opt_policy, pi), f, prior).value;
  report.holds = report.lhs >= report.rhs - kEps;
  return report;
}

Lemma3Report verify_lemma3(double sigma, const UtilityFunction& f,
                           const Prior& prior, const IndependenceSystem& sys) {
  const SampledGreedyPolicy pi(f, prior, sys, sigma);
  const OptResult opt = optimal_value(f, prior, nullptr, &sys);
  const DecisionTreePolicy opt_policy = opt.as_policy(prior.num_states());

  Lemma3Report report;
  report.k = verify_k(sys);
  report.pi_value = eval_exact(pi, f, prior).value;
  report.lhs = (report.k + 1.0 / sigma) * report.pi_value;
  report.rhs = eval_exact(ConcatPolicy(opt_policy, pi), f, prior).value;
  report.holds = report.lhs >= report.rhs - kEps;
  return report;
}

RatioReport ratio_report(const Instance& instance, RatioPolicy kind) {
  RatioReport report;
  const UtilityFunction& f = *instance.utility;
  const Prior& prior = instance.prior;
  if (kind == RatioPolicy::kSag) {
    const auto sys = instance.independence_system();
    if (!sys) throw std::invalid_argument("sag ratio needs a k-system constraint");
    const PiSagPolicy policy(f, prior, *sys, default_ksystem_params());
    report.policy = "sag";
    report.value = eval_exact(policy, f, prior).value;
    report.opt = optimal_value(f, prior, nullptr, &*sys).value;
    report.bound = 1.0 / (2.0 * verify_k(*sys) + 4.0);
  } else {
    const auto kp = instance.knapsack();
    if (!kp) throw std::invalid_argument("sad ratio needs a knapsack constraint");
    if (kind == RatioPolicy::kSad) {
      const PiSadPolicy policy(f, prior, *kp, default_knapsack_params());
      report.policy = "sad";
      report.value = eval_exact(policy, f, prior).value;
    } else {
      const SimplifiedPiSadPolicy policy(f, prior, *kp);
      report.policy = "sad-simplified";
      report.value = eval_exact(policy, f, prior).value;
    }
    report.opt = optimal_value(f, prior, &*kp, nullptr).value;
    report.bound = 0.1;
  }
  report.ratio = report.opt > kEps ? report.value / report.opt : 1.0;
  report.pass = report.value >= report.bound * report.opt - kEps;
  return report;
}

}  // namespace adasub
