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

#ifndef ADASUB_EVALUATE_HPP
#define ADASUB_EVALUATE_HPP

#include <string>

#include "adasub/instance.hpp"
#include "adasub/policies.hpp"

namespace adasub {

struct EvalResult {
  enum class Mode { kExact, kMonteCarlo };
  double value = 0.0;
  Mode mode = Mode::kExact;
  long trials = 0;        // Monte Carlo only
  double std_error = 0.0; // Monte Carlo only
  long branches = 0;      // exact only
};

// f_avg(π) = Σ_branch Pr[branch] Σ_φ p(φ) f(E(π,φ), φ), exact up to float
// accumulation; summation order is fixed (branch-major, support order).
EvalResult eval_exact(const Policy& policy, const UtilityFunction& f,
                      const Prior& prior);

// Seeded sample-mean estimate with standard error.
EvalResult eval_mc(const Policy& policy, const UtilityFunction& f,
                   const Prior& prior, long trials, std::uint64_t seed);

// Optimal adaptive policy by exhaustive belief-state recursion; stopping is
// always allowed.  Caps: n <= 5 and |support| <= 32.
struct OptResult {
  double value = 0.0;
  // Observation key -> next item; -1 stops.  Covers every reachable ψ.
  std::unordered_map<std::uint64_t, ItemId> actions;

  DecisionTreePolicy as_policy(int num_states) const {
    return DecisionTreePolicy(actions, num_states);
  }
};

OptResult optimal_value(const UtilityFunction& f, const Prior& prior,
                        const Knapsack* kp, const IndependenceSystem* sys);

// f_avg(π^a@π^b) + f_avg(π^a@π^c) >= f_avg(π^a), requiring disjoint ranges
// of the last two policies (RangesOverlap otherwise).
struct Lemma1Report {
  double base = 0.0;        // f_avg(π^a)
  double with_b = 0.0;      // f_avg(π^a@π^b)
  double with_c = 0.0;      // f_avg(π^a@π^c)
  bool holds = false;
};

Lemma1Report verify_lemma1(const Policy& pi_a, const Policy& pi_b,
                           const Policy& pi_c, const UtilityFunction& f,
                           const Prior& prior);

// (2 + 1/σ) f_avg(π) + f(e*) >= f_avg(π^opt@π) for density greedy on a
// Bernoulli(σ) sample under a knapsack.
struct Lemma2Report {
  double pi_value = 0.0;
  double best_singleton = 0.0;  // f(e*)
  double lhs = 0.0;
  double rhs = 0.0;             // f_avg(π^opt@π)
  bool holds = false;
};

Lemma2Report verify_lemma2(double sigma, const UtilityFunction& f,
                           const Prior& prior, const Knapsack& kp);

// (k + 1/σ) f_avg(π) >= f_avg(π^opt@π) for greedy on a Bernoulli(σ) sample
// under a k-system; k comes from verify_k.
struct Lemma3Report {
  int k = 1;
  double pi_value = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

Lemma3Report verify_lemma3(double sigma, const UtilityFunction& f,
                           const Prior& prior, const IndependenceSystem& sys);

// Exact policy value against the optimum and the proven bound (1/10 for the
// knapsack policy, 1/(2k+4) for the k-system policy).  OPT = 0 reports
// ratio 1 by convention.
struct RatioReport {
  std::string policy;
  double value = 0.0;
  double opt = 0.0;
  double ratio = 1.0;
  double bound = 0.0;
  bool pass = false;
};

enum class RatioPolicy { kSad, kSadSimplified, kSag };

RatioReport ratio_report(const Instance& instance, RatioPolicy kind);

}  // namespace adasub

#endif  // ADASUB_EVALUATE_HPP
