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

#ifndef ADASUB_POLICIES_HPP
#define ADASUB_POLICIES_HPP

#include <unordered_map>
#include <vector>

#include "adasub/constraints.hpp"
#include "adasub/generator.hpp"
#include "adasub/model.hpp"

namespace adasub {

// Mixture weights of the sampling-based policies.  Defaults are the
// knapsack setting; the k-system policy ignores delta2.
struct SamplingParams {
  double delta0 = 0.5;
  double delta1 = 0.2;
  double delta2 = 0.4;

  void validate_knapsack() const;
  void validate_ksystem() const;
};

inline SamplingParams default_knapsack_params() { return {0.5, 0.2, 0.4}; }
inline SamplingParams default_ksystem_params() { return {0.5, 0.5, 0.0}; }

// One completed run: selections in order plus the branch record.
struct Trace {
  std::vector<std::pair<ItemId, StateId>> selections;
  ItemSet selected = 0;
  int bucket = -1;     // candidate policy index, -1 when not applicable
  ItemSet sample = 0;  // S1 / sampled pool, when applicable
};

// A policy is an immutable decision procedure.  Internal randomness is
// exposed as an enumerable branch space so expected utilities can be
// computed exactly; a run is a pure function of (branch, realization).
class Policy {
 public:
  virtual ~Policy() = default;

  virtual long branch_count() const = 0;
  virtual double branch_probability(long branch) const = 0;
  virtual Trace run(long branch, const Realization& phi) const = 0;

  // Samples a branch by its probability and runs it.
  Trace run_sampled(SplitMix64& rng, const Realization& phi) const;
};

// Density-greedy loop of the knapsack policy: repeatedly take the
// affordable pool item maximizing Δ(e|ψ)/c_e among positive marginals;
// the first round additionally requires f(e) > 0.  Ties break toward the
// smallest item index.
Trace density_greedy_run(const UtilityFunction& f, const Prior& prior,
                         const Knapsack& kp,
                         const std::vector<double>& singleton_values,
                         ItemSet pool, const Realization& phi);

// Greedy loop of the k-system policy: largest Δ(e|ψ) among items keeping
// the selection independent; same initial f(e) > 0 filter and tie-break.
Trace greedy_run(const UtilityFunction& f, const Prior& prior,
                 const IndependenceSystem& sys,
                 const std::vector<double>& singleton_values, ItemSet pool,
                 const Realization& phi);

// Deterministically selects a fixed item list in order, unconditionally.
class FixedSetPolicy : public Policy {
 public:
  explicit FixedSetPolicy(std::vector<ItemId> items)
      : items_(std::move(items)) {}
  long branch_count() const override { return 1; }
  double branch_probability(long) const override { return 1.0; }
  Trace run(long branch, const Realization& phi) const override;

 private:
  std::vector<ItemId> items_;
};

// Selects nothing; the neutral element of concatenation.
class EmptyPolicy : public Policy {
 public:
  long branch_count() const override { return 1; }
  double branch_probability(long) const override { return 1.0; }
  Trace run(long, const Realization&) const override { return Trace{}; }
};

// Picks the feasible singleton with the highest expected value (π^1 of the
// knapsack policy).  Selects nothing when no item fits the budget.
class BestSingletonPolicy : public Policy {
 public:
  BestSingletonPolicy(const UtilityFunction& f, const Prior& prior,
                      const Knapsack& kp);
  long branch_count() const override { return 1; }
  double branch_probability(long) const override { return 1.0; }
  Trace run(long branch, const Realization& phi) const override;
  ItemId best_item() const { return best_; }

 private:
  ItemId best_ = -1;
};

// Deterministic density greedy over a fixed pool.
class DensityGreedyPolicy : public Policy {
 public:
  DensityGreedyPolicy(const UtilityFunction& f, const Prior& prior,
                      const Knapsack& kp, ItemSet pool);
  long branch_count() const override { return 1; }
  double branch_probability(long) const override { return 1.0; }
  Trace run(long branch, const Realization& phi) const override;

 private:
  const UtilityFunction& f_;
  const Prior& prior_;
  Knapsack kp_;
  std::vector<double> singleton_values_;
  ItemSet pool_;
};

// Deterministic marginal greedy over a fixed pool under a k-system.
class GreedyPolicy : public Policy {
 public:
  GreedyPolicy(const UtilityFunction& f, const Prior& prior,
               const IndependenceSystem& sys, ItemSet pool);
  long branch_count() const override { return 1; }
  double branch_probability(long) const override { return 1.0; }
  Trace run(long branch, const Realization& phi) const override;

 private:
  const UtilityFunction& f_;
  const Prior& prior_;
  const IndependenceSystem& sys_;
  std::vector<double> singleton_values_;
  ItemSet pool_;
};

// Density greedy on a Bernoulli(σ) sample of the ground set; the sample is
// the enumerated randomness.  This is the policy π of the bound
// (2 + 1/σ) f_avg(π) + f(e*) >= f_avg(π^opt@π).
class SampledDensityGreedyPolicy : public Policy {
 public:
  SampledDensityGreedyPolicy(const UtilityFunction& f, const Prior& prior,
                             const Knapsack& kp, double sigma);
  long branch_count() const override { return 1L << n_; }
  double branch_probability(long branch) const override;
  Trace run(long branch, const Realization& phi) const override;

 private:
  const UtilityFunction& f_;
  const Prior& prior_;
  Knapsack kp_;
  std::vector<double> singleton_values_;
  double sigma_;
  int n_;
};

// Marginal greedy on a Bernoulli(σ) sample under a k-system.
class SampledGreedyPolicy : public Policy {
 public:
  SampledGreedyPolicy(const UtilityFunction& f, const Prior& prior,
                      const IndependenceSystem& sys, double sigma);
  long branch_count() const override { return 1L << n_; }
  double branch_probability(long branch) const override;
  Trace run(long branch, const Realization& phi) const override;

 private:
  const UtilityFunction& f_;
  const Prior& prior_;
  const IndependenceSystem& sys_;
  std::vector<double> singleton_values_;
  double sigma_;
  int n_;
};

// Sampling-based adaptive density-greedy policy for a knapsack constraint.
// Branch = candidate bucket (best singleton / density greedy on S1 /
// density greedy on S2) times the Bernoulli(δ0) partition.
class PiSadPolicy : public Policy {
 public:
  PiSadPolicy(const UtilityFunction& f, const Prior& prior, const Knapsack& kp,
              SamplingParams params);
  long branch_count() const override { return 3L << n_; }
  double branch_probability(long branch) const override;
  Trace run(long branch, const Realization& phi) const override;

 private:
  const UtilityFunction& f_;
  const Prior& prior_;
  Knapsack kp_;
  SamplingParams params_;
  std::vector<double> singleton_values_;
  ItemId best_singleton_ = -1;
  int n_;
};

// Two-candidate form of the knapsack policy at the default parameters:
// best singleton with probability 1/5, else density greedy on a
// Bernoulli(1/2) sample.
class SimplifiedPiSadPolicy : public Policy {
 public:
  SimplifiedPiSadPolicy(const UtilityFunction& f, const Prior& prior,
                        const Knapsack& kp);
  long branch_count() const override { return 1 + (1L << n_); }
  double branch_probability(long branch) const override;
  Trace run(long branch, const Realization& phi) const override;

 private:
  const UtilityFunction& f_;
  const Prior& prior_;
  Knapsack kp_;
  std::vector<double> singleton_values_;
  ItemId best_singleton_ = -1;
  int n_;
};

// Sampling-based adaptive greedy policy for a k-system constraint: greedy
// on S1 with probability δ1, else greedy on S2.
class PiSagPolicy : public Policy {
 public:
  PiSagPolicy(const UtilityFunction& f, const Prior& prior,
              const IndependenceSystem& sys, SamplingParams params);
  long branch_count() const override { return 2L << n_; }
  double branch_probability(long branch) const override;
  Trace run(long branch, const Realization& phi) const override;

 private:
  const UtilityFunction& f_;
  const Prior& prior_;
  const IndependenceSystem& sys_;
  SamplingParams params_;
  std::vector<double> singleton_values_;
  int n_;
};

// Adds items in a uniformly random order, keeping every prefix feasible.
// Branches enumerate all n! orders; capped at n <= 8.
class RandomFeasiblePolicy : public Policy {
 public:
  RandomFeasiblePolicy(const Knapsack* kp, const IndependenceSystem* sys,
                       int num_items);
  long branch_count() const override;
  double branch_probability(long branch) const override;
  Trace run(long branch, const Realization& phi) const override;

 private:
  const Knapsack* kp_;
  const IndependenceSystem* sys_;
  int n_;
};

// π@π': runs the first policy, then the second from a fresh empty
// observation; the selected set is the union.
class ConcatPolicy : public Policy {
 public:
  ConcatPolicy(const Policy& first, const Policy& second)
      : first_(first), second_(second) {}
  long branch_count() const override {
    return first_.branch_count() * second_.branch_count();
  }
  double branch_probability(long branch) const override;
  Trace run(long branch, const Realization& phi) const override;

 private:
  const Policy& first_;
  const Policy& second_;
};

// Deterministic adaptive policy given by a decision map from observation
// keys to the next item (-1 stops); produced by the optimal-policy oracle.
class DecisionTreePolicy : public Policy {
 public:
  DecisionTreePolicy(std::unordered_map<std::uint64_t, ItemId> actions,
                     int num_states)
      : actions_(std::move(actions)), num_states_(num_states) {}
  long branch_count() const override { return 1; }
  double branch_probability(long) const override { return 1.0; }
  Trace run(long branch, const Realization& phi) const override;

 private:
  std::unordered_map<std::uint64_t, ItemId> actions_;
  int num_states_;
};

// All items the policy selects under some branch and supported realization.
ItemSet policy_range(const Policy& policy, const Prior& prior);

std::vector<double> all_singleton_values(const UtilityFunction& f,
                                         const Prior& prior);

}  // namespace adasub

#endif  // ADASUB_POLICIES_HPP
