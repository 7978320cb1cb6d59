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

#ifndef ADASUB_CONSTRAINTS_HPP
#define ADASUB_CONSTRAINTS_HPP

#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "adasub/model.hpp"

namespace adasub {

// Deterministic item costs c_e > 0 and a budget b > 0.
struct Knapsack {
  std::vector<double> costs;
  double budget = 0.0;

  double cost(ItemSet items) const;
  // Σ c_e <= b + ε; the tolerance absorbs float accumulation.
  bool feasible(ItemSet items) const { return cost(items) <= budget + kEps; }
};

struct ConstraintSpec;

struct Cardinality {
  int limit = 0;
};
struct PartitionMatroid {
  std::vector<ItemSet> blocks;
  std::vector<int> limits;
};
struct MatroidIntersection {
  std::vector<ConstraintSpec> matroids;
};
struct ExplicitSystem {
  // Listed independent sets; closed downward automatically.
  std::vector<ItemSet> sets;
};
struct KnapsackSpec {
  std::vector<double> costs;
  double budget = 0.0;
};

// Tagged union of the supported constraint families.
struct ConstraintSpec {
  std::variant<Cardinality, PartitionMatroid, MatroidIntersection,
               ExplicitSystem, KnapsackSpec>
      value;

  bool is_knapsack() const {
    return std::holds_alternative<KnapsackSpec>(value);
  }
};

// Downward-closed membership oracle with a declared k parameter.  Built from
// a non-knapsack ConstraintSpec or a custom predicate.
class IndependenceSystem {
 public:
  using Oracle = std::function<bool(ItemSet)>;

  static IndependenceSystem from_spec(const ConstraintSpec& spec,
                                      int num_items);
  // The predicate is trusted to describe an independence system; declared_k
  // is the caller's k bound.
  static IndependenceSystem custom(Oracle oracle, int num_items,
                                   int declared_k);

  bool is_independent(ItemSet items) const { return oracle_(items); }
  int declared_k() const { return declared_k_; }
  int num_items() const { return num_items_; }

 private:
  Oracle oracle_;
  int num_items_ = 0;
  int declared_k_ = 1;
};

// V ∪ {e} ∈ I.  Throws NotIndependentBase when V itself is dependent.
bool can_add(const IndependenceSystem& sys, ItemSet base, ItemId e);

// Smallest integer k such that every restriction R ⊆ E has
// max-base-size(R) <= k * min-base-size(R), by full enumeration.
// Caps at n <= 16 (TooLargeToVerify); a restriction mixing an empty base
// with a nonempty one raises DegenerateSystem.
int verify_k(const IndependenceSystem& sys);

// Exhaustive check of ∅ ∈ I and downward closure; n <= 16.
bool is_valid_independence_system(const IndependenceSystem& sys);

bool knapsack_feasible(const Knapsack& kp, ItemSet items);

}  // namespace adasub

#endif  // ADASUB_CONSTRAINTS_HPP
