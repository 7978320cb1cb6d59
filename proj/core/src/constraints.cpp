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

#include "adasub/constraints.hpp"

#include <algorithm>
#include <stdexcept>

namespace adasub {

double Knapsack::cost(ItemSet items) const {
  double total = 0.0;
  for (ItemId e = 0; e < static_cast<ItemId>(costs.size()); ++e) {
    if (contains(items, e)) total += costs[e];
  }
  return total;
}

bool knapsack_feasible(const Knapsack& kp, ItemSet items) {
  return kp.feasible(items);
}

namespace {

IndependenceSystem::Oracle make_oracle(const ConstraintSpec& spec,
                                       int num_items, int& declared_k);

IndependenceSystem::Oracle oracle_for(const Cardinality& card) {
  return [limit = card.limit](ItemSet items) {
    return set_size(items) <= limit;
  };
}

IndependenceSystem::Oracle oracle_for(const PartitionMatroid& pm) {
  if (pm.blocks.size() != pm.limits.size()) {
    throw std::invalid_argument("partition blocks/limits size mismatch");
  }
  return [blocks = pm.blocks, limits = pm.limits](ItemSet items) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (set_size(items & blocks[b]) > limits[b]) return false;
    }
    return true;
  };
}

IndependenceSystem::Oracle oracle_for(const MatroidIntersection& mi,
                                      int num_items) {
  std::vector<IndependenceSystem::Oracle> oracles;
  for (const ConstraintSpec& m : mi.matroids) {
    int k_unused = 1;
    oracles.push_back(make_oracle(m, num_items, k_unused));
  }
  return [oracles = std::move(oracles)](ItemSet items) {
    return std::all_of(oracles.begin(), oracles.end(),
                       [items](const auto& o) { return o(items); });
  };
}

IndependenceSystem::Oracle oracle_for(const ExplicitSystem& ex) {
  return [sets = ex.sets](ItemSet items) {
    if (items == 0) return true;
    return std::any_of(sets.begin(), sets.end(), [items](ItemSet listed) {
      return (items & ~listed) == 0;
    });
  };
}

IndependenceSystem::Oracle make_oracle(const ConstraintSpec& spec,
                                       int num_items, int& declared_k) {
  return std::visit(
      [&](const auto& variant) -> IndependenceSystem::Oracle {
        using T = std::decay_t<decltype(variant)>;
        if constexpr (std::is_same_v<T, Cardinality>) {
          declared_k = 1;
          return oracle_for(variant);
        } else if constexpr (std::is_same_v<T, PartitionMatroid>) {
          declared_k = 1;
          return oracle_for(variant);
        } else if constexpr (std::is_same_v<T, MatroidIntersection>) {
          declared_k = static_cast<int>(variant.matroids.size());
          return oracle_for(variant, num_items);
        } else if constexpr (std::is_same_v<T, ExplicitSystem>) {
          declared_k = 0;  // filled in by enumeration below
          return oracle_for(variant);
        } else {
          throw std::invalid_argument(
              "knapsack spec is not an independence system");
        }
      },
      spec.value);
}

}  // namespace

IndependenceSystem IndependenceSystem::from_spec(const ConstraintSpec& spec,
                                                 int num_items) {
  IndependenceSystem sys;
  sys.num_items_ = num_items;
  sys.oracle_ = make_oracle(spec, num_items, sys.declared_k_);
  if (sys.declared_k_ == 0) {
    // Explicit systems carry no declared bound; measure it.
    sys.declared_k_ = 1;
    sys.declared_k_ = verify_k(sys);
  }
  return sys;
}

IndependenceSystem IndependenceSystem::custom(Oracle oracle, int num_items,
                                              int declared_k) {
  IndependenceSystem sys;
  sys.oracle_ = std::move(oracle);
  sys.num_items_ = num_items;
  sys.declared_k_ = declared_k;
  return sys;
}

bool can_add(const IndependenceSystem& sys, ItemSet base, ItemId e) {
  if (!sys.is_independent(base)) {
    throw NotIndependentBase("can_add called with a dependent base set");
  }
  return sys.is_independent(with_item(base, e));
}

int verify_k(const IndependenceSystem& sys) {
  const int n = sys.num_items();
  if (n > 16) throw TooLargeToVerify("verify_k capped at n <= 16");
  const ItemSet all = full_set(n);
  int k = 1;
  for (ItemSet restriction = 1; restriction <= all; ++restriction) {
    int min_base = n + 1;
    int max_base = -1;
    // Walk every subset of the restriction; maximality via single-item
    // extensions is exact for downward-closed systems.
    ItemSet sub = restriction;
    while (true) {
      if (sys.is_independent(sub)) {
        bool maximal = true;
        for (ItemId e = 0; e < n && maximal; ++e) {
          if (contains(restriction, e) && !contains(sub, e) &&
              sys.is_independent(with_item(sub, e))) {
            maximal = false;
          }
        }
        if (maximal) {
          min_base = std::min(min_base, set_size(sub));
          max_base = std::max(max_base, set_size(sub));
        }
      }
      if (sub == 0) break;
      sub = (sub - 1) & restriction;
    }
    if (max_base <= 0) continue;  // only the empty base, ratio is 1
    if (min_base == 0) {
      throw DegenerateSystem(
          "restriction with an empty base next to a nonempty one");
    }
    k = std::max(k, (max_base + min_base - 1) / min_base);
  }
  return k;
}

bool is_valid_independence_system(const IndependenceSystem& sys) {
  const int n = sys.num_items();
  if (n > 16) throw TooLargeToVerify("closure check capped at n <= 16");
  if (!sys.is_independent(0)) return false;
  const ItemSet all = full_set(n);
  for (ItemSet items = 1; items <= all; ++items) {
    if (!sys.is_independent(items)) continue;
    for (ItemId e = 0; e < n; ++e) {
      if (contains(items, e) &&
          !sys.is_independent(items & ~(1u << e))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace adasub
