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

#ifndef ADASUB_INSTANCE_HPP
#define ADASUB_INSTANCE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adasub/constraints.hpp"
#include "adasub/model.hpp"
#include "adasub/utility.hpp"

namespace adasub {

// A fully specified problem: items, prior, utility, and the active
// constraints.  Matches the on-disk instance document one to one.
struct Instance {
  int num_items = 0;
  int num_states = 0;
  std::vector<double> costs;            // empty when no knapsack data
  std::optional<double> budget;
  std::optional<ConstraintSpec> constraint;
  Prior prior;
  std::shared_ptr<const UtilityFunction> utility;
  std::vector<std::string> certified;   // checks this instance passed

  // Knapsack view, from either the costs/budget fields or a knapsack
  // constraint tag.  Empty when neither is present.
  std::optional<Knapsack> knapsack() const;

  // Independence-system view of a non-knapsack constraint tag.
  std::optional<IndependenceSystem> independence_system() const;
};

// UTF-8 JSON document with fields n, states, costs, budget, constraint,
// prior, utility, certified.  Serialization is canonical: same instance,
// same bytes.  Loading throws ParseError with field context.
std::string serialize_instance(const Instance& instance);
Instance parse_instance(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

}  // namespace adasub

#endif  // ADASUB_INSTANCE_HPP
