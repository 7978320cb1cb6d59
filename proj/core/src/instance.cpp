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

#include "adasub/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace adasub {

using json = nlohmann::ordered_json;

std::optional<Knapsack> Instance::knapsack() const {
  if (constraint && constraint->is_knapsack()) {
    const auto& kp = std::get<KnapsackSpec>(constraint->value);
    return Knapsack{kp.costs, kp.budget};
  }
  if (budget && !costs.empty()) {
    return Knapsack{costs, *budget};
  }
  return std::nullopt;
}

std::optional<IndependenceSystem> Instance::independence_system() const {
  if (constraint && !constraint->is_knapsack()) {
    return IndependenceSystem::from_spec(*constraint, num_items);
  }
  return std::nullopt;
}

namespace {

std::vector<int> mask_to_items(ItemSet mask) {
  std::vector<int> items;
  for (int e = 0; e < 32; ++e) {
    if (contains(mask, e)) items.push_back(e);
  }
  return items;
}

ItemSet items_to_mask(const json& items, const char* field) {
  ItemSet mask = 0;
  for (const auto& item : items) {
    const int e = item.get<int>();
    if (e < 0 || e >= 32) throw ParseError(std::string(field) + ": bad item id");
    mask = with_item(mask, e);
  }
  return mask;
}

json constraint_to_json(const ConstraintSpec& spec);

json constraint_to_json(const ConstraintSpec& spec) {
  return std::visit(
      [](const auto& variant) -> json {
        using T = std::decay_t<decltype(variant)>;
        if constexpr (std::is_same_v<T, Cardinality>) {
          return json{{"cardinality", variant.limit}};
        } else if constexpr (std::is_same_v<T, PartitionMatroid>) {
          json blocks = json::array();
          for (ItemSet b : variant.blocks) blocks.push_back(mask_to_items(b));
          return json{{"partition",
                       {{"blocks", blocks}, {"limits", variant.limits}}}};
        } else if constexpr (std::is_same_v<T, MatroidIntersection>) {
          json matroids = json::array();
          for (const auto& m : variant.matroids) {
            matroids.push_back(constraint_to_json(m));
          }
          return json{{"intersection", matroids}};
        } else if constexpr (std::is_same_v<T, ExplicitSystem>) {
          json sets = json::array();
          for (ItemSet s : variant.sets) sets.push_back(mask_to_items(s));
          return json{{"explicit", sets}};
        } else {
          return json{{"knapsack",
                       {{"costs", variant.costs}, {"budget", variant.budget}}}};
        }
      },
      spec.value);
}

ConstraintSpec constraint_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw ParseError("constraint: expected a single-key tagged object");
  }
  const auto it = j.begin();
  const std::string& tag = it.key();
  const json& body = it.value();
  if (tag == "cardinality") {
    return ConstraintSpec{Cardinality{body.get<int>()}};
  }
  if (tag == "partition") {
    PartitionMatroid pm;
    for (const auto& block : body.at("blocks")) {
      pm.blocks.push_back(items_to_mask(block, "partition.blocks"));
    }
    pm.limits = body.at("limits").get<std::vector<int>>();
    if (pm.blocks.size() != pm.limits.size()) {
      throw ParseError("partition: blocks and limits differ in length");
    }
    return ConstraintSpec{std::move(pm)};
  }
  if (tag == "intersection") {
    MatroidIntersection mi;
    for (const auto& m : body) mi.matroids.push_back(constraint_from_json(m));
    return ConstraintSpec{std::move(mi)};
  }
  if (tag == "explicit") {
    ExplicitSystem ex;
    for (const auto& s : body) {
      ex.sets.push_back(items_to_mask(s, "explicit"));
    }
    return ConstraintSpec{std::move(ex)};
  }
  if (tag == "knapsack") {
    KnapsackSpec kp;
    kp.costs = body.at("costs").get<std::vector<double>>();
    kp.budget = body.at("budget").get<double>();
    return ConstraintSpec{std::move(kp)};
  }
  throw ParseError("constraint: unknown tag '" + tag + "'");
}

json utility_to_json(const UtilityFunction& f) {
  if (const auto* table = dynamic_cast<const TableUtility*>(&f)) {
    return json{{"table", table->values()}};
  }
  if (const auto* cov = dynamic_cast<const CoverageUtility*>(&f)) {
    return json{{"coverage",
                 {{"universe", cov->universe_size()},
                  {"weights", cov->weights()},
                  {"covered", cov->covered()}}}};
  }
  if (const auto* mod = dynamic_cast<const ModularUtility*>(&f)) {
    return json{{"modular", mod->weights()}};
  }
  throw ParseError("utility family is not serializable");
}

std::shared_ptr<const UtilityFunction> utility_from_json(const json& j, int n,
                                                         int s) {
  if (!j.is_object() || j.size() != 1) {
    throw ParseError("utility: expected a single-key tagged object");
  }
  const auto it = j.begin();
  const std::string& tag = it.key();
  const json& body = it.value();
  if (tag == "table") {
    return std::make_shared<TableUtility>(
        n, s, body.get<std::vector<std::vector<double>>>());
  }
  if (tag == "coverage") {
    return std::make_shared<CoverageUtility>(
        body.at("universe").get<int>(),
        body.at("weights").get<std::vector<double>>(),
        body.at("covered")
            .get<std::vector<std::vector<std::vector<int>>>>());
  }
  if (tag == "modular") {
    return std::make_shared<ModularUtility>(
        body.get<std::vector<std::vector<double>>>());
  }
  throw ParseError("utility: unknown family '" + tag + "'");
}

}  // namespace

std::string serialize_instance(const Instance& instance) {
  json doc;
  doc["n"] = instance.num_items;
  doc["states"] = instance.num_states;
  if (!instance.costs.empty()) doc["costs"] = instance.costs;
  if (instance.budget) doc["budget"] = *instance.budget;
  if (instance.constraint) {
    doc["constraint"] = constraint_to_json(*instance.constraint);
  }
  if (instance.prior.independent_form()) {
    doc["prior"] = json{{"independent", *instance.prior.independent_form()}};
  } else {
    json support = json::array();
    for (std::size_t i = 0; i < instance.prior.support().size(); ++i) {
      support.push_back(json{{"states", instance.prior.support()[i].states},
                             {"p", instance.prior.probabilities()[i]}});
    }
    doc["prior"] = json{{"support", support}};
  }
  doc["utility"] = utility_to_json(*instance.utility);
  if (!instance.certified.empty()) doc["certified"] = instance.certified;
  return doc.dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  try {
    Instance instance;
    instance.num_items = doc.at("n").get<int>();
    instance.num_states = doc.at("states").get<int>();
    if (instance.num_items < 0 || instance.num_items > 16 ||
        instance.num_states < 1) {
      throw ParseError("n/states out of range");
    }
    if (doc.contains("costs")) {
      instance.costs = doc["costs"].get<std::vector<double>>();
      if (static_cast<int>(instance.costs.size()) != instance.num_items) {
        throw ParseError("costs: expected one entry per item");
      }
      for (double c : instance.costs) {
        if (c <= 0.0) throw ParseError("costs: must be positive");
      }
    }
    if (doc.contains("budget")) {
      instance.budget = doc["budget"].get<double>();
      if (*instance.budget <= 0.0) throw ParseError("budget: must be positive");
    }
    if (doc.contains("constraint")) {
      instance.constraint = constraint_from_json(doc["constraint"]);
    }
    const json& prior = doc.at("prior");
    if (prior.contains("support")) {
      std::vector<Realization> support;
      std::vector<double> probabilities;
      for (const auto& entry : prior["support"]) {
        support.push_back(
            Realization{entry.at("states").get<std::vector<int>>()});
        probabilities.push_back(entry.at("p").get<double>());
      }
      instance.prior =
          Prior::from_support(instance.num_items, instance.num_states,
                              std::move(support), std::move(probabilities));
    } else if (prior.contains("independent")) {
      const auto marginals =
          prior["independent"].get<std::vector<std::vector<double>>>();
      if (static_cast<int>(marginals.size()) != instance.num_items) {
        throw ParseError("prior.independent: expected one row per item");
      }
      instance.prior = Prior::from_independent(marginals);
    } else {
      throw ParseError("prior: expected 'support' or 'independent'");
    }
    instance.utility = utility_from_json(doc.at("utility"), instance.num_items,
                                         instance.num_states);
    if (doc.contains("certified")) {
      instance.certified = doc["certified"].get<std::vector<std::string>>();
    }
    return instance;
  } catch (const json::exception& err) {
    throw ParseError(std::string("instance document: ") + err.what());
  } catch (const std::invalid_argument& err) {
    throw ParseError(std::string("instance document: ") + err.what());
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write instance file: " + path);
  out << serialize_instance(instance);
}

}  // namespace adasub
