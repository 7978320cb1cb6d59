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
//
// Command-line front end: verify instance certifications, evaluate
// policies exactly or by Monte Carlo, report approximation ratios against
// the brute-force optimum, and generate certified instances.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "adasub/checkers.hpp"
#include "adasub/evaluate.hpp"
#include "adasub/generator.hpp"
#include "adasub/instance.hpp"

namespace {

using namespace adasub;

// Exit codes are a stable contract: 0 success/pass, 1 check failure,
// 2 usage or parse error, 3 capacity error.
constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

int cmd_verify(const std::string& path) {
  const Instance instance = load_instance(path);
  const UtilityFunction& f = *instance.utility;
  const Prior& prior = instance.prior;

  bool ok = true;
  const auto nonneg = check_nonnegative(f, prior);
  std::cout << "nonnegative: " << (nonneg ? "FAIL" : "pass") << "\n";
  if (nonneg) {
    std::cout << "  witness: " << nonneg->describe() << "\n";
    ok = false;
  }
  const auto adaptive = check_adaptive_submodular(f, prior);
  std::cout << "adaptive_submodular: " << (adaptive ? "FAIL" : "pass") << "\n";
  if (adaptive) {
    std::cout << "  witness: " << adaptive->describe() << "\n";
    ok = false;
  }
  const auto pointwise = check_pointwise_submodular(f, prior);
  std::cout << "pointwise_submodular: " << (pointwise ? "no" : "yes") << "\n";
  if (pointwise) std::cout << "  witness: " << pointwise->describe() << "\n";
  const auto witness = check_nonmonotone(f, prior);
  std::cout << "monotone: " << (witness ? "no" : "yes") << "\n";
  if (witness) {
    std::cout << "  witness: item " << witness->item << " has marginal "
              << fmt(witness->marginal_value) << "\n";
  }

  // Claims recorded in the file must match what we observed.
  for (const std::string& claim : instance.certified) {
    bool claim_ok = true;
    if (claim == "nonnegative") claim_ok = !nonneg;
    else if (claim == "adaptive_submodular") claim_ok = !adaptive;
    else if (claim == "pointwise_submodular") claim_ok = !pointwise;
    else if (claim == "not_pointwise_submodular") claim_ok = pointwise.has_value();
    else if (claim == "nonmonotone") claim_ok = witness.has_value();
    else if (claim == "monotone") claim_ok = !witness;
    if (!claim_ok) {
      std::cout << "certified claim '" << claim << "' does not hold\n";
      ok = false;
    }
  }
  return ok ? kExitPass : kExitCheckFailure;
}

std::unique_ptr<Policy> make_policy(const std::string& kind,
                                    const Instance& instance,
                                    const SamplingParams& params,
                                    std::optional<Knapsack>& kp_storage,
                                    std::optional<IndependenceSystem>& sys_storage) {
  const UtilityFunction& f = *instance.utility;
  const Prior& prior = instance.prior;
  kp_storage = instance.knapsack();
  sys_storage = instance.independence_system();
  const ItemSet everything = full_set(instance.num_items);

  if (kind == "sad") {
    if (!kp_storage) throw std::invalid_argument("policy 'sad' needs a knapsack");
    return std::make_unique<PiSadPolicy>(f, prior, *kp_storage, params);
  }
  if (kind == "sad-simplified") {
    if (!kp_storage) {
      throw std::invalid_argument("policy 'sad-simplified' needs a knapsack");
    }
    return std::make_unique<SimplifiedPiSadPolicy>(f, prior, *kp_storage);
  }
  if (kind == "sag") {
    if (!sys_storage) {
      throw std::invalid_argument("policy 'sag' needs a k-system constraint");
    }
    return std::make_unique<PiSagPolicy>(f, prior, *sys_storage, params);
  }
  if (kind == "greedy") {
    if (!sys_storage) {
      throw std::invalid_argument("policy 'greedy' needs a k-system constraint");
    }
    return std::make_unique<GreedyPolicy>(f, prior, *sys_storage, everything);
  }
  if (kind == "density-greedy") {
    if (!kp_storage) {
      throw std::invalid_argument("policy 'density-greedy' needs a knapsack");
    }
    return std::make_unique<DensityGreedyPolicy>(f, prior, *kp_storage,
                                                 everything);
  }
  if (kind == "singleton") {
    if (!kp_storage) {
      throw std::invalid_argument("policy 'singleton' needs a knapsack");
    }
    return std::make_unique<BestSingletonPolicy>(f, prior, *kp_storage);
  }
  if (kind == "random") {
    return std::make_unique<RandomFeasiblePolicy>(
        kp_storage ? &*kp_storage : nullptr,
        sys_storage ? &*sys_storage : nullptr, instance.num_items);
  }
  throw std::invalid_argument("unknown policy '" + kind + "'");
}

int cmd_run(const std::string& path, const std::string& policy_kind,
            const SamplingParams& params, const std::string& mode, long trials,
            std::uint64_t seed) {
  const Instance instance = load_instance(path);
  std::optional<Knapsack> kp;
  std::optional<IndependenceSystem> sys;
  const auto policy = make_policy(policy_kind, instance, params, kp, sys);

  if (mode == "exact" || mode == "auto") {
    try {
      const EvalResult result =
          eval_exact(*policy, *instance.utility, instance.prior);
      std::cout << "policy " << policy_kind << " value " << fmt(result.value)
                << " mode exact branches " << result.branches << "\n";
      return kExitPass;
    } catch (const TooLargeToEnumerate&) {
      if (mode == "exact") throw;
      std::cerr << "warning: exact mode too large, falling back to mc\n";
    }
  }
  const EvalResult result =
      eval_mc(*policy, *instance.utility, instance.prior, trials, seed);
  std::cout << "policy " << policy_kind << " value " << fmt(result.value)
            << " mode mc trials " << result.trials << " std-error "
            << fmt(result.std_error) << "\n";
  return kExitPass;
}

int cmd_ratio(const std::string& path, const std::string& policy_kind) {
  const Instance instance = load_instance(path);
  RatioPolicy kind;
  if (policy_kind == "sad") kind = RatioPolicy::kSad;
  else if (policy_kind == "sad-simplified") kind = RatioPolicy::kSadSimplified;
  else if (policy_kind == "sag") kind = RatioPolicy::kSag;
  else throw std::invalid_argument("ratio supports sad, sad-simplified, sag");

  const RatioReport report = ratio_report(instance, kind);
  const std::string id = std::filesystem::path(path).stem().string();
  std::printf("%-20s %-14s %12s %12s %8s %8s %s\n", "instance", "policy",
              "value", "opt", "ratio", "bound", "pass");
  std::printf("%-20s %-14s %12s %12s %8s %8s %s\n", id.c_str(),
              report.policy.c_str(), fmt(report.value).c_str(),
              fmt(report.opt).c_str(), fmt(report.ratio).c_str(),
              fmt(report.bound).c_str(), report.pass ? "yes" : "no");
  return report.pass ? kExitPass : kExitCheckFailure;
}

int cmd_optimal(const std::string& path) {
  const Instance instance = load_instance(path);
  const auto kp = instance.knapsack();
  const auto sys = instance.independence_system();
  if (!kp && !sys) {
    throw std::invalid_argument("instance has no constraint for the oracle");
  }
  const OptResult result =
      optimal_value(*instance.utility, instance.prior, kp ? &*kp : nullptr,
                    sys ? &*sys : nullptr);
  std::cout << "opt " << fmt(result.value) << " tree-nodes "
            << result.actions.size() << "\n";
  return kExitPass;
}

int cmd_generate(std::uint64_t seed, int n, int s, bool nonmonotone,
                 const std::string& pointwise, const std::string& out,
                 long attempts) {
  GeneratorProfile profile;
  profile.nonmonotone = nonmonotone;
  if (pointwise == "require") profile.pointwise = Require::kYes;
  else if (pointwise == "forbid") profile.pointwise = Require::kNo;
  else if (pointwise == "any") profile.pointwise = Require::kAny;
  else throw std::invalid_argument("pointwise must be require, forbid, or any");

  const GeneratedInstance generated =
      generate_instance(seed, n, s, profile, attempts);
  if (!out.empty()) save_instance(generated.instance, out);
  else std::cout << serialize_instance(generated.instance);
  std::cerr << "certified after " << generated.attempts << " attempts:";
  for (const std::string& check : generated.instance.certified) {
    std::cerr << " " << check;
  }
  std::cerr << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive submodular maximization policies and verifiers"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string policy_kind = "sad";
  std::string mode = "auto";
  std::string pointwise = "any";
  std::string out_path;
  double delta0 = -1.0, delta1 = -1.0, delta2 = -1.0;  // -1 = use default
  long trials = 100000;
  std::uint64_t seed = 1;
  long attempts = 1000000;
  int n = 3;
  int s = 2;
  bool nonmonotone = true;

  auto* verify = app.add_subcommand("verify", "Run certification checks");
  verify->add_option("--instance", instance_path)->required();

  auto* run = app.add_subcommand("run", "Evaluate a policy");
  run->add_option("--instance", instance_path)->required();
  run->add_option("--policy", policy_kind);
  run->add_option("--delta0", delta0);
  run->add_option("--delta1", delta1);
  run->add_option("--delta2", delta2);
  run->add_option("--mode", mode)->check(CLI::IsMember({"auto", "exact", "mc"}));
  run->add_option("--trials", trials)->check(CLI::PositiveNumber);
  run->add_option("--seed", seed);

  auto* ratio = app.add_subcommand("ratio", "Ratio report against the optimum");
  ratio->add_option("--instance", instance_path)->required();
  ratio->add_option("--policy", policy_kind);

  auto* optimal = app.add_subcommand("optimal", "Brute-force optimal value");
  optimal->add_option("--instance", instance_path)->required();

  auto* generate = app.add_subcommand("generate", "Generate a certified instance");
  generate->add_option("--seed", seed);
  generate->add_option("--n", n)->check(CLI::Range(1, 5));
  generate->add_option("--states", s)->check(CLI::Range(2, 3));
  generate->add_option("--nonmonotone", nonmonotone);
  generate->add_option("--pointwise", pointwise)
      ->check(CLI::IsMember({"require", "forbid", "any"}));
  generate->add_option("--out", out_path);
  generate->add_option("--attempts", attempts)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(instance_path);
    if (run->parsed()) {
      SamplingParams effective = policy_kind == "sag" ? default_ksystem_params()
                                                      : default_knapsack_params();
      if (delta0 >= 0.0) effective.delta0 = delta0;
      if (delta1 >= 0.0) effective.delta1 = delta1;
      if (delta2 >= 0.0) effective.delta2 = delta2;
      return cmd_run(instance_path, policy_kind, effective, mode, trials, seed);
    }
    if (ratio->parsed()) return cmd_ratio(instance_path, policy_kind);
    if (optimal->parsed()) return cmd_optimal(instance_path);
    if (generate->parsed()) {
      return cmd_generate(seed, n, s, nonmonotone, pointwise, out_path,
                          attempts);
    }
  } catch (const adasub::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const adasub::TooLargeToEnumerate& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const adasub::TooLargeToVerify& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const adasub::GenerationExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
