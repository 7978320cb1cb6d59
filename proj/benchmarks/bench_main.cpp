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

#include <benchmark/benchmark.h>

#include "adasub/checkers.hpp"
#include "adasub/evaluate.hpp"
#include "adasub/generator.hpp"

namespace {

using namespace adasub;

const GeneratedInstance& fixture() {
  static const GeneratedInstance generated =
      generate_instance(7, 3, 2, GeneratorProfile{true, Require::kAny});
  return generated;
}

void BM_GenerateCertifiedInstance(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const GeneratedInstance generated =
        generate_instance(seed++, 2, 2, GeneratorProfile{true, Require::kAny});
    benchmark::DoNotOptimize(generated.attempts);
  }
}
BENCHMARK(BM_GenerateCertifiedInstance);

void BM_EvalExactPiSad(benchmark::State& state) {
  const Instance& instance = fixture().instance;
  const auto kp = instance.knapsack();
  const PiSadPolicy policy(*instance.utility, instance.prior, *kp,
                           default_knapsack_params());
  for (auto _ : state) {
    const EvalResult result =
        eval_exact(policy, *instance.utility, instance.prior);
    benchmark::DoNotOptimize(result.value);
  }
}
BENCHMARK(BM_EvalExactPiSad);

void BM_OptimalValue(benchmark::State& state) {
  const Instance& instance = fixture().instance;
  const auto kp = instance.knapsack();
  for (auto _ : state) {
    const OptResult result =
        optimal_value(*instance.utility, instance.prior, &*kp, nullptr);
    benchmark::DoNotOptimize(result.value);
  }
}
BENCHMARK(BM_OptimalValue);

void BM_AdaptiveSubmodularityCheck(benchmark::State& state) {
  const Instance& instance = fixture().instance;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_adaptive_submodular(*instance.utility, instance.prior));
  }
}
BENCHMARK(BM_AdaptiveSubmodularityCheck);

}  // namespace

BENCHMARK_MAIN();
