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

#include <doctest.h>

#include <cmath>

#include "adasub/evaluate.hpp"
#include "adasub/generator.hpp"
#include "fixtures.hpp"

using namespace adasub;
using namespace adasub::testing;

namespace {

// Independent oracle: best feasible subset under a deterministic prior.
double best_feasible_subset(const UtilityFunction& f, const Realization& phi,
                            int n, const Knapsack* kp,
                            const IndependenceSystem* sys) {
  double best = 0.0;
  for (ItemSet s = 0; s <= full_set(n); ++s) {
    const bool ok = (!kp || kp->feasible(s)) && (!sys || sys->is_independent(s));
    if (ok) best = std::max(best, f.eval(s, phi));
    if (s == full_set(n)) break;
  }
  return best;
}

}  // namespace

TEST_CASE("eval_exact basics") {
  const Prior prior = uniform_prior(2, 2);
  const auto f = cardinality_utility(2, 2);
  SUBCASE("empty policy") {
    CHECK(eval_exact(EmptyPolicy{}, *f, prior).value == doctest::Approx(0.0));
  }
  SUBCASE("deterministic single-item policy equals the singleton value") {
    const FixedSetPolicy policy({1});
    CHECK(eval_exact(policy, *f, prior).value ==
          doctest::Approx(singleton_value(*f, 1, prior)));
  }
}

TEST_CASE("pi-sad value decomposes into its candidates") {
  const GeneratedInstance g =
      generate_instance(41, 2, 2, GeneratorProfile{true, Require::kAny});
  const UtilityFunction& f = *g.instance.utility;
  const Prior& prior = g.instance.prior;
  const auto kp = g.instance.knapsack();

  const PiSadPolicy sad(f, prior, *kp, default_knapsack_params());
  const BestSingletonPolicy pi1(f, prior, *kp);
  const SampledDensityGreedyPolicy pi2(f, prior, *kp, 0.5);  // greedy on S1
  // π3 greedy on S2 has the same law as π2 at δ0 = 1/2.
  const double mixture = 0.2 * eval_exact(pi1, f, prior).value +
                         0.8 * eval_exact(pi2, f, prior).value;
  CHECK(eval_exact(sad, f, prior).value ==
        doctest::Approx(mixture).epsilon(1e-9));
}

TEST_CASE("eval_mc") {
  const GeneratedInstance g =
      generate_instance(42, 3, 2, GeneratorProfile{true, Require::kAny});
  const UtilityFunction& f = *g.instance.utility;
  const Prior& prior = g.instance.prior;
  const auto kp = g.instance.knapsack();
  const PiSadPolicy policy(f, prior, *kp, default_knapsack_params());

  SUBCASE("deterministic policy and prior have zero std-error") {
    const Realization phi{{1, 0, 1}};
    const Prior det = deterministic_prior(phi, 2);
    const FixedSetPolicy fixed({0, 2});
    const EvalResult mc = eval_mc(fixed, f, det, 1000, 7);
    CHECK(mc.std_error == doctest::Approx(0.0));
    CHECK(mc.value == doctest::Approx(f.eval(0b101, phi)));
  }
  SUBCASE("same seed gives identical estimates") {
    const EvalResult a = eval_mc(policy, f, prior, 2000, 9);
    const EvalResult b = eval_mc(policy, f, prior, 2000, 9);
    CHECK(a.value == b.value);
  }
  SUBCASE("estimate approaches the exact value") {
    const double exact = eval_exact(policy, f, prior).value;
    const EvalResult mc = eval_mc(policy, f, prior, 100000, 3);
    CHECK(std::abs(mc.value - exact) <= 4.0 * mc.std_error + 1e-12);
  }
}

TEST_CASE("optimal value oracle") {
  SUBCASE("monotone modular under no binding constraint sums positives") {
    const ModularUtility f({{0.5, 0.5}, {0.25, 0.25}, {0.0, 0.0}});
    const Prior prior = uniform_prior(3, 2);
    const auto sys =
        IndependenceSystem::from_spec(ConstraintSpec{Cardinality{3}}, 3);
    const OptResult opt = optimal_value(f, prior, nullptr, &sys);
    CHECK(opt.value == doctest::Approx(0.75));
  }
  SUBCASE("deterministic prior reduces to subset search") {
    for (std::uint64_t seed : {51, 52, 53}) {
      const GeneratedInstance g =
          generate_instance(seed, 3, 2, GeneratorProfile{true, Require::kAny});
      const auto kp = g.instance.knapsack();
      // collapse the prior onto each supported realization in turn
      for (const Realization& phi : g.instance.prior.support()) {
        const Prior det = deterministic_prior(phi, 2);
        const OptResult opt =
            optimal_value(*g.instance.utility, det, &*kp, nullptr);
        CHECK(opt.value ==
              doctest::Approx(best_feasible_subset(*g.instance.utility, phi, 3,
                                                   &*kp, nullptr))
                  .epsilon(1e-12));
      }
    }
  }
  SUBCASE("empty instance value is the empty-set expectation") {
    const auto f = set_function_table(2, 2, {0.5, 0.0, 0.0, 0.0});
    const Prior prior = uniform_prior(2, 2);
    const Knapsack kp{{1, 1}, 1.0};
    const OptResult opt = optimal_value(*f, prior, &kp, nullptr);
    CHECK(opt.value == doctest::Approx(0.5));
  }
  SUBCASE("caps") {
    const Prior prior = uniform_prior(6, 2);
    const ModularUtility f(std::vector<std::vector<double>>(6, {0.0, 1.0}));
    const Knapsack kp{std::vector<double>(6, 1.0), 3.0};
    CHECK_THROWS_AS((void)optimal_value(f, prior, &kp, nullptr),
                    TooLargeToEnumerate);
  }
}

TEST_CASE("optimal tree replays to its own value and dominates policies") {
  const GeneratedInstance g =
      generate_instance(61, 3, 2, GeneratorProfile{true, Require::kAny});
  const UtilityFunction& f = *g.instance.utility;
  const Prior& prior = g.instance.prior;
  const auto kp = g.instance.knapsack();
  const OptResult opt = optimal_value(f, prior, &*kp, nullptr);
  const DecisionTreePolicy tree = opt.as_policy(2);
  CHECK(eval_exact(tree, f, prior).value ==
        doctest::Approx(opt.value).epsilon(1e-9));
  // dominance over every policy we can evaluate
  const PiSadPolicy sad(f, prior, *kp, default_knapsack_params());
  const SimplifiedPiSadPolicy simplified(f, prior, *kp);
  const BestSingletonPolicy singleton(f, prior, *kp);
  const DensityGreedyPolicy greedy(f, prior, *kp, 0b111);
  for (const Policy* policy :
       {static_cast<const Policy*>(&sad), static_cast<const Policy*>(&simplified),
        static_cast<const Policy*>(&singleton),
        static_cast<const Policy*>(&greedy)}) {
    CHECK(opt.value >= eval_exact(*policy, f, prior).value - kEps);
  }
}

TEST_CASE("lemma: disjoint continuations preserve value") {
  const GeneratedInstance g =
      generate_instance(71, 3, 2, GeneratorProfile{true, Require::kAny});
  const UtilityFunction& f = *g.instance.utility;
  const Prior& prior = g.instance.prior;

  SUBCASE("empty continuations reduce to nonnegativity") {
    const FixedSetPolicy a({0, 1});
    const EmptyPolicy none;
    const Lemma1Report report = verify_lemma1(a, none, none, f, prior);
    CHECK(report.holds);
    CHECK(report.with_b == doctest::Approx(report.base));
  }
  SUBCASE("fixed disjoint halves") {
    const FixedSetPolicy a({1});
    const FixedSetPolicy b({0});
    const FixedSetPolicy c({2});
    const Lemma1Report report = verify_lemma1(a, b, c, f, prior);
    CHECK(report.holds);
    CHECK(report.with_b + report.with_c >= report.base - kEps);
  }
  SUBCASE("overlapping ranges are rejected") {
    const FixedSetPolicy a({1});
    const FixedSetPolicy b({0, 2});
    const FixedSetPolicy c({2});
    CHECK_THROWS_AS((void)verify_lemma1(a, b, c, f, prior), RangesOverlap);
  }
}

TEST_CASE("lemma: sampled density greedy against the optimum") {
  for (std::uint64_t seed : {81, 82}) {
    const GeneratedInstance g =
        generate_instance(seed, 3, 2, GeneratorProfile{true, Require::kAny});
    const auto kp = g.instance.knapsack();
    for (double sigma : {0.5, 1.0}) {
      const Lemma2Report report =
          verify_lemma2(sigma, *g.instance.utility, g.instance.prior, *kp);
      CHECK(report.holds);
    }
  }
}

TEST_CASE("lemma: sampled greedy against the optimum under a k-system") {
  const GeneratedInstance g =
      generate_instance(83, 3, 2, GeneratorProfile{true, Require::kAny});
  SUBCASE("matroid, k = 1") {
    PartitionMatroid pm;
    pm.blocks = {0b011, 0b100};
    pm.limits = {1, 1};
    const auto sys = IndependenceSystem::from_spec(ConstraintSpec{pm}, 3);
    const Lemma3Report report =
        verify_lemma3(0.5, *g.instance.utility, g.instance.prior, sys);
    CHECK(report.k == 1);
    CHECK(report.holds);
  }
  SUBCASE("2-system intersection") {
    PartitionMatroid left{{0b011, 0b100}, {1, 1}};
    PartitionMatroid right{{0b001, 0b110}, {1, 1}};
    MatroidIntersection mi;
    mi.matroids = {ConstraintSpec{left}, ConstraintSpec{right}};
    const auto sys =
        IndependenceSystem::from_spec(ConstraintSpec{std::move(mi)}, 3);
    const Lemma3Report report =
        verify_lemma3(0.5, *g.instance.utility, g.instance.prior, sys);
    CHECK(report.k == 2);
    CHECK(report.holds);
  }
}

TEST_CASE("ratio report") {
  SUBCASE("knapsack instance meets the 1/10 bound") {
    const GeneratedInstance g =
        generate_instance(91, 3, 2, GeneratorProfile{true, Require::kAny});
    const RatioReport report = ratio_report(g.instance, RatioPolicy::kSad);
    CHECK(report.bound == doctest::Approx(0.1));
    CHECK(report.pass);
    CHECK(report.value >= 0.1 * report.opt - kEps);
  }
  SUBCASE("matroid instance meets the 1/6 bound") {
    GeneratedInstance g =
        generate_instance(92, 3, 2, GeneratorProfile{true, Require::kAny});
    PartitionMatroid pm;
    pm.blocks = {0b011, 0b100};
    pm.limits = {1, 1};
    g.instance.constraint = ConstraintSpec{pm};
    const RatioReport report = ratio_report(g.instance, RatioPolicy::kSag);
    CHECK(report.bound == doctest::Approx(1.0 / 6.0));
    CHECK(report.pass);
  }
  SUBCASE("zero optimum reports ratio one") {
    Instance instance;
    instance.num_items = 2;
    instance.num_states = 2;
    instance.prior = uniform_prior(2, 2);
    instance.utility = set_function_table(2, 2, {0, 0, 0, 0});
    instance.costs = {1.0, 1.0};
    instance.budget = 1.0;
    const RatioReport report = ratio_report(instance, RatioPolicy::kSad);
    CHECK(report.opt == doctest::Approx(0.0));
    CHECK(report.ratio == doctest::Approx(1.0));
    CHECK(report.pass);
  }
}
