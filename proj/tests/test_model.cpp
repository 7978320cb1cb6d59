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

#include "adasub/checkers.hpp"
#include "adasub/generator.hpp"
#include "adasub/model.hpp"
#include "fixtures.hpp"

using namespace adasub;
using namespace adasub::testing;

TEST_CASE("realization index is mixed-radix little-endian") {
  // item i contributes states[i] * s^i
  CHECK(realization_index(Realization{{1, 0, 1}}, 2) == 5);
  CHECK(realization_index(Realization{{0, 2}}, 3) == 6);
  CHECK(realization_from_index(5, 3, 2) == Realization{{1, 0, 1}});
  for (std::uint32_t r = 0; r < 27; ++r) {
    CHECK(realization_index(realization_from_index(r, 3, 3), 3) == r);
  }
}

TEST_CASE("consistency") {
  const Realization phi{{1, 0, 1}};
  CHECK(is_consistent(PartialRealization{}, phi));
  CHECK(is_consistent(PartialRealization{{{0, 1}}}, phi));
  CHECK_FALSE(is_consistent(PartialRealization{{{0, 1}, {2, 0}}}, phi));
}

TEST_CASE("subrealization") {
  const PartialRealization small{{{1, 0}}};
  CHECK(is_subrealization({}, small));
  CHECK(is_subrealization(small, PartialRealization{{{1, 0}, {3, 1}}}));
  CHECK_FALSE(is_subrealization(small, PartialRealization{{{1, 1}, {3, 1}}}));
  // order of assignments is irrelevant
  CHECK(is_subrealization(PartialRealization{{{3, 1}, {1, 0}}},
                          PartialRealization{{{1, 0}, {3, 1}}}));
}

TEST_CASE("conditioning filters and renormalizes") {
  const Prior prior = uniform_prior(2, 2);
  SUBCASE("on nothing") {
    const Prior same = prior.conditioned({});
    CHECK(same.support().size() == 4);
  }
  SUBCASE("on one item") {
    // 4 equiprobable realizations of 2 binary items; fixing item 0 keeps
    // the 2 consistent ones at probability 1/2 each.
    const Prior cond = prior.conditioned(PartialRealization{{{0, 1}}});
    REQUIRE(cond.support().size() == 2);
    for (double p : cond.probabilities()) CHECK(p == doctest::Approx(0.5));
    for (const Realization& phi : cond.support()) CHECK(phi(0) == 1);
  }
  SUBCASE("inconsistent observation") {
    const Prior det = deterministic_prior(Realization{{0, 0}}, 2);
    CHECK_THROWS_AS((void)det.conditioned(PartialRealization{{{0, 1}}}),
                    ZeroProbabilityObservation);
  }
}

TEST_CASE("conditioning is idempotent") {
  const Prior prior = uniform_prior(3, 2);
  const PartialRealization psi{{{1, 1}}};
  const Prior once = prior.conditioned(psi);
  const Prior twice = once.conditioned(psi);
  REQUIRE(once.support().size() == twice.support().size());
  for (std::size_t i = 0; i < once.support().size(); ++i) {
    CHECK(once.support()[i] == twice.support()[i]);
    CHECK(once.probabilities()[i] == twice.probabilities()[i]);
  }
}

TEST_CASE("law of total probability over one item's states") {
  const GeneratedInstance g =
      generate_instance(11, 3, 2, GeneratorProfile{true, Require::kAny});
  const Prior& prior = g.instance.prior;
  const PartialRealization psi{{{0, 1}}};
  const auto dist = prior.state_distribution(1, psi);
  double total = 0.0;
  for (double p : dist) total += p;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  // Splitting on item 1's state and recombining recovers the conditional.
  const Prior cond = prior.conditioned(psi);
  for (std::size_t i = 0; i < cond.support().size(); ++i) {
    const Realization& phi = cond.support()[i];
    const Prior branch = prior.conditioned(psi.extended(1, phi(1)));
    double p_in_branch = 0.0;
    for (std::size_t j = 0; j < branch.support().size(); ++j) {
      if (branch.support()[j] == phi) p_in_branch = branch.probabilities()[j];
    }
    CHECK(dist[phi(1)] * p_in_branch ==
          doctest::Approx(cond.probabilities()[i]).epsilon(1e-9));
  }
}

TEST_CASE("expected utility") {
  SUBCASE("empty set of a zero-at-empty table") {
    const Prior prior = uniform_prior(2, 2);
    const auto f = set_function_table(2, 2, {0.0, 1.0, 2.0, 3.0});
    CHECK(expected_utility(*f, 0, prior, {}) == 0.0);
  }
  SUBCASE("deterministic prior returns the table value") {
    const Realization phi{{1, 0}};
    const Prior prior = deterministic_prior(phi, 2);
    const auto f = cardinality_utility(2, 2);
    CHECK(expected_utility(*f, 0b11, prior, {}) == doctest::Approx(2.0));
  }
  SUBCASE("two equiprobable realizations average") {
    auto values = zero_table(1, 2);
    values[1][0] = 2.0;
    values[1][1] = 4.0;
    const TableUtility f(1, 2, std::move(values));
    const Prior prior = uniform_prior(1, 2);
    CHECK(expected_utility(f, 0b1, prior, {}) == doctest::Approx(3.0));
  }
}

TEST_CASE("marginal") {
  const Prior prior = uniform_prior(2, 2);
  const auto f = cardinality_utility(2, 2);
  SUBCASE("item already observed") {
    CHECK(marginal(*f, 0, PartialRealization{{{0, 1}}}, prior) == 0.0);
  }
  SUBCASE("cardinality utility gains exactly one") {
    CHECK(marginal(*f, 1, PartialRealization{{{0, 0}}}, prior) ==
          doctest::Approx(1.0));
  }
  SUBCASE("matches the expected-utility difference on a random instance") {
    // Independent oracle: Δ(e|ψ) = E[f(dom∪e)|ψ] - E[f(dom)|ψ].
    const GeneratedInstance g =
        generate_instance(5, 3, 2, GeneratorProfile{true, Require::kAny});
    const Prior& p = g.instance.prior;
    const UtilityFunction& u = *g.instance.utility;
    for (const auto& psi : enumerate_partial_realizations(p)) {
      for (ItemId e = 0; e < p.num_items(); ++e) {
        if (psi.has(e)) continue;
        const double direct = marginal(u, e, psi, p);
        const double via_difference =
            expected_utility(u, with_item(psi.domain(), e), p, psi) -
            expected_utility(u, psi.domain(), p, psi);
        CHECK(direct == doctest::Approx(via_difference).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("singleton value") {
  const Prior prior = uniform_prior(2, 2);
  SUBCASE("zero utility") {
    const auto f = set_function_table(2, 2, {0, 0, 0, 0});
    CHECK(singleton_value(*f, 0, prior) == 0.0);
  }
  SUBCASE("deterministic prior") {
    const Realization phi{{1, 1}};
    const auto f = cardinality_utility(2, 2);
    CHECK(singleton_value(*f, 1, deterministic_prior(phi, 2)) ==
          doctest::Approx(1.0));
  }
  SUBCASE("equals marginal at empty plus empty-set value") {
    const GeneratedInstance g =
        generate_instance(6, 2, 2, GeneratorProfile{true, Require::kAny});
    const Prior& p = g.instance.prior;
    const UtilityFunction& u = *g.instance.utility;
    for (ItemId e = 0; e < 2; ++e) {
      CHECK(singleton_value(u, e, p) ==
            doctest::Approx(marginal(u, e, {}, p) +
                            expected_utility(u, 0, p, {})));
    }
  }
}

TEST_CASE("independent prior expansion") {
  const Prior prior = Prior::from_independent({{0.25, 0.75}, {0.5, 0.5}});
  REQUIRE(prior.support().size() == 4);
  double total = 0.0;
  for (double p : prior.probabilities()) total += p;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  // zero-probability outcomes are dropped from the support
  const Prior sparse = Prior::from_independent({{0.0, 1.0}, {0.5, 0.5}});
  CHECK(sparse.support().size() == 2);
}

TEST_CASE("prior validation") {
  CHECK_THROWS(
      (void)Prior::from_support(1, 2, {Realization{{0}}}, {0.5}));  // sums to 0.5
  CHECK_THROWS((void)Prior::from_support(
      1, 2, {Realization{{0}}, Realization{{1}}}, {1.0, 0.0}));  // zero prob
  CHECK_THROWS((void)Prior::from_independent(
      std::vector<std::vector<double>>(30, {0.5, 0.5})));  // 2^30 joint
}
