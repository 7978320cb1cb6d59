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

#ifndef ADASUB_GENERATOR_HPP
#define ADASUB_GENERATOR_HPP

#include <cstdint>

#include "adasub/instance.hpp"

namespace adasub {

// Tri-state requirement on a generated property.
enum class Require { kYes, kNo, kAny };

struct GeneratorProfile {
  bool nonmonotone = true;
  Require pointwise = Require::kAny;
};

struct GeneratedInstance {
  Instance instance;
  long attempts = 0;
};

// Small deterministic generator (splitmix64) so results are identical
// across platforms and standard-library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, bound).
  std::uint64_t next_below(std::uint64_t bound);
  double next_unit();  // uniform in [0, 1)

 private:
  std::uint64_t state_;
};

// Rejection-samples table utilities (values uniform in [0,1] rounded to the
// 1/16 grid, f(∅,·) = 0) and small priors until the instance is certified
// adaptive submodular, nonnegative, and matches the profile.  Deterministic
// given the seed.  Caps: n <= 5, s <= 3.  Throws GenerationExhausted when
// the attempt budget runs out.
GeneratedInstance generate_instance(std::uint64_t seed, int num_items,
                                    int num_states,
                                    const GeneratorProfile& profile,
                                    long max_attempts = 1000000);

}  // namespace adasub

#endif  // ADASUB_GENERATOR_HPP
