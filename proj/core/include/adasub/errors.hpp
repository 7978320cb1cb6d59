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

#ifndef ADASUB_ERRORS_HPP
#define ADASUB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adasub {

// Comparison tolerance used for all equality and inequality checks.
inline constexpr double kEps = 1e-9;

// Conditioning on an observation that no supported realization matches.
struct ZeroProbabilityObservation : std::runtime_error {
  explicit ZeroProbabilityObservation(const std::string& what)
      : std::runtime_error(what) {}
};

// Enumerative checker asked to run above its instance-size caps.
struct TooLargeToVerify : std::runtime_error {
  explicit TooLargeToVerify(const std::string& what)
      : std::runtime_error(what) {}
};

// Exact evaluation or the optimal-policy oracle above its caps.
struct TooLargeToEnumerate : std::runtime_error {
  explicit TooLargeToEnumerate(const std::string& what)
      : std::runtime_error(what) {}
};

// Rejection sampler hit its attempt cap without a certified instance.
struct GenerationExhausted : std::runtime_error {
  explicit GenerationExhausted(const std::string& what)
      : std::runtime_error(what) {}
};

// Some restriction has an empty base next to a nonempty one; the base-size
// ratio is undefined.
struct DegenerateSystem : std::runtime_error {
  explicit DegenerateSystem(const std::string& what)
      : std::runtime_error(what) {}
};

// can_add called with a base set that is not itself independent.
struct NotIndependentBase : std::runtime_error {
  explicit NotIndependentBase(const std::string& what)
      : std::runtime_error(what) {}
};

// Lemma verification requires disjoint policy ranges.
struct RangesOverlap : std::runtime_error {
  explicit RangesOverlap(const std::string& what) : std::runtime_error(what) {}
};

// Malformed instance file.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace adasub

#endif  // ADASUB_ERRORS_HPP
