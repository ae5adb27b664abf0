// Copyright 2026 The switchdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWITCHDP_SRC_STOCHASTIC_HPP_
#define SWITCHDP_SRC_STOCHASTIC_HPP_

#include <cmath>
#include <span>
#include <string>

#include "switchdp/error.hpp"
#include "switchdp/rng.hpp"

namespace switchdp::internal {

inline void CheckDistribution(std::span<const double> p, std::size_t size,
                              const std::string& what, double tol = 1e-9) {
  if (p.size() != size) {
    throw Error(ErrorCode::kValidation, what + " has " +
                                            std::to_string(p.size()) +
                                            " entries, expected " +
                                            std::to_string(size));
  }
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::kValidation, what + " has a negative entry");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw Error(ErrorCode::kValidation,
                what + " sums to " + std::to_string(sum) + ", not 1");
  }
}

// Inverse-CDF draw from a finite distribution.
inline int SampleCategorical(Rng& rng, std::span<const double> p) {
  const double u = UniformOpen01(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    if (u < acc) return static_cast<int>(i);
  }
  // Rounding left a sliver above the last cumulative sum.
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] > 0.0) return static_cast<int>(i);
  }
  return 0;
}

}  // namespace switchdp::internal

#endif  // SWITCHDP_SRC_STOCHASTIC_HPP_
