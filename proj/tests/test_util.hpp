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

// Small hand-built models shared by the unit tests.

#ifndef SWITCHDP_TESTS_TEST_UTIL_HPP_
#define SWITCHDP_TESTS_TEST_UTIL_HPP_

#include <cmath>
#include <string>
#include <vector>

#include "switchdp/appliance_model.hpp"
#include "switchdp/fhmm_model.hpp"
#include "switchdp/rng.hpp"
#include "switchdp/series.hpp"

namespace switchdp::testing {

// Sticky chain with the given state means, a uniform start and one profile
// sample per state at its mean.
inline ApplianceModel MakeAppliance(const std::string& id,
                                    const std::vector<double>& means,
                                    double stay = 0.9, double std = 5.0) {
  ApplianceModel m;
  m.id = id;
  m.omega = static_cast<int>(means.size()) - 1;
  const auto n = means.size();
  m.initial.assign(n, 1.0 / static_cast<double>(n));
  m.transition.assign(n, std::vector<double>(n, (1.0 - stay) / static_cast<double>(n - 1)));
  for (std::size_t s = 0; s < n; ++s) {
    m.transition[s][s] = stay;
    m.emission.push_back({means[s], std});
    m.profile.push_back({means[s]});
  }
  return m;
}

inline std::vector<double> RandomDistribution(std::size_t n, Rng& rng) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (auto& v : p) {
    v = 0.05 + UniformOpen01(rng);
    sum += v;
  }
  for (auto& v : p) v /= sum;
  return p;
}

// Random appliance with omega in {1..max_omega} and random parameters.
inline ApplianceModel RandomAppliance(const std::string& id, int max_omega, Rng& rng) {
  const int omega = 1 + static_cast<int>(UniformIndex(rng, static_cast<std::size_t>(max_omega)));
  const auto n = static_cast<std::size_t>(omega) + 1;
  ApplianceModel m;
  m.id = id;
  m.omega = omega;
  m.initial = RandomDistribution(n, rng);
  for (std::size_t s = 0; s < n; ++s) {
    m.transition.push_back(RandomDistribution(n, rng));
    const double mean = s == 0 ? 0.0 : 50.0 + 400.0 * UniformOpen01(rng);
    m.emission.push_back({mean, 20.0 + 80.0 * UniformOpen01(rng)});
    m.profile.push_back({mean});
  }
  return m;
}

inline PowerSeries MakeSeries(std::vector<double> values, std::int64_t interval = 60) {
  PowerSeries s;
  s.interval = interval;
  s.values = std::move(values);
  return s;
}

}  // namespace switchdp::testing

#endif  // SWITCHDP_TESTS_TEST_UTIL_HPP_
