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

// Core value types: power time series and appliance switch-state sequences.

#ifndef SWITCHDP_SERIES_HPP_
#define SWITCHDP_SERIES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace switchdp {

// Uniformly sampled active power (watts) for one channel. Sample k is taken at
// start_time + k * interval (UNIX seconds).
struct PowerSeries {
  std::int64_t start_time = 0;
  std::int64_t interval = 60;
  std::vector<double> values;
  // Measured data must be non-negative; obfuscated output may not be.
  bool measured = false;

  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }
  std::int64_t TimeAt(std::size_t k) const noexcept {
    return start_time + static_cast<std::int64_t>(k) * interval;
  }

  // Throws kValidation when interval <= 0 or a measured value is negative.
  void Validate() const;

  // Same grid (start, interval, length).
  bool AlignedWith(const PowerSeries& other) const noexcept {
    return start_time == other.start_time && interval == other.interval &&
           values.size() == other.values.size();
  }

  // Samples [begin, end) re-anchored at their own start time.
  PowerSeries Slice(std::size_t begin, std::size_t end) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

// Discrete switch-state trajectory of one appliance. 0 is OFF, k >= 1 is ON_k.
struct StateSequence {
  std::string appliance_id;
  int omega = 1;  // number of ON states
  std::vector<int> states;

  std::size_t size() const noexcept { return states.size(); }

  // Throws kValidation when omega < 1 or an entry leaves {0..omega}.
  void Validate() const;

  StateSequence Slice(std::size_t begin, std::size_t end) const;

  friend bool operator==(const StateSequence&, const StateSequence&) = default;
};

// Real-valued state trajectory after additive noise.
struct NoisyStateSequence {
  std::string appliance_id;
  int omega = 1;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }

  friend bool operator==(const NoisyStateSequence&,
                         const NoisyStateSequence&) = default;
};

}  // namespace switchdp

#endif  // SWITCHDP_SERIES_HPP_
