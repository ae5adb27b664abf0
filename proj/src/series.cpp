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

#include "switchdp/series.hpp"

#include <cmath>

#include "switchdp/error.hpp"

namespace switchdp {

void PowerSeries::Validate() const {
  if (interval <= 0) {
    throw Error(ErrorCode::kValidation,
                "interval must be positive, got " + std::to_string(interval));
  }
  if (!measured) return;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!(values[k] >= 0.0) || !std::isfinite(values[k])) {
      throw Error(ErrorCode::kValidation,
                  "measured series has invalid value at index " +
                      std::to_string(k));
    }
  }
}

PowerSeries PowerSeries::Slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > values.size()) {
    throw Error(ErrorCode::kValidation, "slice out of range");
  }
  PowerSeries out;
  out.start_time = TimeAt(begin);
  out.interval = interval;
  out.measured = measured;
  out.values.assign(values.begin() + static_cast<std::ptrdiff_t>(begin),
                    values.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

void StateSequence::Validate() const {
  if (omega < 1) {
    throw Error(ErrorCode::kValidation,
                "appliance '" + appliance_id + "' needs omega >= 1");
  }
  for (std::size_t t = 0; t < states.size(); ++t) {
    if (states[t] < 0 || states[t] > omega) {
      throw Error(ErrorCode::kValidation,
                  "appliance '" + appliance_id + "' state " +
                      std::to_string(states[t]) + " at t=" + std::to_string(t) +
                      " outside 0.." + std::to_string(omega));
    }
  }
}

StateSequence StateSequence::Slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > states.size()) {
    throw Error(ErrorCode::kValidation, "slice out of range");
  }
  StateSequence out{appliance_id, omega, {}};
  out.states.assign(states.begin() + static_cast<std::ptrdiff_t>(begin),
                    states.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

}  // namespace switchdp
