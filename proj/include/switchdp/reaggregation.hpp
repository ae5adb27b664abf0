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

// Turning obfuscated switch states back into load profiles, and summing
// meters into regional totals.

#ifndef SWITCHDP_REAGGREGATION_HPP_
#define SWITCHDP_REAGGREGATION_HPP_

#include <cstddef>
#include <vector>

#include "switchdp/appliance_model.hpp"
#include "switchdp/csv_io.hpp"
#include "switchdp/rng.hpp"
#include "switchdp/series.hpp"

namespace switchdp {

// Per slot t, with x the estimated state and x' the obfuscated one:
//   x' == 0            -> 0 W
//   x' == x, x' != 0   -> original[t]
//   x' != x, x' != 0   -> uniform draw from the consumption profile of x'
// Errors: kValidation for length mismatch or out-of-range states,
// kReaggregation when a needed profile is empty.
PowerSeries ReaggregateAppliance(const PowerSeries& original,
                                 const StateSequence& x,
                                 const StateSequence& x_prime,
                                 const ApplianceModel& model, Rng& rng);

// Elementwise sum. Errors: kAlignment for mismatched grids, kValidation for
// an empty list.
PowerSeries SumAppliances(const NamedSeries& per_appliance);

// Consecutive groups of `group_size` meters (the last may be short), each
// summed elementwise. An empty meter list gives an empty result.
// Errors: kValidation for group_size == 0, kAlignment for mismatched grids.
std::vector<PowerSeries> FogAggregate(const std::vector<PowerSeries>& meters,
                                      std::size_t group_size);

}  // namespace switchdp

#endif  // SWITCHDP_REAGGREGATION_HPP_
