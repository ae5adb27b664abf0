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

#include "switchdp/reaggregation.hpp"

#include <algorithm>

#include "switchdp/error.hpp"
#include "switchdp/kernels/kernels.hpp"

namespace switchdp {

PowerSeries ReaggregateAppliance(const PowerSeries& original,
                                 const StateSequence& x,
                                 const StateSequence& x_prime,
                                 const ApplianceModel& model, Rng& rng) {
  if (x.size() != original.size() || x_prime.size() != original.size()) {
    throw Error(ErrorCode::kValidation,
                "appliance '" + model.id + "': re-aggregation inputs differ in length");
  }
  x.Validate();
  x_prime.Validate();
  if (x_prime.omega > model.omega) {
    throw Error(ErrorCode::kValidation,
                "appliance '" + model.id + "': obfuscated states exceed model omega");
  }
  PowerSeries out = original;
  for (std::size_t t = 0; t < original.size(); ++t) {
    const int xp = x_prime.states[t];
    if (xp == 0) {
      out.values[t] = 0.0;
    } else if (xp == x.states[t]) {
      out.values[t] = original.values[t];
    } else {
      const auto s = static_cast<std::size_t>(xp);
      if (s >= model.profile.size() || model.profile[s].empty()) {
        throw Error(ErrorCode::kReaggregation,
                    "appliance '" + model.id +
                        "' has no consumption profile for state " +
                        std::to_string(xp));
      }
      const auto& cp = model.profile[s];
      out.values[t] = cp[UniformIndex(rng, cp.size())];
    }
  }
  return out;
}

PowerSeries SumAppliances(const NamedSeries& per_appliance) {
  if (per_appliance.empty()) {
    throw Error(ErrorCode::kValidation, "nothing to sum");
  }
  const auto& k = kernels::ActiveKernels();
  PowerSeries out = per_appliance.front().second;
  for (std::size_t i = 1; i < per_appliance.size(); ++i) {
    const PowerSeries& s = per_appliance[i].second;
    if (!s.AlignedWith(out)) {
      throw Error(ErrorCode::kAlignment,
                  "series '" + per_appliance[i].first + "' is misaligned");
    }
    kernels::Accumulate(k, out.values, s.values);
    out.measured = out.measured && s.measured;
  }
  return out;
}

std::vector<PowerSeries> FogAggregate(const std::vector<PowerSeries>& meters,
                                      std::size_t group_size) {
  if (group_size == 0) {
    throw Error(ErrorCode::kValidation, "fog group size must be >= 1");
  }
  std::vector<PowerSeries> out;
  const auto& k = kernels::ActiveKernels();
  for (std::size_t g = 0; g < meters.size(); g += group_size) {
    PowerSeries total = meters[g];
    for (std::size_t m = g + 1; m < std::min(g + group_size, meters.size()); ++m) {
      if (!meters[m].AlignedWith(total)) {
        throw Error(ErrorCode::kAlignment,
                    "meter " + std::to_string(m) + " is misaligned");
      }
      kernels::Accumulate(k, total.values, meters[m].values);
      total.measured = total.measured && meters[m].measured;
    }
    out.push_back(std::move(total));
  }
  return out;
}

}  // namespace switchdp
