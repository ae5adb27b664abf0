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

#include "switchdp/baselines.hpp"

#include <random>

#include "switchdp/error.hpp"
#include "switchdp/inference.hpp"
#include "switchdp/privacy.hpp"
#include "switchdp/reaggregation.hpp"

namespace switchdp {

PowerSeries BaselineAggregateLaplace(const PowerSeries& y_sum, double epsilon,
                                     double delta_f_watts, Rng& rng) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kValidation, "epsilon must be positive");
  }
  if (!(delta_f_watts > 0.0)) {
    throw Error(ErrorCode::kValidation, "baseline sensitivity must be positive");
  }
  const double scale = delta_f_watts / epsilon;
  PowerSeries out = y_sum;
  out.measured = false;
  for (double& v : out.values) v += LaplaceSample(scale, rng);
  return out;
}

PowerSeries BaselineHmmResynthesis(const FhmmModel& model,
                                   const PowerSeries& y_sum,
                                   double sigma_watts, Rng& rng) {
  if (!(sigma_watts >= 0.0)) {
    throw Error(ErrorCode::kValidation, "resynthesis sigma must be >= 0");
  }
  const MapResult decoded = ViterbiMap(model, y_sum);
  PowerSeries out = SumAppliances(
      StatesToPower(model, decoded.states, y_sum.start_time, y_sum.interval));
  out.measured = false;
  if (sigma_watts > 0.0) {
    std::normal_distribution<double> noise(0.0, sigma_watts);
    for (double& v : out.values) v += noise(rng);
  }
  return out;
}

}  // namespace switchdp
