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

// Comparison schemes that obfuscate power readings directly.

#ifndef SWITCHDP_BASELINES_HPP_
#define SWITCHDP_BASELINES_HPP_

#include "switchdp/fhmm_model.hpp"
#include "switchdp/rng.hpp"
#include "switchdp/series.hpp"

namespace switchdp {

// Laplace(0, delta_f_watts / epsilon) added to every reading. The output is
// not clamped, so low readings routinely go negative.
// Errors: kValidation for epsilon <= 0 or delta_f_watts <= 0.
PowerSeries BaselineAggregateLaplace(const PowerSeries& y_sum, double epsilon,
                                     double delta_f_watts, Rng& rng);

// Decodes y_sum with the model, rebuilds the aggregate from the decoded
// states' emission means and adds N(0, sigma) per reading.
// Errors: kValidation for sigma < 0.
PowerSeries BaselineHmmResynthesis(const FhmmModel& model,
                                   const PowerSeries& y_sum,
                                   double sigma_watts, Rng& rng);

}  // namespace switchdp

#endif  // SWITCHDP_BASELINES_HPP_
