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

// End-to-end obfuscation of one meter's data by any of the supported schemes.

#ifndef SWITCHDP_MECHANISM_HPP_
#define SWITCHDP_MECHANISM_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "switchdp/csv_io.hpp"
#include "switchdp/dataset.hpp"
#include "switchdp/fhmm_model.hpp"
#include "switchdp/privacy.hpp"

namespace switchdp {

enum class Mechanism {
  kIdentity,          // no obfuscation (reference cell)
  kStates,            // noise on decoded switch states, then re-aggregation
  kAggregateLaplace,  // Laplace noise on every aggregate reading
  kHmmResynth,        // decode, resynthesise from state means, add Gaussian
};

std::string_view MechanismName(Mechanism m);
Mechanism ParseMechanism(std::string_view name);

struct MechanismConfig {
  PrivacyParams privacy;
  // Aggregate-Laplace sensitivity in watts; <= 0 means "use the largest
  // aggregate reading seen in training" from the model metadata.
  double baseline_delta_f = 0.0;
  // Resynthesis noise std in watts; unset means the standard deviation of
  // the aggregate-Laplace noise at the same epsilon, sqrt(2) * delta_f / eps.
  std::optional<double> resynth_sigma;
};

double BaselineDeltaF(const MechanismConfig& config, const ModelMetadata& meta);
double ResynthSigma(const MechanismConfig& config, const ModelMetadata& meta);

struct ObfuscationResult {
  PowerSeries aggregate;
  // State mechanism only: decoded states, obfuscated states and the
  // re-aggregated per-appliance series, in model order.
  std::vector<StateSequence> estimated_states;
  std::vector<StateSequence> obfuscated_states;
  NamedSeries per_appliance;
};

// Randomness is drawn from sub-seeds of config.privacy.seed, one per step.
// For the state mechanism the per-appliance originals kept in unchanged
// slots come from the meter's sub-metered channels when present, otherwise
// from the decoded state means.
ObfuscationResult Obfuscate(Mechanism mechanism, const FhmmModel& model,
                            const ModelMetadata& meta,
                            const LabeledDataset& meter,
                            const MechanismConfig& config);

}  // namespace switchdp

#endif  // SWITCHDP_MECHANISM_HPP_
