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

// Differential privacy on appliance switch states.
//
// The protected object is the state dataset: every appliance's state at every
// time slot. Two datasets are adjacent when they differ in one appliance's
// state in one slot, so the L1 sensitivity of the identity query is the
// largest single-entry change. Noise is added independently per slot and per
// appliance; the guarantee reported is the per-slot epsilon (composition
// mode "per-slot"), no accounting over time is performed.

#ifndef SWITCHDP_PRIVACY_HPP_
#define SWITCHDP_PRIVACY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "switchdp/fhmm_model.hpp"
#include "switchdp/rng.hpp"
#include "switchdp/series.hpp"

namespace switchdp {

enum class SensitivityMode { kGlobal, kLocal, kSmooth };

std::string_view SensitivityModeName(SensitivityMode mode);
SensitivityMode ParseSensitivityMode(std::string_view name);

inline constexpr double kDefaultSmoothBeta = 0.1;

struct PrivacyParams {
  double epsilon = 1.0;
  SensitivityMode sensitivity = SensitivityMode::kGlobal;
  double beta = kDefaultSmoothBeta;  // smooth mode only
  std::uint64_t seed = 0;

  // Throws kValidation unless epsilon > 0 (and beta > 0 in smooth mode).
  void Validate() const;
};

struct SensitivityValue {
  double value = 0.0;  // in state units
  SensitivityMode mode = SensitivityMode::kGlobal;
};

// One inverse-CDF Laplace(0, scale) draw: x = -scale * sgn(u - 1/2) *
// ln(1 - 2|u - 1/2|). Throws kValidation for scale <= 0.
double LaplaceFromUniform(double u, double scale);
double LaplaceSample(double scale, Rng& rng);

// max_i omega_i.
SensitivityValue GlobalSensitivity(const FhmmModel& model);

// Largest reachable change of one entry of the given dataset:
// max over entries of max(v, omega - v). Empty input gives 0.
SensitivityValue LocalSensitivity(const std::vector<StateSequence>& states);

// LocalSensitivity * exp(-beta), i.e. the damping at distance one.
// Throws kValidation for beta <= 0.
SensitivityValue SmoothSensitivity(const std::vector<StateSequence>& states,
                                   double beta);

SensitivityValue ComputeSensitivity(const std::vector<StateSequence>& states,
                                    const FhmmModel& model,
                                    const PrivacyParams& params);

// Adds independent Laplace(0, scale) noise to every entry, appliance-major
// then time, from a generator seeded with params.seed.
std::vector<NoisyStateSequence> AddStateNoise(
    const std::vector<StateSequence>& states, double scale, std::uint64_t seed);

// Laplace mechanism on the state dataset with scale S / epsilon, S from the
// selected sensitivity mode.
std::vector<NoisyStateSequence> PerturbStates(
    const std::vector<StateSequence>& states, const PrivacyParams& params,
    const FhmmModel& model);

// Rounds half away from zero and clamps to [0, omega] of each appliance.
std::vector<StateSequence> DiscretizeStates(
    const std::vector<NoisyStateSequence>& noisy);

int DiscretizeValue(double v, int omega);

}  // namespace switchdp

#endif  // SWITCHDP_PRIVACY_HPP_
