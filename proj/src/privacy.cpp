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

#include "switchdp/privacy.hpp"

#include <algorithm>
#include <cmath>

#include "switchdp/error.hpp"

namespace switchdp {

std::string_view SensitivityModeName(SensitivityMode mode) {
  switch (mode) {
    case SensitivityMode::kGlobal:
      return "global";
    case SensitivityMode::kLocal:
      return "local";
    case SensitivityMode::kSmooth:
      return "smooth";
  }
  return "global";
}

SensitivityMode ParseSensitivityMode(std::string_view name) {
  if (name == "global") return SensitivityMode::kGlobal;
  if (name == "local") return SensitivityMode::kLocal;
  if (name == "smooth") return SensitivityMode::kSmooth;
  throw Error(ErrorCode::kValidation,
              "unknown sensitivity mode '" + std::string(name) + "'");
}

void PrivacyParams::Validate() const {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kValidation, "epsilon must be positive");
  }
  if (sensitivity == SensitivityMode::kSmooth && !(beta > 0.0)) {
    throw Error(ErrorCode::kValidation, "smooth sensitivity needs beta > 0");
  }
}

double LaplaceFromUniform(double u, double scale) {
  if (!(scale > 0.0)) {
    throw Error(ErrorCode::kValidation, "Laplace scale must be positive");
  }
  const double c = u - 0.5;
  if (c == 0.0) return 0.0;
  const double mag = -scale * std::log1p(-2.0 * std::abs(c));
  return c < 0.0 ? -mag : mag;
}

double LaplaceSample(double scale, Rng& rng) {
  return LaplaceFromUniform(UniformOpen01(rng), scale);
}

SensitivityValue GlobalSensitivity(const FhmmModel& model) {
  return {static_cast<double>(model.max_omega()), SensitivityMode::kGlobal};
}

SensitivityValue LocalSensitivity(const std::vector<StateSequence>& states) {
  int best = 0;
  for (const auto& seq : states) {
    for (int v : seq.states) best = std::max({best, v, seq.omega - v});
  }
  return {static_cast<double>(best), SensitivityMode::kLocal};
}

SensitivityValue SmoothSensitivity(const std::vector<StateSequence>& states,
                                   double beta) {
  if (!(beta > 0.0)) {
    throw Error(ErrorCode::kValidation, "smooth sensitivity needs beta > 0");
  }
  return {LocalSensitivity(states).value * std::exp(-beta),
          SensitivityMode::kSmooth};
}

SensitivityValue ComputeSensitivity(const std::vector<StateSequence>& states,
                                    const FhmmModel& model,
                                    const PrivacyParams& params) {
  switch (params.sensitivity) {
    case SensitivityMode::kGlobal:
      return GlobalSensitivity(model);
    case SensitivityMode::kLocal:
      return LocalSensitivity(states);
    case SensitivityMode::kSmooth:
      return SmoothSensitivity(states, params.beta);
  }
  return GlobalSensitivity(model);
}

std::vector<NoisyStateSequence> AddStateNoise(
    const std::vector<StateSequence>& states, double scale,
    std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NoisyStateSequence> out;
  out.reserve(states.size());
  for (const auto& seq : states) {
    NoisyStateSequence n{seq.appliance_id, seq.omega, {}};
    n.values.reserve(seq.size());
    for (int v : seq.states) {
      n.values.push_back(static_cast<double>(v) + LaplaceSample(scale, rng));
    }
    out.push_back(std::move(n));
  }
  return out;
}

std::vector<NoisyStateSequence> PerturbStates(
    const std::vector<StateSequence>& states, const PrivacyParams& params,
    const FhmmModel& model) {
  params.Validate();
  for (const auto& s : states) s.Validate();
  const SensitivityValue s = ComputeSensitivity(states, model, params);
  if (s.value == 0.0) {
    // Nothing can change: every entry is already pinned.
    std::vector<NoisyStateSequence> out;
    for (const auto& seq : states) {
      out.push_back({seq.appliance_id, seq.omega,
                     std::vector<double>(seq.states.begin(), seq.states.end())});
    }
    return out;
  }
  return AddStateNoise(states, s.value / params.epsilon, params.seed);
}

int DiscretizeValue(double v, int omega) {
  const double r = std::round(v);  // half away from zero
  if (!(r >= 0.0)) return 0;
  if (r >= static_cast<double>(omega)) return omega;
  return static_cast<int>(r);
}

std::vector<StateSequence> DiscretizeStates(
    const std::vector<NoisyStateSequence>& noisy) {
  std::vector<StateSequence> out;
  out.reserve(noisy.size());
  for (const auto& n : noisy) {
    StateSequence s{n.appliance_id, n.omega, {}};
    s.states.reserve(n.size());
    for (double v : n.values) s.states.push_back(DiscretizeValue(v, n.omega));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace switchdp
