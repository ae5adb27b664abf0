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

#include "switchdp/mechanism.hpp"

#include <cmath>
#include <string>

#include "switchdp/baselines.hpp"
#include "switchdp/error.hpp"
#include "switchdp/inference.hpp"
#include "switchdp/reaggregation.hpp"

namespace switchdp {

std::string_view MechanismName(Mechanism m) {
  switch (m) {
    case Mechanism::kIdentity:
      return "identity";
    case Mechanism::kStates:
      return "states";
    case Mechanism::kAggregateLaplace:
      return "aggregate-laplace";
    case Mechanism::kHmmResynth:
      return "hmm-resynth";
  }
  return "identity";
}

Mechanism ParseMechanism(std::string_view name) {
  for (Mechanism m : {Mechanism::kIdentity, Mechanism::kStates,
                      Mechanism::kAggregateLaplace, Mechanism::kHmmResynth}) {
    if (MechanismName(m) == name) return m;
  }
  throw Error(ErrorCode::kValidation,
              "unknown mechanism '" + std::string(name) + "'");
}

double BaselineDeltaF(const MechanismConfig& config, const ModelMetadata& meta) {
  const double d =
      config.baseline_delta_f > 0.0 ? config.baseline_delta_f : meta.max_aggregate_watts;
  if (!(d > 0.0)) {
    throw Error(ErrorCode::kValidation,
                "aggregate-Laplace sensitivity is unset and the model has no "
                "training maximum");
  }
  return d;
}

double ResynthSigma(const MechanismConfig& config, const ModelMetadata& meta) {
  if (config.resynth_sigma) return *config.resynth_sigma;
  return std::sqrt(2.0) * BaselineDeltaF(config, meta) / config.privacy.epsilon;
}

ObfuscationResult Obfuscate(Mechanism mechanism, const FhmmModel& model,
                            const ModelMetadata& meta,
                            const LabeledDataset& meter,
                            const MechanismConfig& config) {
  config.privacy.Validate();
  const std::uint64_t seed = config.privacy.seed;
  const PowerSeries& y = meter.aggregate;
  ObfuscationResult out;
  switch (mechanism) {
    case Mechanism::kIdentity:
      out.aggregate = y;
      return out;
    case Mechanism::kAggregateLaplace: {
      Rng rng(DeriveSeed(seed, "aggregate-laplace"));
      out.aggregate = BaselineAggregateLaplace(y, config.privacy.epsilon,
                                               BaselineDeltaF(config, meta), rng);
      return out;
    }
    case Mechanism::kHmmResynth: {
      Rng rng(DeriveSeed(seed, "hmm-resynth"));
      out.aggregate =
          BaselineHmmResynthesis(model, y, ResynthSigma(config, meta), rng);
      return out;
    }
    case Mechanism::kStates:
      break;
  }

  out.estimated_states = ViterbiMap(model, y).states;
  PrivacyParams noise = config.privacy;
  noise.seed = DeriveSeed(seed, "state-noise");
  out.obfuscated_states =
      DiscretizeStates(PerturbStates(out.estimated_states, noise, model));

  const NamedSeries decoded =
      StatesToPower(model, out.estimated_states, y.start_time, y.interval);
  Rng profile_rng(DeriveSeed(seed, "profile"));
  for (std::size_t i = 0; i < model.num_appliances(); ++i) {
    const ApplianceModel& a = model.appliances()[i];
    const ApplianceChannel* metered = meter.Find(a.id);
    const PowerSeries& original =
        metered != nullptr ? metered->power : decoded[i].second;
    out.per_appliance.emplace_back(
        a.id, ReaggregateAppliance(original, out.estimated_states[i],
                                   out.obfuscated_states[i], a, profile_rng));
  }
  out.aggregate = SumAppliances(out.per_appliance);
  return out;
}

}  // namespace switchdp
