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

// Seeded generator of factorial Markov-chain load data with ground truth.

#ifndef SWITCHDP_SYNTH_HPP_
#define SWITCHDP_SYNTH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "switchdp/dataset.hpp"

namespace switchdp {

struct SynthAppliance {
  std::string id;
  // Mean power per state; index 0 is OFF and must be 0 W.
  std::vector<double> state_means;
  // Gaussian jitter std for every ON state. OFF never jitters.
  double jitter_std = 0.0;
  std::vector<std::vector<double>> transition;
  std::vector<double> initial;

  int omega() const { return static_cast<int>(state_means.size()) - 1; }
};

struct SynthConfig {
  std::vector<SynthAppliance> appliances;
  std::size_t duration = 0;  // samples
  std::int64_t interval = 60;
  std::int64_t start_time = 1303132800;
  std::uint64_t seed = 0;

  // Throws kValidation on non-stochastic rows, shape mismatches, a non-zero
  // OFF mean or negative jitter.
  void Validate() const;
};

// Schema (all keys optional except "appliances"):
//   { "duration": 10000, "interval": 60, "start_time": 1303132800, "seed": 7,
//     "appliances": [ { "id": "fridge", "state_means": [0, 150],
//                       "jitter_std": 5,
//                       "transition": [[0.9, 0.1], [0.1, 0.9]],
//                       "initial": [0.5, 0.5] } ] }
SynthConfig SynthConfigFromJson(const nlohmann::json& j);
nlohmann::json SynthConfigToJson(const SynthConfig& config);

// The three-appliance benchmark used by the tests, the acceptance suite and
// the CLI default config: state means at least 150 W apart and every joint
// sum distinct.
SynthConfig BenchmarkSynthConfig(std::size_t duration, std::uint64_t seed);

// Samples each appliance's chain, emits mean + N(0, jitter) clamped at 0 W
// for ON states and exactly 0 W for OFF, and sums into the aggregate.
// Identical configs give bit-identical datasets.
LabeledDataset SynthGenerate(const SynthConfig& config);

}  // namespace switchdp

#endif  // SWITCHDP_SYNTH_HPP_
