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

// Experiment configuration shared by every CLI stage. See docs/config.md for
// the full JSON schema.

#ifndef SWITCHDP_CLI_CONFIG_HPP_
#define SWITCHDP_CLI_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "switchdp/mechanism.hpp"
#include "switchdp/privacy.hpp"
#include "switchdp/synth.hpp"

namespace switchdp::cli {

struct ApplianceSpec {
  std::string id;
  int omega = 1;
};

struct TrainingConfig {
  double off_threshold = 5.0;
  int kmeans_iterations = 50;
  double smoothing = 1.0;
  double std_floor = 1.0;
  std::size_t joint_state_cap = 4096;
};

struct PrivacyConfig {
  Mechanism mechanism = Mechanism::kStates;
  double epsilon = 5.0;
  SensitivityMode sensitivity = SensitivityMode::kGlobal;
  double beta = kDefaultSmoothBeta;
  double baseline_delta_f = 0.0;  // <= 0: training maximum
  std::optional<double> resynth_sigma;
};

struct EvaluationConfig {
  std::vector<Mechanism> mechanisms{Mechanism::kStates,
                                    Mechanism::kAggregateLaplace,
                                    Mechanism::kHmmResynth};
  std::vector<double> epsilons{0.1, 1.0, 5.0, 10.0};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  int kl_bins = 50;
  int entropy_bins = 50;
};

struct PipelineConfig {
  std::uint64_t seed = 42;
  std::int64_t interval = 60;
  double train_fraction = 0.5;
  unsigned jobs = 1;

  // "synth" generates `meters` houses from `synth`; "redd" reads house
  // directories listed in `houses`.
  std::string source = "synth";
  std::size_t meters = 3;
  std::vector<std::filesystem::path> houses;
  SynthConfig synth;

  // Appliances to model; empty means every synthetic appliance with its
  // generator's omega.
  std::vector<ApplianceSpec> appliances;
  TrainingConfig training;
  PrivacyConfig privacy;
  EvaluationConfig evaluation;
  std::size_t fog_group = 3;

  std::vector<ApplianceSpec> ResolvedAppliances() const;
  void Validate() const;
};

PipelineConfig DefaultPipelineConfig();
PipelineConfig PipelineConfigFromJson(const nlohmann::json& j);
nlohmann::json PipelineConfigToJson(const PipelineConfig& c);
PipelineConfig LoadPipelineConfig(const std::filesystem::path& path);

}  // namespace switchdp::cli

#endif  // SWITCHDP_CLI_CONFIG_HPP_
