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

// Pipeline stages behind the `switchdp` subcommands. Every stage reads the
// shared config, writes plain-text artifacts under `out`, and is a pure
// function of (config, seed, inputs).

#ifndef SWITCHDP_CLI_COMMANDS_HPP_
#define SWITCHDP_CLI_COMMANDS_HPP_

#include <filesystem>
#include <vector>

#include "switchdp/cli/config.hpp"
#include "switchdp/dataset.hpp"
#include "switchdp/sweep.hpp"

namespace switchdp::cli {

namespace fs = std::filesystem;

// Meters described by the config: generated from `synth` with one derived
// seed per meter, or loaded from the listed REDD house directories.
std::vector<LabeledDataset> LoadMeters(const PipelineConfig& config);

// Writes every synthetic meter to `out/data/meter_<m>/` in REDD layout.
void CmdSynth(const PipelineConfig& config, const fs::path& out);

// Trains on the leading `train_fraction` of the first meter and writes the
// model file (default `out/model.json`).
fs::path CmdTrain(const PipelineConfig& config, const fs::path& out,
                  const fs::path& model_path = {});

// Decodes an aggregate REDD channel file. Writes `states.csv` and
// `power.csv` under `out/attack/`.
void CmdAttack(const PipelineConfig& config, const fs::path& out,
               const fs::path& model_path, const fs::path& input);

// Obfuscates the evaluation part of every meter with `config.privacy`.
// Writes `out/privatized/meter_<m>/channel_1.dat`, the obfuscated states and
// per-appliance series for the state mechanism, and the fog totals.
void CmdPrivatize(const PipelineConfig& config, const fs::path& out,
                  const fs::path& model_path);

// One cell at `config.privacy`, scored on the first meter. Writes
// `out/evaluate/report.csv`.
EvaluationReport CmdEvaluate(const PipelineConfig& config, const fs::path& out,
                             const fs::path& model_path);

// The full grid of `config.evaluation`. Writes `report.csv` and
// `plot_data.csv` under `out/sweep/`.
std::vector<EvaluationReport> CmdSweep(const PipelineConfig& config,
                                       const fs::path& out,
                                       const fs::path& model_path);

// synth (synthetic source only), train, privatize, attack on the first
// obfuscated meter, evaluate and sweep, in that order.
void CmdPipeline(const PipelineConfig& config, const fs::path& out);

SweepConfig ToSweepConfig(const PipelineConfig& config);

}  // namespace switchdp::cli

#endif  // SWITCHDP_CLI_COMMANDS_HPP_
