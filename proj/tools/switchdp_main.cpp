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

// switchdp command-line entry point.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "switchdp/cli/commands.hpp"
#include "switchdp/cli/config.hpp"
#include "switchdp/error.hpp"

namespace {

namespace fs = std::filesystem;
using switchdp::cli::PipelineConfig;

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs;
  std::string out = "out";
  std::string model;
  std::string input;
  std::optional<double> epsilon;
  std::optional<std::string> sensitivity;
  std::optional<double> beta;
  std::optional<std::string> mechanism;
  std::optional<std::size_t> fog_group;
};

PipelineConfig ResolveConfig(const Flags& f) {
  PipelineConfig c = f.config.empty() ? switchdp::cli::DefaultPipelineConfig()
                                      : switchdp::cli::LoadPipelineConfig(f.config);
  if (f.seed) c.seed = *f.seed;
  if (f.jobs) c.jobs = *f.jobs;
  if (f.epsilon) c.privacy.epsilon = *f.epsilon;
  if (f.sensitivity) c.privacy.sensitivity = switchdp::ParseSensitivityMode(*f.sensitivity);
  if (f.beta) c.privacy.beta = *f.beta;
  if (f.mechanism) c.privacy.mechanism = switchdp::ParseMechanism(*f.mechanism);
  if (f.fog_group) c.fog_group = *f.fog_group;
  c.Validate();
  return c;
}

void AddPrivacyFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--epsilon", f.epsilon, "privacy budget");
  cmd->add_option("--sensitivity", f.sensitivity, "global, local or smooth");
  cmd->add_option("--beta", f.beta, "smooth sensitivity damping");
  cmd->add_option("--mechanism", f.mechanism,
                  "identity, states, aggregate-laplace or hmm-resynth");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Switch-state differential privacy for smart meter data"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--config", f.config, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--seed", f.seed, "global seed");
  app.add_option("--out", f.out, "output directory");
  app.add_option("--jobs", f.jobs, "sweep worker threads");
  app.fallthrough();

  auto* synth = app.add_subcommand("synth", "generate synthetic meters");
  auto* train = app.add_subcommand("train", "train the appliance models");
  auto* attack = app.add_subcommand("attack", "decode switch states from an aggregate");
  auto* privatize = app.add_subcommand("privatize", "obfuscate the evaluation data");
  auto* evaluate = app.add_subcommand("evaluate", "score one mechanism and epsilon");
  auto* sweep = app.add_subcommand("sweep", "score the full experiment grid");
  auto* pipeline = app.add_subcommand("pipeline", "run every stage");

  for (auto* cmd : {train, attack, privatize, evaluate, sweep}) {
    cmd->add_option("--model", f.model, "model file (default <out>/model.json)");
  }
  attack->add_option("--input", f.input, "aggregate channel file")->required();
  AddPrivacyFlags(privatize, f);
  AddPrivacyFlags(evaluate, f);
  AddPrivacyFlags(pipeline, f);
  privatize->add_option("--fog-group", f.fog_group, "meters per fog node");
  pipeline->add_option("--fog-group", f.fog_group, "meters per fog node");

  CLI11_PARSE(app, argc, argv);

  try {
    const PipelineConfig config = ResolveConfig(f);
    const fs::path out = f.out;
    const fs::path model = f.model;
    if (synth->parsed()) {
      switchdp::cli::CmdSynth(config, out);
    } else if (train->parsed()) {
      std::cout << switchdp::cli::CmdTrain(config, out, model).string() << "\n";
    } else if (attack->parsed()) {
      switchdp::cli::CmdAttack(config, out, model, f.input);
    } else if (privatize->parsed()) {
      switchdp::cli::CmdPrivatize(config, out, model);
    } else if (evaluate->parsed()) {
      switchdp::cli::CmdEvaluate(config, out, model);
    } else if (sweep->parsed()) {
      switchdp::cli::CmdSweep(config, out, model);
    } else if (pipeline->parsed()) {
      switchdp::cli::CmdPipeline(config, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "switchdp: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
