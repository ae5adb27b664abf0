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

#include "switchdp/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <string>

#include "switchdp/appliance_model.hpp"
#include "switchdp/csv_io.hpp"
#include "switchdp/error.hpp"
#include "switchdp/fhmm_model.hpp"
#include "switchdp/inference.hpp"
#include "switchdp/mechanism.hpp"
#include "switchdp/reaggregation.hpp"
#include "switchdp/redd_io.hpp"
#include "switchdp/rng.hpp"
#include "switchdp/synth.hpp"
#include "switchdp/text_format.hpp"

namespace switchdp::cli {
namespace {

fs::path ModelPathOr(const fs::path& model_path, const fs::path& out) {
  return model_path.empty() ? out / "model.json" : model_path;
}

std::pair<FhmmModel, ModelMetadata> LoadModel(const fs::path& path) {
  return ParseModelFile(ReadTextFile(path));
}

std::string MeterDir(std::size_t m) { return "meter_" + std::to_string(m); }

LabeledDataset EvaluationPart(const PipelineConfig& config,
                              const LabeledDataset& meter) {
  return meter.Split(config.train_fraction).second;
}

MechanismConfig ToMechanismConfig(const PipelineConfig& config,
                                  std::uint64_t seed) {
  MechanismConfig mc;
  mc.privacy.epsilon = config.privacy.epsilon;
  mc.privacy.sensitivity = config.privacy.sensitivity;
  mc.privacy.beta = config.privacy.beta;
  mc.privacy.seed = seed;
  mc.baseline_delta_f = config.privacy.baseline_delta_f;
  mc.resynth_sigma = config.privacy.resynth_sigma;
  return mc;
}

}  // namespace

SweepConfig ToSweepConfig(const PipelineConfig& config) {
  SweepConfig s;
  s.mechanisms = config.evaluation.mechanisms;
  s.epsilons = config.evaluation.epsilons;
  s.seeds = config.evaluation.seeds;
  s.sensitivity = config.privacy.sensitivity;
  s.beta = config.privacy.beta;
  s.baseline_delta_f = config.privacy.baseline_delta_f;
  s.resynth_sigma = config.privacy.resynth_sigma;
  s.kl_bins = config.evaluation.kl_bins;
  s.entropy_bins = config.evaluation.entropy_bins;
  s.jobs = config.jobs;
  return s;
}

std::vector<LabeledDataset> LoadMeters(const PipelineConfig& config) {
  config.Validate();
  std::vector<LabeledDataset> meters;
  if (config.source == "synth") {
    for (std::size_t m = 0; m < config.meters; ++m) {
      SynthConfig sc = config.synth;
      sc.interval = config.interval;
      sc.seed = DeriveSeed(config.seed, "synth/meter/" + std::to_string(m));
      meters.push_back(SynthGenerate(sc));
    }
  } else {
    for (const auto& h : config.houses) meters.push_back(LoadHouse(h, config.interval));
  }
  return meters;
}

void CmdSynth(const PipelineConfig& config, const fs::path& out) {
  if (config.source != "synth") {
    throw Error(ErrorCode::kValidation, "synth needs data.source = \"synth\"");
  }
  const auto meters = LoadMeters(config);
  for (std::size_t m = 0; m < meters.size(); ++m) {
    WriteHouse(out / "data" / MeterDir(m), meters[m]);
  }
}

fs::path CmdTrain(const PipelineConfig& config, const fs::path& out,
                  const fs::path& model_path) {
  const auto meters = LoadMeters(config);
  const LabeledDataset train = meters.front().Split(config.train_fraction).first;

  std::vector<ApplianceModel> models;
  for (const auto& spec : config.ResolvedAppliances()) {
    const ApplianceChannel* ch = train.Find(spec.id);
    if (ch == nullptr) {
      throw Error(ErrorCode::kValidation,
                  "training data has no channel for appliance '" + spec.id + "'");
    }
    QuantizeOptions q;
    q.off_threshold = config.training.off_threshold;
    q.kmeans_iterations = config.training.kmeans_iterations;
    q.seed = DeriveSeed(config.seed, "quantize/" + spec.id);
    EstimateOptions e;
    e.smoothing = config.training.smoothing;
    e.std_floor = config.training.std_floor;
    try {
      models.push_back(TrainAppliance(spec.id, ch->power, spec.omega, q, e));
    } catch (const Error& err) {
      throw Error(err.code(), "appliance '" + spec.id + "': " + err.what());
    }
  }
  const FhmmModel model = BuildFhmm(std::move(models), config.training.joint_state_cap);

  ModelMetadata meta;
  meta.interval = config.interval;
  meta.training_samples = train.aggregate.size();
  for (double v : train.aggregate.values) {
    meta.max_aggregate_watts = std::max(meta.max_aggregate_watts, v);
  }
  const fs::path path = ModelPathOr(model_path, out);
  WriteTextFile(path, FormatModelFile(model, meta));
  return path;
}

void CmdAttack(const PipelineConfig& config, const fs::path& out,
               const fs::path& model_path, const fs::path& input) {
  const auto [model, meta] = LoadModel(ModelPathOr(model_path, out));
  PowerSeries y;
  y.interval = config.interval;
  try {
    y = LoadReddChannel(input, config.interval);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmptySeries) throw;
  }
  const MapResult map = ViterbiMap(model, y);
  WriteTextFile(out / "attack" / "states.csv", FormatStatesCsv(map.states));
  WriteTextFile(out / "attack" / "power.csv",
                FormatPowerCsv(StatesToPower(model, map.states, y.start_time, y.interval)));
}

void CmdPrivatize(const PipelineConfig& config, const fs::path& out,
                  const fs::path& model_path) {
  const auto [model, meta] = LoadModel(ModelPathOr(model_path, out));
  const auto meters = LoadMeters(config);
  const fs::path root = out / "privatized";
  std::vector<PowerSeries> obfuscated;
  for (std::size_t m = 0; m < meters.size(); ++m) {
    const LabeledDataset eval = EvaluationPart(config, meters[m]);
    const MechanismConfig mc = ToMechanismConfig(
        config, DeriveSeed(config.seed, "privatize/meter/" + std::to_string(m)));
    const ObfuscationResult r =
        Obfuscate(config.privacy.mechanism, model, meta, eval, mc);
    const fs::path dir = root / MeterDir(m);
    WriteReddChannel(dir / "channel_1.dat", r.aggregate);
    if (config.privacy.mechanism == Mechanism::kStates) {
      WriteTextFile(dir / "estimated_states.csv", FormatStatesCsv(r.estimated_states));
      WriteTextFile(dir / "obfuscated_states.csv", FormatStatesCsv(r.obfuscated_states));
      WriteTextFile(dir / "appliances.csv", FormatPowerCsv(r.per_appliance));
    }
    obfuscated.push_back(r.aggregate);
  }
  NamedSeries fog;
  const auto groups = FogAggregate(obfuscated, config.fog_group);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    fog.emplace_back("fog_" + std::to_string(g), groups[g]);
  }
  WriteTextFile(root / "fog.csv", FormatPowerCsv(fog));
}

EvaluationReport CmdEvaluate(const PipelineConfig& config, const fs::path& out,
                             const fs::path& model_path) {
  const auto [model, meta] = LoadModel(ModelPathOr(model_path, out));
  const LabeledDataset eval = EvaluationPart(config, LoadMeters(config).front());
  const SweepConfig sc = ToSweepConfig(config);
  const EvaluationReport r =
      EvaluateCell(eval, GroundTruth(eval, model), model, meta,
                   config.privacy.mechanism, config.privacy.epsilon, config.seed, sc);
  WriteTextFile(out / "evaluate" / "report.csv", FormatReportCsv({r}));
  return r;
}

std::vector<EvaluationReport> CmdSweep(const PipelineConfig& config,
                                       const fs::path& out,
                                       const fs::path& model_path) {
  const auto [model, meta] = LoadModel(ModelPathOr(model_path, out));
  const LabeledDataset eval = EvaluationPart(config, LoadMeters(config).front());
  const auto reports = RunSweep(eval, model, meta, ToSweepConfig(config));
  WriteTextFile(out / "sweep" / "report.csv", FormatReportCsv(reports));
  WriteTextFile(out / "sweep" / "plot_data.csv", FormatPlotData(reports));
  return reports;
}

void CmdPipeline(const PipelineConfig& config, const fs::path& out) {
  if (config.source == "synth") CmdSynth(config, out);
  const fs::path model = CmdTrain(config, out);
  CmdPrivatize(config, out, model);
  CmdAttack(config, out, model, out / "privatized" / MeterDir(0) / "channel_1.dat");
  CmdEvaluate(config, out, model);
  CmdSweep(config, out, model);
}

}  // namespace switchdp::cli
