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

#include "switchdp/cli/config.hpp"

#include "switchdp/error.hpp"
#include "switchdp/text_format.hpp"

namespace switchdp::cli {
namespace {

template <typename T>
void Read(const nlohmann::json& j, const char* key, T& out) {
  if (!j.contains(key) || j.at(key).is_null()) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

std::vector<ApplianceSpec> PipelineConfig::ResolvedAppliances() const {
  if (!appliances.empty()) return appliances;
  std::vector<ApplianceSpec> out;
  for (const auto& a : synth.appliances) out.push_back({a.id, a.omega()});
  return out;
}

void PipelineConfig::Validate() const {
  if (interval <= 0) throw Error(ErrorCode::kValidation, "interval must be positive");
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error(ErrorCode::kValidation, "train_fraction must be in (0, 1)");
  }
  if (source != "synth" && source != "redd") {
    throw Error(ErrorCode::kValidation, "data.source must be 'synth' or 'redd'");
  }
  if (source == "synth") {
    if (meters == 0) throw Error(ErrorCode::kValidation, "need at least one meter");
    synth.Validate();
  } else if (houses.empty()) {
    throw Error(ErrorCode::kValidation, "data.houses is empty");
  }
  if (ResolvedAppliances().empty()) {
    throw Error(ErrorCode::kValidation, "no appliances to model");
  }
  if (fog_group == 0) throw Error(ErrorCode::kValidation, "fog.group_size must be >= 1");
  PrivacyParams p{privacy.epsilon, privacy.sensitivity, privacy.beta, 0};
  p.Validate();
  for (double e : evaluation.epsilons) {
    if (!(e > 0.0)) throw Error(ErrorCode::kValidation, "sweep epsilons must be > 0");
  }
}

PipelineConfig DefaultPipelineConfig() {
  PipelineConfig c;
  c.synth = BenchmarkSynthConfig(10000, 0);
  c.synth.interval = c.interval;
  return c;
}

PipelineConfig PipelineConfigFromJson(const nlohmann::json& j) {
  PipelineConfig c = DefaultPipelineConfig();
  Read(j, "seed", c.seed);
  Read(j, "interval", c.interval);
  Read(j, "train_fraction", c.train_fraction);
  Read(j, "jobs", c.jobs);
  if (j.contains("data")) {
    const auto& d = j.at("data");
    Read(d, "source", c.source);
    Read(d, "meters", c.meters);
    std::vector<std::string> houses;
    Read(d, "houses", houses);
    c.houses.assign(houses.begin(), houses.end());
  }
  if (j.contains("synth")) c.synth = SynthConfigFromJson(j.at("synth"));
  c.synth.interval = c.interval;
  if (j.contains("appliances")) {
    for (const auto& a : j.at("appliances")) {
      ApplianceSpec s;
      Read(a, "id", s.id);
      Read(a, "omega", s.omega);
      c.appliances.push_back(s);
    }
  }
  if (j.contains("training")) {
    const auto& t = j.at("training");
    Read(t, "off_threshold", c.training.off_threshold);
    Read(t, "kmeans_iterations", c.training.kmeans_iterations);
    Read(t, "smoothing", c.training.smoothing);
    Read(t, "std_floor", c.training.std_floor);
    Read(t, "joint_state_cap", c.training.joint_state_cap);
  }
  if (j.contains("privacy")) {
    const auto& p = j.at("privacy");
    std::string mech(MechanismName(c.privacy.mechanism));
    std::string mode(SensitivityModeName(c.privacy.sensitivity));
    Read(p, "mechanism", mech);
    Read(p, "sensitivity", mode);
    c.privacy.mechanism = ParseMechanism(mech);
    c.privacy.sensitivity = ParseSensitivityMode(mode);
    Read(p, "epsilon", c.privacy.epsilon);
    Read(p, "beta", c.privacy.beta);
    Read(p, "baseline_delta_f", c.privacy.baseline_delta_f);
    if (p.contains("resynth_sigma") && !p.at("resynth_sigma").is_null()) {
      c.privacy.resynth_sigma = p.at("resynth_sigma").get<double>();
    }
  }
  if (j.contains("evaluation")) {
    const auto& e = j.at("evaluation");
    if (e.contains("mechanisms")) {
      c.evaluation.mechanisms.clear();
      for (const auto& m : e.at("mechanisms")) {
        c.evaluation.mechanisms.push_back(ParseMechanism(m.get<std::string>()));
      }
    }
    Read(e, "epsilons", c.evaluation.epsilons);
    Read(e, "seeds", c.evaluation.seeds);
    Read(e, "kl_bins", c.evaluation.kl_bins);
    Read(e, "entropy_bins", c.evaluation.entropy_bins);
  }
  if (j.contains("fog")) Read(j.at("fog"), "group_size", c.fog_group);
  c.Validate();
  return c;
}

nlohmann::json PipelineConfigToJson(const PipelineConfig& c) {
  std::vector<std::string> houses;
  for (const auto& h : c.houses) houses.push_back(h.string());
  nlohmann::json apps = nlohmann::json::array();
  for (const auto& a : c.appliances) apps.push_back({{"id", a.id}, {"omega", a.omega}});
  std::vector<std::string> mechs;
  for (Mechanism m : c.evaluation.mechanisms) mechs.emplace_back(MechanismName(m));
  nlohmann::json privacy = {
      {"mechanism", MechanismName(c.privacy.mechanism)},
      {"epsilon", c.privacy.epsilon},
      {"sensitivity", SensitivityModeName(c.privacy.sensitivity)},
      {"beta", c.privacy.beta},
      {"baseline_delta_f", c.privacy.baseline_delta_f},
      {"resynth_sigma", nullptr},
  };
  if (c.privacy.resynth_sigma) privacy["resynth_sigma"] = *c.privacy.resynth_sigma;
  return {
      {"seed", c.seed},
      {"interval", c.interval},
      {"train_fraction", c.train_fraction},
      {"jobs", c.jobs},
      {"data", {{"source", c.source}, {"meters", c.meters}, {"houses", houses}}},
      {"synth", SynthConfigToJson(c.synth)},
      {"appliances", apps},
      {"training",
       {{"off_threshold", c.training.off_threshold},
        {"kmeans_iterations", c.training.kmeans_iterations},
        {"smoothing", c.training.smoothing},
        {"std_floor", c.training.std_floor},
        {"joint_state_cap", c.training.joint_state_cap}}},
      {"privacy", privacy},
      {"evaluation",
       {{"mechanisms", mechs},
        {"epsilons", c.evaluation.epsilons},
        {"seeds", c.evaluation.seeds},
        {"kl_bins", c.evaluation.kl_bins},
        {"entropy_bins", c.evaluation.entropy_bins}}},
      {"fog", {{"group_size", c.fog_group}}},
  };
}

PipelineConfig LoadPipelineConfig(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ReadTextFile(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  return PipelineConfigFromJson(j);
}

}  // namespace switchdp::cli
