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

#include "switchdp/fhmm_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "switchdp/error.hpp"

namespace switchdp {

FhmmModel FhmmModel::Build(std::vector<ApplianceModel> appliances,
                           std::size_t joint_state_cap) {
  if (appliances.empty()) {
    throw Error(ErrorCode::kValidation, "factorial model needs >= 1 appliance");
  }
  FhmmModel m;
  m.cap_ = joint_state_cap;
  std::size_t count = 1;
  for (std::size_t i = 0; i < appliances.size(); ++i) {
    const ApplianceModel& a = appliances[i];
    a.Validate(false);
    for (std::size_t k = 0; k < i; ++k) {
      if (appliances[k].id == a.id) {
        throw Error(ErrorCode::kValidation, "duplicate appliance id '" + a.id + "'");
      }
    }
    const auto n = static_cast<std::size_t>(a.num_states());
    m.strides_.push_back(count);
    m.radix_.push_back(n);
    if (count > joint_state_cap / n) {
      throw Error(ErrorCode::kCapacity,
                  "joint state count exceeds cap " +
                      std::to_string(joint_state_cap) +
                      "; exact inference would be intractable");
    }
    count *= n;
  }
  m.joint_count_ = count;
  m.appliances_ = std::move(appliances);

  for (const auto& a : m.appliances_) {
    std::vector<double> lt;
    for (const auto& row : a.transition) {
      for (double p : row) lt.push_back(std::log(p));
    }
    m.log_transition_.push_back(std::move(lt));
  }

  m.log_initial_.resize(count);
  m.joint_mean_.resize(count);
  m.joint_inv_var_.resize(count);
  m.joint_log_norm_.resize(count);
  std::vector<int> s(m.appliances_.size());
  for (std::size_t j = 0; j < count; ++j) {
    m.Unflatten(j, s);
    double li = 0.0;
    double mean = 0.0;
    double var = 0.0;
    for (std::size_t i = 0; i < m.appliances_.size(); ++i) {
      const auto& a = m.appliances_[i];
      const auto si = static_cast<std::size_t>(s[i]);
      li += std::log(a.initial[si]);
      mean += a.emission[si].mean;
      var += a.emission[si].std * a.emission[si].std;
    }
    m.log_initial_[j] = li;
    m.joint_mean_[j] = mean;
    m.joint_inv_var_[j] = 1.0 / var;
    m.joint_log_norm_[j] = -0.5 * std::log(2.0 * std::numbers::pi * var);
  }
  return m;
}

int FhmmModel::max_omega() const {
  int best = 0;
  for (const auto& a : appliances_) best = std::max(best, a.omega);
  return best;
}

std::size_t FhmmModel::IndexOf(const std::string& appliance_id) const {
  for (std::size_t i = 0; i < appliances_.size(); ++i) {
    if (appliances_[i].id == appliance_id) return i;
  }
  throw Error(ErrorCode::kValidation,
              "model has no appliance '" + appliance_id + "'");
}

std::size_t FhmmModel::Flatten(std::span<const int> states) const {
  if (states.size() != appliances_.size()) {
    throw Error(ErrorCode::kValidation, "joint state tuple has wrong arity");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] < 0 || static_cast<std::size_t>(states[i]) >= radix_[i]) {
      throw Error(ErrorCode::kValidation, "state out of range for appliance '" +
                                              appliances_[i].id + "'");
    }
    idx += static_cast<std::size_t>(states[i]) * strides_[i];
  }
  return idx;
}

void FhmmModel::Unflatten(std::size_t index, std::span<int> states) const {
  for (std::size_t i = 0; i < radix_.size(); ++i) {
    states[i] = static_cast<int>(index % radix_[i]);
    index /= radix_[i];
  }
}

std::vector<int> FhmmModel::Unflatten(std::size_t index) const {
  std::vector<int> s(appliances_.size());
  Unflatten(index, s);
  return s;
}

double FhmmModel::LogTransition(std::size_t from, std::size_t to) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < radix_.size(); ++i) {
    const std::size_t f = (from / strides_[i]) % radix_[i];
    const std::size_t t = (to / strides_[i]) % radix_[i];
    acc += log_transition_[i][f * radix_[i] + t];
  }
  return acc;
}

double FhmmModel::LogEmission(std::size_t joint, double y) const {
  const double d = y - joint_mean_[joint];
  return joint_log_norm_[joint] - 0.5 * (d * d) * joint_inv_var_[joint];
}

nlohmann::json ApplianceModelToJson(const ApplianceModel& m) {
  nlohmann::json emission = nlohmann::json::array();
  for (const auto& e : m.emission) {
    emission.push_back({{"mean", e.mean}, {"std", e.std}});
  }
  return {{"id", m.id},
          {"omega", m.omega},
          {"initial", m.initial},
          {"transition", m.transition},
          {"emission", emission},
          {"profile", m.profile}};
}

ApplianceModel ApplianceModelFromJson(const nlohmann::json& j) {
  ApplianceModel m;
  try {
    m.id = j.at("id").get<std::string>();
    m.omega = j.at("omega").get<int>();
    m.initial = j.at("initial").get<std::vector<double>>();
    m.transition = j.at("transition").get<std::vector<std::vector<double>>>();
    for (const auto& e : j.at("emission")) {
      m.emission.push_back({e.at("mean").get<double>(), e.at("std").get<double>()});
    }
    m.profile = j.at("profile").get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("appliance model: ") + e.what());
  }
  m.Validate(true);
  return m;
}

std::string FormatModelFile(const FhmmModel& model, const ModelMetadata& meta) {
  nlohmann::json apps = nlohmann::json::array();
  for (const auto& a : model.appliances()) apps.push_back(ApplianceModelToJson(a));
  const nlohmann::json j = {
      {"format", "switchdp-fhmm"},
      {"version", 1},
      {"joint_state_cap", model.joint_state_cap()},
      {"metadata",
       {{"interval", meta.interval},
        {"training_samples", meta.training_samples},
        {"max_aggregate_watts", meta.max_aggregate_watts}}},
      {"appliances", apps},
  };
  return j.dump(1) + "\n";
}

std::pair<FhmmModel, ModelMetadata> ParseModelFile(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("model file: ") + e.what());
  }
  if (j.value("format", "") != "switchdp-fhmm" || j.value("version", 0) != 1) {
    throw Error(ErrorCode::kParse, "not a switchdp-fhmm v1 model file");
  }
  ModelMetadata meta;
  std::vector<ApplianceModel> apps;
  try {
    const auto& md = j.at("metadata");
    meta.interval = md.at("interval").get<std::int64_t>();
    meta.training_samples = md.at("training_samples").get<std::size_t>();
    meta.max_aggregate_watts = md.at("max_aggregate_watts").get<double>();
    for (const auto& a : j.at("appliances")) {
      apps.push_back(ApplianceModelFromJson(a));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("model file: ") + e.what());
  }
  const auto cap = j.value("joint_state_cap", kDefaultJointStateCap);
  return {FhmmModel::Build(std::move(apps), cap), meta};
}

}  // namespace switchdp
