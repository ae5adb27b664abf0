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

#ifndef SWITCHDP_FHMM_MODEL_HPP_
#define SWITCHDP_FHMM_MODEL_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "switchdp/appliance_model.hpp"

namespace switchdp {

inline constexpr std::size_t kDefaultJointStateCap = 4096;

// Factorial composition of independent appliance chains observed through
// their summed power. Joint states are flattened with appliance 0 varying
// fastest: index = sum_i s_i * stride_i, stride_0 = 1. All probabilities are
// held in natural-log space; the joint initial and transition terms are sums
// of per-appliance logs, and the joint emission at aggregate y is a Gaussian
// with mean sum_i mean_i(s_i) and variance sum_i std_i(s_i)^2.
class FhmmModel {
 public:
  // Errors: kValidation for an empty list or invalid member model, kCapacity
  // when the joint state count exceeds `joint_state_cap`.
  static FhmmModel Build(std::vector<ApplianceModel> appliances,
                         std::size_t joint_state_cap = kDefaultJointStateCap);

  const std::vector<ApplianceModel>& appliances() const { return appliances_; }
  std::size_t num_appliances() const { return appliances_.size(); }
  std::size_t num_joint_states() const { return joint_count_; }
  std::size_t joint_state_cap() const { return cap_; }
  std::span<const std::size_t> strides() const { return strides_; }
  int max_omega() const;
  std::size_t IndexOf(const std::string& appliance_id) const;

  std::size_t Flatten(std::span<const int> states) const;
  void Unflatten(std::size_t index, std::span<int> states) const;
  std::vector<int> Unflatten(std::size_t index) const;

  double LogInitial(std::size_t joint) const { return log_initial_[joint]; }
  // Sum over appliances in index order of log A_i(from_i, to_i).
  double LogTransition(std::size_t from, std::size_t to) const;
  double LogEmission(std::size_t joint, double y) const;

  std::span<const double> joint_mean() const { return joint_mean_; }
  std::span<const double> joint_inv_var() const { return joint_inv_var_; }
  std::span<const double> joint_log_norm() const { return joint_log_norm_; }
  std::span<const double> log_initial() const { return log_initial_; }

  // Row-major (omega_i + 1)^2 log transition matrix of appliance i.
  std::span<const double> log_transition(std::size_t i) const {
    return log_transition_[i];
  }

  friend bool operator==(const FhmmModel& a, const FhmmModel& b) {
    return a.appliances_ == b.appliances_ && a.cap_ == b.cap_;
  }

 private:
  std::vector<ApplianceModel> appliances_;
  std::size_t cap_ = kDefaultJointStateCap;
  std::size_t joint_count_ = 0;
  std::vector<std::size_t> strides_;
  std::vector<std::size_t> radix_;
  std::vector<double> log_initial_;
  std::vector<double> joint_mean_;
  std::vector<double> joint_inv_var_;
  std::vector<double> joint_log_norm_;
  std::vector<std::vector<double>> log_transition_;
};

inline FhmmModel BuildFhmm(std::vector<ApplianceModel> appliances,
                           std::size_t joint_state_cap = kDefaultJointStateCap) {
  return FhmmModel::Build(std::move(appliances), joint_state_cap);
}

// Provenance stored next to the model parameters.
struct ModelMetadata {
  std::int64_t interval = 60;
  std::size_t training_samples = 0;
  // Largest aggregate reading seen in training; default baseline sensitivity.
  double max_aggregate_watts = 0.0;

  friend bool operator==(const ModelMetadata&, const ModelMetadata&) = default;
};

// Model file: pretty-printed JSON,
//   { "format": "switchdp-fhmm", "version": 1, "joint_state_cap": 4096,
//     "metadata": { "interval", "training_samples", "max_aggregate_watts" },
//     "appliances": [ { "id", "omega", "initial": [..], "transition": [[..]],
//                       "emission": [ {"mean", "std"} ], "profile": [[..]] } ] }
std::string FormatModelFile(const FhmmModel& model, const ModelMetadata& meta);
std::pair<FhmmModel, ModelMetadata> ParseModelFile(const std::string& text);

nlohmann::json ApplianceModelToJson(const ApplianceModel& m);
ApplianceModel ApplianceModelFromJson(const nlohmann::json& j);

}  // namespace switchdp

#endif  // SWITCHDP_FHMM_MODEL_HPP_
