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

// Per-appliance hidden Markov models trained from sub-metered power: states
// are found by thresholding OFF and 1-D k-means on the rest, then initial,
// transition and Gaussian emission parameters are estimated by smoothed
// counting (maximum likelihood on labelled sequences, no EM).

#ifndef SWITCHDP_APPLIANCE_MODEL_HPP_
#define SWITCHDP_APPLIANCE_MODEL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "switchdp/series.hpp"

namespace switchdp {

struct StateEmission {
  double mean = 0.0;  // watts
  double std = 1.0;   // watts

  friend bool operator==(const StateEmission&, const StateEmission&) = default;
};

struct ApplianceModel {
  std::string id;
  int omega = 1;
  std::vector<double> initial;                  // omega + 1
  std::vector<std::vector<double>> transition;  // (omega + 1)^2, row = from
  std::vector<StateEmission> emission;          // omega + 1
  // Consumption profile: observed watts per state, used for re-aggregation.
  std::vector<std::vector<double>> profile;

  int num_states() const noexcept { return omega + 1; }

  // Shapes, stochastic rows (1e-9), positive stds. Profiles are checked only
  // when `require_profile` is set.
  void Validate(bool require_profile = true) const;

  friend bool operator==(const ApplianceModel&, const ApplianceModel&) = default;
};

struct QuantizeOptions {
  double off_threshold = 5.0;
  int kmeans_iterations = 50;
  std::uint64_t seed = 0;
};

struct StateStats {
  double mean = 0.0;
  double std = 0.0;  // sample std, 0 for fewer than two samples
  std::vector<double> samples;
};

struct Quantization {
  StateSequence states;
  std::vector<StateStats> stats;  // omega + 1 entries
};

// Labels values <= off_threshold as OFF and clusters the rest into `omega`
// groups, relabelled 1..omega by ascending centroid. The result depends only
// on the multiset of values and the seed.
//
// Errors: kDegenerateCluster when fewer than `omega` distinct values exceed
// the threshold; kValidation for negative input or omega < 1.
Quantization QuantizeStates(const PowerSeries& series, int omega,
                            const std::string& appliance_id = "",
                            const QuantizeOptions& options = {});

struct EstimateOptions {
  double smoothing = 1.0;  // additive pseudo-count on pi and A
  double std_floor = 1.0;  // watts
};

// Smoothed state occupancy. One training sequence has a single start state,
// so the occupancy frequencies stand in for the start distribution.
std::vector<double> EstimateInitial(const StateSequence& states,
                                    double smoothing);
std::vector<std::vector<double>> EstimateTransitions(const StateSequence& states,
                                                     double smoothing);

// Errors: kValidation for mismatched lengths or fewer than two samples;
// kTraining naming the state when some state never occurs (its profile would
// be empty).
ApplianceModel EstimateHmmParams(const StateSequence& states,
                                 const PowerSeries& series,
                                 const EstimateOptions& options = {});

// Quantize then estimate.
ApplianceModel TrainAppliance(const std::string& id, const PowerSeries& series,
                              int omega, const QuantizeOptions& quantize = {},
                              const EstimateOptions& estimate = {});

}  // namespace switchdp

#endif  // SWITCHDP_APPLIANCE_MODEL_HPP_
