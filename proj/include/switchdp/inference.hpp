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

// Exact MAP decoding of every appliance's switch states from the aggregate
// signal. This is both the honest disaggregation step and the NILM attack.

#ifndef SWITCHDP_INFERENCE_HPP_
#define SWITCHDP_INFERENCE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "switchdp/csv_io.hpp"
#include "switchdp/fhmm_model.hpp"
#include "switchdp/kernels/kernels.hpp"
#include "switchdp/series.hpp"

namespace switchdp {

struct MapResult {
  std::vector<StateSequence> states;  // one per appliance, model order
  std::vector<std::size_t> joint_path;
  // Joint log probability log P(y, x) of the path. Finite for every input:
  // smoothing keeps all transition and initial probabilities positive and the
  // emission is a Gaussian log density, so no log(0) or overflow can occur.
  double log_score = 0.0;
};

// Log-space Viterbi over the flattened joint state space. The maximisation
// over the previous joint state is carried out one appliance at a time (the
// joint transition is a product), giving O(T * K * sum_i (omega_i + 1)) work.
//
// Ties: among equally scoring paths the one with the lowest joint index at
// the last step wins, then the lowest at the step before, and so on.
// An empty series yields empty sequences.
MapResult ViterbiMap(const FhmmModel& model, const PowerSeries& y_sum,
                     const kernels::KernelTable& k = kernels::ActiveKernels());

// Exhaustive search over all K^T joint paths with the same scoring order and
// tie rule as ViterbiMap. Testing oracle only.
// Errors: kCapacity when K^T exceeds `max_paths`.
MapResult BruteForceMap(const FhmmModel& model, const PowerSeries& y_sum,
                        std::uint64_t max_paths = 50'000'000);

// log P(y, x) of an arbitrary joint path, accumulated term by term in time
// order (initial, emission, then per step each appliance's transition and
// the emission).
double PathLogScore(const FhmmModel& model, const PowerSeries& y_sum,
                    std::span<const std::size_t> joint_path);

// Per appliance, the emission mean of the decoded state at every step.
// Errors: kValidation for unknown appliances, unequal lengths or states out
// of range.
NamedSeries StatesToPower(const FhmmModel& model,
                          const std::vector<StateSequence>& states,
                          std::int64_t start_time = 0,
                          std::int64_t interval = 60);

}  // namespace switchdp

#endif  // SWITCHDP_INFERENCE_HPP_
