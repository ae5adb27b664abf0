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

#ifndef SWITCHDP_DATASET_HPP_
#define SWITCHDP_DATASET_HPP_

#include <optional>
#include <string>
#include <vector>

#include "switchdp/series.hpp"

namespace switchdp {

struct ApplianceChannel {
  std::string id;
  PowerSeries power;
  std::optional<StateSequence> truth;

  friend bool operator==(const ApplianceChannel&,
                         const ApplianceChannel&) = default;
};

// One meter: the aggregate signal plus sub-metered appliance channels and,
// for synthetic data, the generating switch states.
struct LabeledDataset {
  PowerSeries aggregate;
  std::vector<ApplianceChannel> appliances;

  const ApplianceChannel* Find(const std::string& id) const;
  std::vector<std::string> ApplianceIds() const;
  bool HasTruth() const;
  std::vector<StateSequence> TruthStates() const;

  // All channels share the aggregate's grid. With `exact_sum`, the aggregate
  // must equal the per-appliance sum within 1e-6 W at every index.
  void Validate(bool exact_sum) const;

  LabeledDataset Slice(std::size_t begin, std::size_t end) const;

  // Chronological split at floor(fraction * length).
  std::pair<LabeledDataset, LabeledDataset> Split(double fraction) const;

  friend bool operator==(const LabeledDataset&,
                         const LabeledDataset&) = default;
};

}  // namespace switchdp

#endif  // SWITCHDP_DATASET_HPP_
