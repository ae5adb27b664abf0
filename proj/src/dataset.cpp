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

#include "switchdp/dataset.hpp"

#include <cmath>

#include "switchdp/error.hpp"

namespace switchdp {

const ApplianceChannel* LabeledDataset::Find(const std::string& id) const {
  for (const auto& a : appliances) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

std::vector<std::string> LabeledDataset::ApplianceIds() const {
  std::vector<std::string> ids;
  ids.reserve(appliances.size());
  for (const auto& a : appliances) ids.push_back(a.id);
  return ids;
}

bool LabeledDataset::HasTruth() const {
  if (appliances.empty()) return false;
  for (const auto& a : appliances) {
    if (!a.truth) return false;
  }
  return true;
}

std::vector<StateSequence> LabeledDataset::TruthStates() const {
  std::vector<StateSequence> out;
  for (const auto& a : appliances) {
    if (!a.truth) {
      throw Error(ErrorCode::kValidation,
                  "appliance '" + a.id + "' has no ground-truth states");
    }
    out.push_back(*a.truth);
  }
  return out;
}

void LabeledDataset::Validate(bool exact_sum) const {
  aggregate.Validate();
  for (const auto& a : appliances) {
    a.power.Validate();
    if (!a.power.AlignedWith(aggregate)) {
      throw Error(ErrorCode::kAlignment,
                  "appliance '" + a.id + "' is not aligned with the aggregate");
    }
    if (a.truth) {
      a.truth->Validate();
      if (a.truth->size() != aggregate.size()) {
        throw Error(ErrorCode::kAlignment,
                    "truth states of '" + a.id + "' have wrong length");
      }
    }
  }
  if (!exact_sum || appliances.empty()) return;
  for (std::size_t t = 0; t < aggregate.size(); ++t) {
    double sum = 0.0;
    for (const auto& a : appliances) sum += a.power.values[t];
    if (std::abs(sum - aggregate.values[t]) > 1e-6) {
      throw Error(ErrorCode::kValidation,
                  "aggregate differs from appliance sum at index " +
                      std::to_string(t));
    }
  }
}

LabeledDataset LabeledDataset::Slice(std::size_t begin, std::size_t end) const {
  LabeledDataset out;
  out.aggregate = aggregate.Slice(begin, end);
  for (const auto& a : appliances) {
    ApplianceChannel c{a.id, a.power.Slice(begin, end), std::nullopt};
    if (a.truth) c.truth = a.truth->Slice(begin, end);
    out.appliances.push_back(std::move(c));
  }
  return out;
}

std::pair<LabeledDataset, LabeledDataset> LabeledDataset::Split(
    double fraction) const {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw Error(ErrorCode::kValidation, "split fraction must be in (0, 1)");
  }
  const auto cut = static_cast<std::size_t>(
      std::floor(fraction * static_cast<double>(aggregate.size())));
  return {Slice(0, cut), Slice(cut, aggregate.size())};
}

}  // namespace switchdp
