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

// Privacy-utility experiments over (mechanism, epsilon, seed) cells.

#ifndef SWITCHDP_SWEEP_HPP_
#define SWITCHDP_SWEEP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "switchdp/dataset.hpp"
#include "switchdp/fhmm_model.hpp"
#include "switchdp/mechanism.hpp"
#include "switchdp/metrics.hpp"

namespace switchdp {

struct EvaluationReport {
  Mechanism mechanism = Mechanism::kIdentity;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  F1Report f1;
  std::vector<double> state_match;  // per appliance
  double kl_divergence = 0.0;
  double entropy_original = 0.0;
  double entropy_obfuscated = 0.0;
  double billing_relative_error = 0.0;
  std::size_t negative_value_count = 0;
};

struct SweepConfig {
  std::vector<Mechanism> mechanisms;
  std::vector<double> epsilons{0.1, 1.0, 5.0, 10.0};
  std::vector<std::uint64_t> seeds;
  SensitivityMode sensitivity = SensitivityMode::kGlobal;
  double beta = kDefaultSmoothBeta;
  double baseline_delta_f = 0.0;
  std::optional<double> resynth_sigma;
  int kl_bins = kDefaultBins;
  int entropy_bins = kDefaultBins;
  unsigned jobs = 1;
};

// Seed of one cell, independent of which other cells exist.
std::uint64_t CellSeed(Mechanism mechanism, double epsilon, std::uint64_t seed);

// Ground truth for scoring: the dataset's generating states when present,
// otherwise each sub-metered channel quantized with the model's omega.
std::vector<StateSequence> GroundTruth(const LabeledDataset& data,
                                       const FhmmModel& model);

// Obfuscates the meter, attacks the result with exact MAP decoding and
// scores the attack and the utility loss against the original.
EvaluationReport EvaluateCell(const LabeledDataset& data,
                              const std::vector<StateSequence>& truth,
                              const FhmmModel& model, const ModelMetadata& meta,
                              Mechanism mechanism, double epsilon,
                              std::uint64_t seed, const SweepConfig& config);

// All cells, ordered by (mechanism, epsilon, seed) as listed in the config
// regardless of `jobs`. A failing cell aborts the sweep with an error naming
// the cell.
std::vector<EvaluationReport> RunSweep(const LabeledDataset& data,
                                       const FhmmModel& model,
                                       const ModelMetadata& meta,
                                       const SweepConfig& config);

// Columns: mechanism,epsilon,seed,appliance,precision,recall,f1,state_match,
// kl,entropy_orig,entropy_obf,billing_err,neg_count. One row per appliance
// plus a `macro` row per cell.
std::string FormatReportCsv(const std::vector<EvaluationReport>& reports);

struct MetricSummary {
  double mean = 0.0;
  double ci_low = 0.0;   // mean -/+ 1.96 standard errors
  double ci_high = 0.0;
  std::size_t n = 0;
};

MetricSummary Summarize(const std::vector<double>& values);

// Extracts one metric of the matching cells: "f1", "precision", "recall",
// "state_match", "kl", "entropy_orig", "entropy_obf", "billing_err",
// "neg_count".
std::vector<double> MetricValues(const std::vector<EvaluationReport>& reports,
                                 Mechanism mechanism, double epsilon,
                                 const std::string& metric);

// Columns: metric,mechanism,epsilon,mean,ci_low,ci_high,n. One series per
// mechanism with epsilon on the x axis.
std::string FormatPlotData(const std::vector<EvaluationReport>& reports);

enum class Verdict { kPass, kFail, kInconclusive };

std::string_view VerdictName(Verdict v);

// Checks mean(a) <= mean(b). Holds -> pass; violated with disjoint 95%
// intervals -> fail; violated with overlapping intervals -> inconclusive.
Verdict CompareAtMost(const MetricSummary& a, const MetricSummary& b);

}  // namespace switchdp

#endif  // SWITCHDP_SWEEP_HPP_
