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

#include "switchdp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "switchdp/appliance_model.hpp"
#include "switchdp/error.hpp"
#include "switchdp/inference.hpp"
#include "switchdp/text_format.hpp"

namespace switchdp {

std::uint64_t CellSeed(Mechanism mechanism, double epsilon, std::uint64_t seed) {
  return DeriveSeed(seed, "cell/" + std::string(MechanismName(mechanism)) + "/" +
                              FormatDouble(epsilon));
}

std::vector<StateSequence> GroundTruth(const LabeledDataset& data,
                                       const FhmmModel& model) {
  std::vector<StateSequence> out;
  for (const auto& a : model.appliances()) {
    const ApplianceChannel* ch = data.Find(a.id);
    if (ch == nullptr) {
      throw Error(ErrorCode::kValidation,
                  "dataset has no channel for appliance '" + a.id + "'");
    }
    if (ch->truth) {
      out.push_back(*ch->truth);
    } else {
      out.push_back(QuantizeStates(ch->power, a.omega, a.id).states);
    }
  }
  return out;
}

EvaluationReport EvaluateCell(const LabeledDataset& data,
                              const std::vector<StateSequence>& truth,
                              const FhmmModel& model, const ModelMetadata& meta,
                              Mechanism mechanism, double epsilon,
                              std::uint64_t seed, const SweepConfig& config) {
  MechanismConfig mc;
  mc.privacy.epsilon = epsilon;
  mc.privacy.sensitivity = config.sensitivity;
  mc.privacy.beta = config.beta;
  mc.privacy.seed = CellSeed(mechanism, epsilon, seed);
  mc.baseline_delta_f = config.baseline_delta_f;
  mc.resynth_sigma = config.resynth_sigma;

  const ObfuscationResult obf = Obfuscate(mechanism, model, meta, data, mc);
  const MapResult attack = ViterbiMap(model, obf.aggregate);

  EvaluationReport r;
  r.mechanism = mechanism;
  r.epsilon = epsilon;
  r.seed = seed;
  r.f1 = F1Score(truth, attack.states);
  r.state_match = StateMatchRates(truth, attack.states);
  r.kl_divergence = KlDivergence(data.aggregate, obf.aggregate,
                                 KlOptions{config.kl_bins, 1.0});
  r.entropy_original = Entropy(data.aggregate, config.entropy_bins);
  r.entropy_obfuscated = Entropy(obf.aggregate, config.entropy_bins);
  r.billing_relative_error = BillingError(data.aggregate, obf.aggregate);
  r.negative_value_count = OutlierCount(obf.aggregate);
  return r;
}

std::vector<EvaluationReport> RunSweep(const LabeledDataset& data,
                                       const FhmmModel& model,
                                       const ModelMetadata& meta,
                                       const SweepConfig& config) {
  if (config.mechanisms.empty()) {
    throw Error(ErrorCode::kValidation, "sweep needs at least one mechanism");
  }
  struct Cell {
    Mechanism mechanism;
    double epsilon;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (Mechanism m : config.mechanisms) {
    for (double e : config.epsilons) {
      for (std::uint64_t s : config.seeds) cells.push_back({m, e, s});
    }
  }
  const std::vector<StateSequence> truth = GroundTruth(data, model);

  std::vector<EvaluationReport> reports(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        reports[i] = EvaluateCell(data, truth, model, meta, cells[i].mechanism,
                                  cells[i].epsilon, cells[i].seed, config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(
                                         config.jobs, static_cast<unsigned>(cells.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!errors[i]) continue;
    const std::string id = std::string(MechanismName(cells[i].mechanism)) +
                           " epsilon=" + FormatDouble(cells[i].epsilon) +
                           " seed=" + std::to_string(cells[i].seed);
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error& e) {
      throw Error(e.code(), "sweep cell [" + id + "]: " + e.what());
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kValidation, "sweep cell [" + id + "]: " + e.what());
    }
  }
  return reports;
}

std::string FormatReportCsv(const std::vector<EvaluationReport>& reports) {
  std::string out =
      "mechanism,epsilon,seed,appliance,precision,recall,f1,state_match,kl,"
      "entropy_orig,entropy_obf,billing_err,neg_count\n";
  for (const auto& r : reports) {
    const std::string prefix = std::string(MechanismName(r.mechanism)) + "," +
                               FormatDouble(r.epsilon) + "," +
                               std::to_string(r.seed) + ",";
    const std::string suffix =
        FormatDouble(r.kl_divergence) + "," + FormatDouble(r.entropy_original) +
        "," + FormatDouble(r.entropy_obfuscated) + "," +
        FormatDouble(r.billing_relative_error) + "," +
        std::to_string(r.negative_value_count) + "\n";
    double match_sum = 0.0;
    for (std::size_t i = 0; i < r.f1.per_appliance.size(); ++i) {
      const auto& [id, s] = r.f1.per_appliance[i];
      out += prefix + id + "," + FormatDouble(s.precision) + "," +
             FormatDouble(s.recall) + "," + FormatDouble(s.f1) + "," +
             FormatDouble(r.state_match[i]) + "," + suffix;
      match_sum += r.state_match[i];
    }
    const double macro_match =
        r.state_match.empty() ? 0.0 : match_sum / static_cast<double>(r.state_match.size());
    out += prefix + "macro," + FormatDouble(r.f1.macro.precision) + "," +
           FormatDouble(r.f1.macro.recall) + "," + FormatDouble(r.f1.macro.f1) +
           "," + FormatDouble(macro_match) + "," + suffix;
  }
  return out;
}

MetricSummary Summarize(const std::vector<double>& values) {
  MetricSummary s;
  s.n = values.size();
  if (values.empty()) return s;
  const auto n = static_cast<double>(values.size());
  for (double v : values) s.mean += v;
  s.mean /= n;
  double half = 0.0;
  if (values.size() >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    half = 1.96 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  s.ci_low = s.mean - half;
  s.ci_high = s.mean + half;
  return s;
}

std::vector<double> MetricValues(const std::vector<EvaluationReport>& reports,
                                 Mechanism mechanism, double epsilon,
                                 const std::string& metric) {
  std::vector<double> out;
  for (const auto& r : reports) {
    if (r.mechanism != mechanism || r.epsilon != epsilon) continue;
    double v = 0.0;
    if (metric == "f1") {
      v = r.f1.macro.f1;
    } else if (metric == "precision") {
      v = r.f1.macro.precision;
    } else if (metric == "recall") {
      v = r.f1.macro.recall;
    } else if (metric == "state_match") {
      for (double m : r.state_match) v += m;
      if (!r.state_match.empty()) v /= static_cast<double>(r.state_match.size());
    } else if (metric == "kl") {
      v = r.kl_divergence;
    } else if (metric == "entropy_orig") {
      v = r.entropy_original;
    } else if (metric == "entropy_obf") {
      v = r.entropy_obfuscated;
    } else if (metric == "billing_err") {
      v = r.billing_relative_error;
    } else if (metric == "neg_count") {
      v = static_cast<double>(r.negative_value_count);
    } else {
      throw Error(ErrorCode::kValidation, "unknown metric '" + metric + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::string FormatPlotData(const std::vector<EvaluationReport>& reports) {
  std::vector<Mechanism> mechs;
  std::vector<double> eps;
  for (const auto& r : reports) {
    if (std::find(mechs.begin(), mechs.end(), r.mechanism) == mechs.end()) {
      mechs.push_back(r.mechanism);
    }
    if (std::find(eps.begin(), eps.end(), r.epsilon) == eps.end()) {
      eps.push_back(r.epsilon);
    }
  }
  std::string out = "metric,mechanism,epsilon,mean,ci_low,ci_high,n\n";
  for (const char* metric : {"f1", "kl", "billing_err", "entropy_obf", "neg_count"}) {
    for (Mechanism m : mechs) {
      for (double e : eps) {
        const MetricSummary s = Summarize(MetricValues(reports, m, e, metric));
        if (s.n == 0) continue;
        out += std::string(metric) + "," + std::string(MechanismName(m)) + "," +
               FormatDouble(e) + "," + FormatDouble(s.mean) + "," +
               FormatDouble(s.ci_low) + "," + FormatDouble(s.ci_high) + "," +
               std::to_string(s.n) + "\n";
      }
    }
  }
  return out;
}

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "fail";
}

Verdict CompareAtMost(const MetricSummary& a, const MetricSummary& b) {
  if (a.mean <= b.mean) return Verdict::kPass;
  const bool overlap = a.ci_low <= b.ci_high && b.ci_low <= a.ci_high;
  return overlap ? Verdict::kInconclusive : Verdict::kFail;
}

}  // namespace switchdp
