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

#include "switchdp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "switchdp/error.hpp"
#include "switchdp/kernels/kernels.hpp"

namespace switchdp {
namespace {

void CheckHistogramInput(std::size_t n, int bins) {
  if (n == 0) throw Error(ErrorCode::kValidation, "histogram of an empty series");
  if (bins < 2) throw Error(ErrorCode::kValidation, "need at least two bins");
}

}  // namespace

ClassificationScores ScoresFromCounts(std::size_t tp, std::size_t fp,
                                      std::size_t fn) {
  ClassificationScores s;
  s.tp = tp;
  s.fp = fp;
  s.fn = fn;
  const auto dtp = static_cast<double>(tp);
  s.precision = tp + fp > 0 ? dtp / static_cast<double>(tp + fp) : 0.0;
  s.recall = tp + fn > 0 ? dtp / static_cast<double>(tp + fn) : 0.0;
  const double pr = s.precision + s.recall;
  s.f1 = pr > 0.0 ? 2.0 * s.precision * s.recall / pr : 0.0;
  return s;
}

ClassificationScores OnOffScores(std::span<const int> truth,
                                 std::span<const int> predicted) {
  if (truth.size() != predicted.size()) {
    throw Error(ErrorCode::kAlignment, "truth and prediction lengths differ");
  }
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t t = 0; t < truth.size(); ++t) {
    const bool on = truth[t] > 0;
    const bool pred_on = predicted[t] > 0;
    tp += on && pred_on;
    fp += !on && pred_on;
    fn += on && !pred_on;
  }
  return ScoresFromCounts(tp, fp, fn);
}

F1Report F1Score(const std::vector<StateSequence>& truth,
                 const std::vector<StateSequence>& predicted) {
  if (truth.size() != predicted.size()) {
    throw Error(ErrorCode::kAlignment, "appliance counts differ");
  }
  F1Report r;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i].appliance_id != predicted[i].appliance_id) {
      throw Error(ErrorCode::kAlignment,
                  "appliance '" + truth[i].appliance_id + "' paired with '" +
                      predicted[i].appliance_id + "'");
    }
    r.per_appliance.emplace_back(truth[i].appliance_id,
                                 OnOffScores(truth[i].states, predicted[i].states));
  }
  if (!r.per_appliance.empty()) {
    const auto n = static_cast<double>(r.per_appliance.size());
    for (const auto& [id, s] : r.per_appliance) {
      r.macro.precision += s.precision;
      r.macro.recall += s.recall;
      r.macro.f1 += s.f1;
      r.macro.tp += s.tp;
      r.macro.fp += s.fp;
      r.macro.fn += s.fn;
    }
    r.macro.precision /= n;
    r.macro.recall /= n;
    r.macro.f1 /= n;
  }
  return r;
}

std::vector<double> StateMatchRates(const std::vector<StateSequence>& truth,
                                    const std::vector<StateSequence>& predicted) {
  if (truth.size() != predicted.size()) {
    throw Error(ErrorCode::kAlignment, "appliance counts differ");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const auto& a = truth[i].states;
    const auto& b = predicted[i].states;
    if (a.size() != b.size()) {
      throw Error(ErrorCode::kAlignment, "truth and prediction lengths differ");
    }
    std::size_t hit = 0;
    for (std::size_t t = 0; t < a.size(); ++t) hit += a[t] == b[t];
    out.push_back(a.empty() ? 0.0
                            : static_cast<double>(hit) / static_cast<double>(a.size()));
  }
  return out;
}

std::vector<std::size_t> BinCounts(std::span<const double> values, double lo,
                                   double hi, int bins) {
  CheckHistogramInput(values.size(), bins);
  if (!(hi > lo)) throw Error(ErrorCode::kValidation, "empty histogram range");
  const double inv_width = static_cast<double>(bins) / (hi - lo);
  std::vector<std::int32_t> idx(values.size());
  kernels::BucketIndex(kernels::ActiveKernels(), values, lo, inv_width, bins, idx);
  std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
  for (std::int32_t b : idx) ++counts[static_cast<std::size_t>(b)];
  return counts;
}

double KlFromCounts(std::span<const std::size_t> p_counts,
                    std::span<const std::size_t> q_counts,
                    double q_pseudo_count) {
  if (p_counts.size() != q_counts.size()) {
    throw Error(ErrorCode::kValidation, "histograms differ in bucket count");
  }
  const double p_total =
      static_cast<double>(std::accumulate(p_counts.begin(), p_counts.end(), std::size_t{0}));
  const double q_total =
      static_cast<double>(std::accumulate(q_counts.begin(), q_counts.end(), std::size_t{0})) +
      q_pseudo_count * static_cast<double>(q_counts.size());
  if (!(p_total > 0.0) || !(q_total > 0.0)) {
    throw Error(ErrorCode::kValidation, "empty histogram");
  }
  double kl = 0.0;
  for (std::size_t i = 0; i < p_counts.size(); ++i) {
    if (p_counts[i] == 0) continue;
    const double p = static_cast<double>(p_counts[i]) / p_total;
    const double q = (static_cast<double>(q_counts[i]) + q_pseudo_count) / q_total;
    if (!(q > 0.0)) {
      throw Error(ErrorCode::kValidation,
                  "Q has zero mass where P does not; use a pseudo-count");
    }
    kl += p * std::log(p / q);
  }
  return std::max(kl, 0.0);
}

double KlDivergence(const PowerSeries& p_series, const PowerSeries& q_series,
                    const KlOptions& options) {
  CheckHistogramInput(p_series.size(), options.bins);
  CheckHistogramInput(q_series.size(), options.bins);
  const auto [p_lo, p_hi] = std::minmax_element(p_series.values.begin(), p_series.values.end());
  const auto [q_lo, q_hi] = std::minmax_element(q_series.values.begin(), q_series.values.end());
  const double lo = std::min(*p_lo, *q_lo);
  const double hi = std::max(*p_hi, *q_hi);
  if (!(hi > lo)) return 0.0;
  const auto p = BinCounts(p_series.values, lo, hi, options.bins);
  const auto q = BinCounts(q_series.values, lo, hi, options.bins);
  if (p == q) return 0.0;
  return KlFromCounts(p, q, options.q_pseudo_count);
}

double Entropy(const PowerSeries& series, int bins) {
  CheckHistogramInput(series.size(), bins);
  const auto [lo, hi] = std::minmax_element(series.values.begin(), series.values.end());
  if (!(*hi > *lo)) return 0.0;
  const auto counts = BinCounts(series.values, *lo, *hi, bins);
  const auto n = static_cast<double>(series.size());
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log(p);
  }
  return h;
}

double BillingError(const PowerSeries& original, const PowerSeries& obfuscated) {
  if (original.size() != obfuscated.size()) {
    throw Error(ErrorCode::kAlignment, "billing series lengths differ");
  }
  const double a = std::accumulate(original.values.begin(), original.values.end(), 0.0);
  const double b =
      std::accumulate(obfuscated.values.begin(), obfuscated.values.end(), 0.0);
  return std::abs(b - a) / std::max(a, 1e-9);
}

std::size_t OutlierCount(const PowerSeries& series) {
  return static_cast<std::size_t>(std::count_if(
      series.values.begin(), series.values.end(), [](double v) { return v < 0.0; }));
}

}  // namespace switchdp
