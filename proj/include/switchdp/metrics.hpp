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

// Privacy and utility metrics.

#ifndef SWITCHDP_METRICS_HPP_
#define SWITCHDP_METRICS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "switchdp/series.hpp"

namespace switchdp {

struct ClassificationScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
};

// Precision, recall and F1 from confusion counts; 0 for zero denominators.
ClassificationScores ScoresFromCounts(std::size_t tp, std::size_t fp,
                                      std::size_t fn);

// ON/OFF detection scores: a slot is ON when its state is > 0.
ClassificationScores OnOffScores(std::span<const int> truth,
                                 std::span<const int> predicted);

struct F1Report {
  std::vector<std::pair<std::string, ClassificationScores>> per_appliance;
  // Unweighted means of the per-appliance precision, recall and F1.
  ClassificationScores macro;
};

// Pairs sequences by position. Errors: kAlignment for differing counts,
// appliance ids or lengths.
F1Report F1Score(const std::vector<StateSequence>& truth,
                 const std::vector<StateSequence>& predicted);

// Fraction of slots whose exact state matches, per appliance.
std::vector<double> StateMatchRates(const std::vector<StateSequence>& truth,
                                    const std::vector<StateSequence>& predicted);

inline constexpr int kDefaultBins = 50;

// Counts of `values` in `bins` equal-width buckets over [lo, hi]; the top
// edge belongs to the last bucket. hi must exceed lo.
std::vector<std::size_t> BinCounts(std::span<const double> values, double lo,
                                   double hi, int bins);

// sum_i P(i) ln(P(i) / Q(i)) over buckets with P(i) > 0, with Q built from
// q_counts plus `q_pseudo_count` in every bucket.
double KlFromCounts(std::span<const std::size_t> p_counts,
                    std::span<const std::size_t> q_counts,
                    double q_pseudo_count);

struct KlOptions {
  int bins = kDefaultBins;
  double q_pseudo_count = 1.0;
};

// D(P || Q) in nats between the value distributions of the original (P) and
// obfuscated (Q) series, histogrammed on their joint range. Returns exactly
// 0 when the joint range is empty or both histograms are identical.
// Errors: kValidation for empty input or bins < 2.
double KlDivergence(const PowerSeries& p_series, const PowerSeries& q_series,
                    const KlOptions& options = {});

// Shannon entropy (nats) of the series' values binned on its own range;
// 0 for a constant series. Errors: kValidation for empty input or bins < 2.
double Entropy(const PowerSeries& series, int bins = kDefaultBins);

// |sum(obfuscated) - sum(original)| / max(sum(original), 1e-9).
// Errors: kAlignment for different lengths.
double BillingError(const PowerSeries& original, const PowerSeries& obfuscated);

// Number of strictly negative readings.
std::size_t OutlierCount(const PowerSeries& series);

}  // namespace switchdp

#endif  // SWITCHDP_METRICS_HPP_
