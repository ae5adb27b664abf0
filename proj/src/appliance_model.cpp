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

#include "switchdp/appliance_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stochastic.hpp"
#include "switchdp/error.hpp"
#include "switchdp/rng.hpp"

namespace switchdp {
namespace {

std::size_t NearestCenter(double v, const std::vector<double>& centers) {
  std::size_t best = 0;
  double best_d = std::abs(v - centers[0]);
  for (std::size_t c = 1; c < centers.size(); ++c) {
    const double d = std::abs(v - centers[c]);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

// k-means++ seeding on sorted values with at least k distinct entries.
std::vector<double> SeedCenters(const std::vector<double>& v, std::size_t k,
                                Rng& rng) {
  std::vector<double> centers{v[UniformIndex(rng, v.size())]};
  std::vector<double> d2(v.size());
  while (centers.size() < k) {
    double total = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double d = v[i] - centers[NearestCenter(v[i], centers)];
      d2[i] = d * d;
      total += d2[i];
    }
    const double target = UniformOpen01(rng) * total;
    double acc = 0.0;
    std::size_t pick = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
      acc += d2[i];
      if (d2[i] > 0.0 && acc >= target) {
        pick = i;
        break;
      }
    }
    if (pick == v.size()) {
      // Rounding: fall back to the last point not yet a center.
      for (std::size_t i = v.size(); i-- > 0;) {
        if (d2[i] > 0.0) {
          pick = i;
          break;
        }
      }
    }
    centers.push_back(v[pick]);
  }
  return centers;
}

std::vector<double> KMeans1d(const std::vector<double>& sorted, std::size_t k,
                             int iterations, Rng& rng) {
  std::vector<double> centers = SeedCenters(sorted, k, rng);
  std::vector<std::size_t> assign(sorted.size(), k);
  for (int it = 0; it < iterations; ++it) {
    bool changed = false;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const std::size_t c = NearestCenter(sorted[i], centers);
      changed |= c != assign[i];
      assign[i] = c;
    }
    std::vector<double> sum(k, 0.0);
    std::vector<std::size_t> count(k, 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      sum[assign[i]] += sorted[i];
      ++count[assign[i]];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (count[c] > 0) {
        centers[c] = sum[c] / static_cast<double>(count[c]);
        continue;
      }
      // Empty cluster: move it to the point worst served by its center.
      std::size_t far = 0;
      double far_d = -1.0;
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double d = std::abs(sorted[i] - centers[assign[i]]);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      centers[c] = sorted[far];
      changed = true;
    }
    if (!changed) break;
  }
  return centers;
}

StateStats Summarize(std::vector<double> samples) {
  StateStats s;
  const auto n = static_cast<double>(samples.size());
  if (!samples.empty()) {
    s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  }
  if (samples.size() >= 2) {
    double ss = 0.0;
    for (double v : samples) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / (n - 1.0));
  }
  s.samples = std::move(samples);
  return s;
}

}  // namespace

void ApplianceModel::Validate(bool require_profile) const {
  const std::string who = "appliance model '" + id + "'";
  if (omega < 1) throw Error(ErrorCode::kValidation, who + " needs omega >= 1");
  const auto n = static_cast<std::size_t>(num_states());
  internal::CheckDistribution(initial, n, who + " initial distribution");
  if (transition.size() != n) {
    throw Error(ErrorCode::kValidation, who + " transition has wrong shape");
  }
  for (std::size_t r = 0; r < n; ++r) {
    internal::CheckDistribution(transition[r], n,
                                who + " transition row " + std::to_string(r));
  }
  if (emission.size() != n) {
    throw Error(ErrorCode::kValidation, who + " emission has wrong shape");
  }
  for (const auto& e : emission) {
    if (!(e.std > 0.0) || !std::isfinite(e.mean)) {
      throw Error(ErrorCode::kValidation, who + " has a degenerate emission");
    }
  }
  if (!require_profile) return;
  if (profile.size() != n) {
    throw Error(ErrorCode::kValidation, who + " profile has wrong shape");
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (profile[s].empty()) {
      throw Error(ErrorCode::kTraining,
                  who + " has an empty consumption profile for state " +
                      std::to_string(s));
    }
  }
}

Quantization QuantizeStates(const PowerSeries& series, int omega,
                            const std::string& appliance_id,
                            const QuantizeOptions& options) {
  if (omega < 1) {
    throw Error(ErrorCode::kValidation, "quantize needs omega >= 1");
  }
  PowerSeries checked = series;
  checked.measured = true;
  checked.Validate();

  Quantization q;
  q.states = StateSequence{appliance_id, omega, {}};
  q.stats.resize(static_cast<std::size_t>(omega) + 1);
  if (series.empty()) return q;

  std::vector<double> on;
  for (double v : series.values) {
    if (v > options.off_threshold) on.push_back(v);
  }
  std::sort(on.begin(), on.end());
  std::vector<double> uniq = on;
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  if (uniq.size() < static_cast<std::size_t>(omega)) {
    throw Error(ErrorCode::kDegenerateCluster,
                "appliance '" + appliance_id + "': " +
                    std::to_string(uniq.size()) +
                    " distinct values above the OFF threshold cannot form " +
                    std::to_string(omega) + " ON states");
  }

  Rng rng(options.seed);
  std::vector<double> centers =
      KMeans1d(on, static_cast<std::size_t>(omega), options.kmeans_iterations,
               rng);

  // Relabel by ascending centroid, ties by cluster index.
  std::vector<std::size_t> order(centers.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return centers[a] < centers[b];
  });
  std::vector<int> label_of(centers.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    label_of[order[rank]] = static_cast<int>(rank) + 1;
  }

  std::vector<std::vector<double>> samples(q.stats.size());
  q.states.states.reserve(series.size());
  for (double v : series.values) {
    const int s =
        v > options.off_threshold ? label_of[NearestCenter(v, centers)] : 0;
    q.states.states.push_back(s);
    samples[static_cast<std::size_t>(s)].push_back(v);
  }
  for (std::size_t s = 0; s < samples.size(); ++s) {
    q.stats[s] = Summarize(std::move(samples[s]));
  }
  return q;
}

std::vector<double> EstimateInitial(const StateSequence& states,
                                    double smoothing) {
  const auto n = static_cast<std::size_t>(states.omega) + 1;
  std::vector<double> counts(n, smoothing);
  for (int s : states.states) counts[static_cast<std::size_t>(s)] += 1.0;
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  for (double& c : counts) c /= total;
  return counts;
}

std::vector<std::vector<double>> EstimateTransitions(const StateSequence& states,
                                                     double smoothing) {
  const auto n = static_cast<std::size_t>(states.omega) + 1;
  std::vector<std::vector<double>> a(n, std::vector<double>(n, smoothing));
  for (std::size_t t = 1; t < states.states.size(); ++t) {
    a[static_cast<std::size_t>(states.states[t - 1])]
     [static_cast<std::size_t>(states.states[t])] += 1.0;
  }
  for (auto& row : a) {
    const double total = std::accumulate(row.begin(), row.end(), 0.0);
    for (double& v : row) v /= total;
  }
  return a;
}

ApplianceModel EstimateHmmParams(const StateSequence& states,
                                 const PowerSeries& series,
                                 const EstimateOptions& options) {
  states.Validate();
  if (states.size() != series.size()) {
    throw Error(ErrorCode::kValidation,
                "appliance '" + states.appliance_id +
                    "': states and series lengths differ");
  }
  if (states.size() < 2) {
    throw Error(ErrorCode::kValidation,
                "appliance '" + states.appliance_id +
                    "': need at least two samples to estimate transitions");
  }
  if (!(options.smoothing > 0.0)) {
    throw Error(ErrorCode::kValidation, "smoothing must be positive");
  }

  ApplianceModel m;
  m.id = states.appliance_id;
  m.omega = states.omega;
  m.initial = EstimateInitial(states, options.smoothing);
  m.transition = EstimateTransitions(states, options.smoothing);

  const auto n = static_cast<std::size_t>(m.num_states());
  m.profile.assign(n, {});
  for (std::size_t t = 0; t < states.size(); ++t) {
    m.profile[static_cast<std::size_t>(states.states[t])].push_back(
        series.values[t]);
  }
  m.emission.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (m.profile[s].empty()) {
      throw Error(ErrorCode::kTraining,
                  "appliance '" + m.id + "': state " + std::to_string(s) +
                      " never observed in training data");
    }
    const StateStats st = Summarize(m.profile[s]);
    m.emission[s] = {st.mean, std::max(st.std, options.std_floor)};
  }
  return m;
}

ApplianceModel TrainAppliance(const std::string& id, const PowerSeries& series,
                              int omega, const QuantizeOptions& quantize,
                              const EstimateOptions& estimate) {
  Quantization q = QuantizeStates(series, omega, id, quantize);
  return EstimateHmmParams(q.states, series, estimate);
}

}  // namespace switchdp
