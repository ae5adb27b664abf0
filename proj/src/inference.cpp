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

#include "switchdp/inference.hpp"

#include <cmath>
#include <limits>

#include "switchdp/error.hpp"

namespace switchdp {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<StateSequence> DecodeJointPath(const FhmmModel& model,
                                           std::span<const std::size_t> path) {
  std::vector<StateSequence> out;
  for (const auto& a : model.appliances()) {
    out.push_back(StateSequence{a.id, a.omega, std::vector<int>(path.size())});
  }
  std::vector<int> tuple(model.num_appliances());
  for (std::size_t t = 0; t < path.size(); ++t) {
    model.Unflatten(path[t], tuple);
    for (std::size_t i = 0; i < tuple.size(); ++i) out[i].states[t] = tuple[i];
  }
  return out;
}

// Adds each appliance's log transition term to `score`, appliance 0 first.
// ViterbiMap performs the same additions in the same order.
double AddTransition(const FhmmModel& model, double score, std::size_t from,
                     std::size_t to) {
  const auto strides = model.strides();
  for (std::size_t i = 0; i < model.num_appliances(); ++i) {
    const auto n = static_cast<std::size_t>(model.appliances()[i].num_states());
    const std::size_t f = (from / strides[i]) % n;
    const std::size_t c = (to / strides[i]) % n;
    score = score + model.log_transition(i)[f * n + c];
  }
  return score;
}

// True when `a` precedes `b` comparing the last step first.
bool ReverseLexLess(std::span<const std::size_t> a,
                    std::span<const std::size_t> b) {
  for (std::size_t t = a.size(); t-- > 0;) {
    if (a[t] != b[t]) return a[t] < b[t];
  }
  return false;
}

}  // namespace

MapResult ViterbiMap(const FhmmModel& model, const PowerSeries& y_sum,
                     const kernels::KernelTable& k) {
  MapResult result;
  const std::size_t T = y_sum.size();
  if (T == 0) {
    result.states = DecodeJointPath(model, {});
    return result;
  }
  const std::size_t K = model.num_joint_states();
  const std::size_t N = model.num_appliances();
  const auto strides = model.strides();

  std::vector<double> delta(K);
  std::vector<double> next(K);
  std::vector<double> emit(K);
  std::vector<std::vector<std::int32_t>> stage_arg(N, std::vector<std::int32_t>(K));
  std::vector<std::int32_t> back(T * K);

  kernels::GaussianLogDensity(k, y_sum.values[0], model.joint_mean(),
                              model.joint_inv_var(), model.joint_log_norm(),
                              emit);
  for (std::size_t j = 0; j < K; ++j) delta[j] = model.log_initial()[j] + emit[j];

  for (std::size_t t = 1; t < T; ++t) {
    // Eliminate the previous state of one appliance at a time. After stage i,
    // digits 0..i of the index refer to the current step, the rest to the
    // previous step.
    for (std::size_t i = 0; i < N; ++i) {
      const auto n = static_cast<std::size_t>(model.appliances()[i].num_states());
      const std::size_t s = strides[i];
      const std::size_t block = n * s;
      const auto log_a = model.log_transition(i);
      std::fill(next.begin(), next.end(), kNegInf);
      auto& arg = stage_arg[i];
      std::fill(arg.begin(), arg.end(), 0);
      for (std::size_t o = 0; o < K; o += block) {
        for (std::size_t c = 0; c < n; ++c) {
          std::span<double> best(next.data() + o + c * s, s);
          std::span<std::int32_t> best_arg(arg.data() + o + c * s, s);
          for (std::size_t p = 0; p < n; ++p) {
            kernels::MaxPlusUpdate(
                k, best, best_arg,
                std::span<const double>(delta.data() + o + p * s, s),
                log_a[p * n + c], static_cast<std::int32_t>(p));
          }
        }
      }
      delta.swap(next);
    }
    kernels::GaussianLogDensity(k, y_sum.values[t], model.joint_mean(),
                                model.joint_inv_var(), model.joint_log_norm(),
                                emit);
    kernels::Accumulate(k, delta, emit);

    std::int32_t* bp = back.data() + t * K;
    for (std::size_t c = 0; c < K; ++c) {
      std::size_t idx = c;
      for (std::size_t i = N; i-- > 0;) {
        const auto n = static_cast<std::size_t>(model.appliances()[i].num_states());
        const std::size_t digit = (idx / strides[i]) % n;
        const auto p = static_cast<std::size_t>(stage_arg[i][idx]);
        idx = idx - digit * strides[i] + p * strides[i];
      }
      bp[c] = static_cast<std::int32_t>(idx);
    }
  }

  std::size_t best = 0;
  for (std::size_t j = 1; j < K; ++j) {
    if (delta[j] > delta[best]) best = j;
  }
  result.log_score = delta[best];
  result.joint_path.resize(T);
  result.joint_path[T - 1] = best;
  for (std::size_t t = T - 1; t > 0; --t) {
    result.joint_path[t - 1] =
        static_cast<std::size_t>(back[t * K + result.joint_path[t]]);
  }
  result.states = DecodeJointPath(model, result.joint_path);
  return result;
}

MapResult BruteForceMap(const FhmmModel& model, const PowerSeries& y_sum,
                        std::uint64_t max_paths) {
  MapResult result;
  const std::size_t T = y_sum.size();
  if (T == 0) {
    result.states = DecodeJointPath(model, {});
    return result;
  }
  const std::size_t K = model.num_joint_states();
  double total = 1.0;
  for (std::size_t t = 0; t < T; ++t) total *= static_cast<double>(K);
  if (total > static_cast<double>(max_paths)) {
    throw Error(ErrorCode::kCapacity,
                "brute-force MAP over " + std::to_string(total) +
                    " paths exceeds limit " + std::to_string(max_paths));
  }

  // Depth-first over time with prefix scores; prefix[t] is the score of the
  // path through step t.
  std::vector<std::size_t> path(T, 0);
  std::vector<std::size_t> best_path;
  double best_score = kNegInf;
  std::vector<double> prefix(T);
  std::size_t t = 0;
  path[0] = 0;
  for (;;) {
    const std::size_t j = path[t];
    prefix[t] = t == 0 ? model.LogInitial(j) + model.LogEmission(j, y_sum.values[0])
                       : AddTransition(model, prefix[t - 1], path[t - 1], j) +
                             model.LogEmission(j, y_sum.values[t]);
    if (t + 1 < T) {
      ++t;
      path[t] = 0;
      continue;
    }
    const double score = prefix[t];
    if (best_path.empty() || score > best_score ||
        (score == best_score && ReverseLexLess(path, best_path))) {
      best_score = score;
      best_path = path;
    }
    // Advance the odometer, popping exhausted levels.
    while (path[t] + 1 == K) {
      if (t == 0) {
        result.log_score = best_score;
        result.joint_path = best_path;
        result.states = DecodeJointPath(model, result.joint_path);
        return result;
      }
      --t;
    }
    ++path[t];
  }
}

double PathLogScore(const FhmmModel& model, const PowerSeries& y_sum,
                    std::span<const std::size_t> joint_path) {
  if (joint_path.size() != y_sum.size()) {
    throw Error(ErrorCode::kValidation, "path and series lengths differ");
  }
  if (joint_path.empty()) return 0.0;
  double s = model.LogInitial(joint_path[0]) +
             model.LogEmission(joint_path[0], y_sum.values[0]);
  for (std::size_t t = 1; t < joint_path.size(); ++t) {
    s = AddTransition(model, s, joint_path[t - 1], joint_path[t]) +
        model.LogEmission(joint_path[t], y_sum.values[t]);
  }
  return s;
}

NamedSeries StatesToPower(const FhmmModel& model,
                          const std::vector<StateSequence>& states,
                          std::int64_t start_time, std::int64_t interval) {
  NamedSeries out;
  for (const auto& seq : states) {
    if (!states.empty() && seq.size() != states.front().size()) {
      throw Error(ErrorCode::kValidation, "state sequences differ in length");
    }
    const ApplianceModel& a = model.appliances()[model.IndexOf(seq.appliance_id)];
    PowerSeries p;
    p.start_time = start_time;
    p.interval = interval;
    p.measured = true;
    p.values.reserve(seq.size());
    for (std::size_t t = 0; t < seq.size(); ++t) {
      const int s = seq.states[t];
      if (s < 0 || s > a.omega) {
        throw Error(ErrorCode::kValidation,
                    "state " + std::to_string(s) + " out of range for '" +
                        a.id + "' at t=" + std::to_string(t));
      }
      p.values.push_back(a.emission[static_cast<std::size_t>(s)].mean);
    }
    out.emplace_back(seq.appliance_id, std::move(p));
  }
  return out;
}

}  // namespace switchdp
