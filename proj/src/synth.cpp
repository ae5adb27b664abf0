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

#include "switchdp/synth.hpp"

#include <algorithm>
#include <random>

#include "stochastic.hpp"
#include "switchdp/error.hpp"
#include "switchdp/rng.hpp"

namespace switchdp {

void SynthConfig::Validate() const {
  if (interval <= 0) {
    throw Error(ErrorCode::kValidation, "synth interval must be positive");
  }
  if (appliances.empty()) {
    throw Error(ErrorCode::kValidation, "synth config has no appliances");
  }
  for (const auto& a : appliances) {
    const std::string who = "appliance '" + a.id + "'";
    if (a.state_means.size() < 2) {
      throw Error(ErrorCode::kValidation, who + " needs OFF and >= 1 ON state");
    }
    if (a.state_means.front() != 0.0) {
      throw Error(ErrorCode::kValidation, who + " OFF mean must be 0 W");
    }
    for (double m : a.state_means) {
      if (!(m >= 0.0)) {
        throw Error(ErrorCode::kValidation, who + " has a negative state mean");
      }
    }
    if (!(a.jitter_std >= 0.0)) {
      throw Error(ErrorCode::kValidation, who + " jitter must be >= 0");
    }
    const std::size_t n = a.state_means.size();
    internal::CheckDistribution(a.initial, n, who + " initial distribution");
    if (a.transition.size() != n) {
      throw Error(ErrorCode::kValidation, who + " transition matrix needs " +
                                              std::to_string(n) + " rows");
    }
    for (std::size_t r = 0; r < n; ++r) {
      internal::CheckDistribution(a.transition[r], n,
                                  who + " transition row " + std::to_string(r));
    }
  }
}

SynthConfig SynthConfigFromJson(const nlohmann::json& j) {
  SynthConfig c;
  c.duration = j.value("duration", std::size_t{0});
  c.interval = j.value("interval", std::int64_t{60});
  c.start_time = j.value("start_time", std::int64_t{1303132800});
  c.seed = j.value("seed", std::uint64_t{0});
  if (!j.contains("appliances") || !j.at("appliances").is_array()) {
    throw Error(ErrorCode::kValidation, "synth config needs an appliances array");
  }
  for (const auto& a : j.at("appliances")) {
    SynthAppliance s;
    try {
      s.id = a.at("id").get<std::string>();
      s.state_means = a.at("state_means").get<std::vector<double>>();
      s.jitter_std = a.value("jitter_std", 0.0);
      s.transition = a.at("transition").get<std::vector<std::vector<double>>>();
      s.initial = a.at("initial").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, std::string("synth appliance: ") + e.what());
    }
    c.appliances.push_back(std::move(s));
  }
  return c;
}

nlohmann::json SynthConfigToJson(const SynthConfig& c) {
  nlohmann::json apps = nlohmann::json::array();
  for (const auto& a : c.appliances) {
    apps.push_back({{"id", a.id},
                    {"state_means", a.state_means},
                    {"jitter_std", a.jitter_std},
                    {"transition", a.transition},
                    {"initial", a.initial}});
  }
  return {{"duration", c.duration},
          {"interval", c.interval},
          {"start_time", c.start_time},
          {"seed", c.seed},
          {"appliances", apps}};
}

SynthConfig BenchmarkSynthConfig(std::size_t duration, std::uint64_t seed) {
  SynthConfig c;
  c.duration = duration;
  c.seed = seed;
  c.appliances = {
      {"fridge", {0.0, 150.0}, 5.0, {{0.9, 0.1}, {0.1, 0.9}}, {0.5, 0.5}},
      {"washer",
       {0.0, 400.0, 800.0},
       5.0,
       {{0.9, 0.05, 0.05}, {0.1, 0.8, 0.1}, {0.1, 0.1, 0.8}},
       {0.5, 0.25, 0.25}},
      {"heater", {0.0, 1200.0}, 5.0, {{0.9, 0.1}, {0.1, 0.9}}, {0.5, 0.5}},
  };
  return c;
}

LabeledDataset SynthGenerate(const SynthConfig& config) {
  config.Validate();
  LabeledDataset out;
  out.aggregate.start_time = config.start_time;
  out.aggregate.interval = config.interval;
  out.aggregate.measured = true;
  out.aggregate.values.assign(config.duration, 0.0);

  for (std::size_t i = 0; i < config.appliances.size(); ++i) {
    const SynthAppliance& a = config.appliances[i];
    Rng rng(DeriveSeed(config.seed, i));
    std::normal_distribution<double> jitter(0.0, 1.0);

    ApplianceChannel ch;
    ch.id = a.id;
    ch.power.start_time = config.start_time;
    ch.power.interval = config.interval;
    ch.power.measured = true;
    ch.power.values.resize(config.duration);
    StateSequence truth{a.id, a.omega(), std::vector<int>(config.duration)};

    int s = 0;
    for (std::size_t t = 0; t < config.duration; ++t) {
      s = t == 0 ? internal::SampleCategorical(rng, a.initial)
                 : internal::SampleCategorical(rng, a.transition[s]);
      truth.states[t] = s;
      double w = 0.0;
      if (s > 0) {
        w = a.state_means[s];
        if (a.jitter_std > 0.0) w += a.jitter_std * jitter(rng);
        w = std::max(w, 0.0);
      }
      ch.power.values[t] = w;
      out.aggregate.values[t] += w;
    }
    ch.truth = std::move(truth);
    out.appliances.push_back(std::move(ch));
  }
  return out;
}

}  // namespace switchdp
