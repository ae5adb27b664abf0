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

#include <gtest/gtest.h>

#include "switchdp/error.hpp"

namespace switchdp {
namespace {

SynthAppliance Binary(double stay_off, double stay_on, double mean, double jitter) {
  return SynthAppliance{"a", {0.0, mean}, jitter,
                        {{stay_off, 1 - stay_off}, {1 - stay_on, stay_on}}, {0.5, 0.5}};
}

TEST(Synth, AbsorbingChainIsConstant) {
  SynthConfig c;
  c.appliances.push_back(SynthAppliance{"kettle", {0.0, 200.0}, 0.0,
                                        {{1.0, 0.0}, {0.0, 1.0}}, {0.0, 1.0}});
  c.duration = 50;
  const LabeledDataset d = SynthGenerate(c);
  EXPECT_EQ(d.appliances[0].truth->states, std::vector<int>(50, 1));
  EXPECT_EQ(d.appliances[0].power.values, std::vector<double>(50, 200.0));
  EXPECT_EQ(d.aggregate.values, std::vector<double>(50, 200.0));
}

TEST(Synth, SeedDeterminism) {
  const LabeledDataset a = SynthGenerate(BenchmarkSynthConfig(2000, 5));
  const LabeledDataset b = SynthGenerate(BenchmarkSynthConfig(2000, 5));
  const LabeledDataset c = SynthGenerate(BenchmarkSynthConfig(2000, 6));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.aggregate.values, c.aggregate.values);
}

TEST(Synth, StationaryOnFraction) {
  // Symmetric two-state chain: stationary distribution (1/2, 1/2).
  SynthConfig c;
  c.appliances.push_back(Binary(0.9, 0.9, 100.0, 0.0));
  c.duration = 100000;
  c.seed = 9;
  const LabeledDataset d = SynthGenerate(c);
  double on = 0;
  for (int s : d.appliances[0].truth->states) on += s;
  EXPECT_NEAR(on / 100000.0, 0.5, 0.02);
}

TEST(Synth, AggregateIsExactSumAndOffIsZero) {
  const LabeledDataset d = SynthGenerate(BenchmarkSynthConfig(5000, 1));
  for (std::size_t t = 0; t < d.aggregate.size(); ++t) {
    double sum = 0.0;
    for (const auto& a : d.appliances) {
      sum += a.power.values[t];
      if (a.truth->states[t] == 0) {
        EXPECT_EQ(a.power.values[t], 0.0);
      }
      EXPECT_GE(a.power.values[t], 0.0);
    }
    EXPECT_EQ(d.aggregate.values[t], sum);
  }
  EXPECT_NO_THROW(d.Validate(true));
}

TEST(Synth, ZeroDurationIsEmpty) {
  const LabeledDataset d = SynthGenerate(BenchmarkSynthConfig(0, 1));
  EXPECT_TRUE(d.aggregate.empty());
  EXPECT_EQ(d.appliances.size(), 3u);
}

TEST(Synth, InvalidConfigsAreRejected) {
  SynthConfig c;
  c.duration = 10;
  c.appliances.push_back(Binary(0.9, 0.8, 100.0, 0.0));
  c.appliances[0].transition[0] = {0.5, 0.6};
  EXPECT_THROW(SynthGenerate(c), Error);
  c.appliances[0] = Binary(0.9, 0.8, 100.0, 0.0);
  c.appliances[0].initial = {0.2, 0.2};
  EXPECT_THROW(SynthGenerate(c), Error);
  c.appliances[0] = Binary(0.9, 0.8, 100.0, 0.0);
  c.appliances[0].state_means[0] = 10.0;
  EXPECT_THROW(SynthGenerate(c), Error);
}

TEST(Synth, JsonRoundTrip) {
  const SynthConfig c = BenchmarkSynthConfig(123, 77);
  const SynthConfig back = SynthConfigFromJson(SynthConfigToJson(c));
  EXPECT_EQ(SynthGenerate(back), SynthGenerate(c));
}

}  // namespace
}  // namespace switchdp
