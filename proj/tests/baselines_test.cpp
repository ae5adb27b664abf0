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

#include "switchdp/baselines.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "switchdp/error.hpp"
#include "switchdp/inference.hpp"
#include "switchdp/reaggregation.hpp"
#include "switchdp/synth.hpp"
#include "test_util.hpp"

namespace switchdp {
namespace {

using testing::MakeAppliance;
using testing::MakeSeries;

TEST(AggregateLaplace, HugeEpsilonIsNearIdentity) {
  Rng rng(51);
  const PowerSeries y = MakeSeries({0, 120, 3400.5, 17});
  const PowerSeries out = BaselineAggregateLaplace(y, 1e12, 400.0, rng);
  for (std::size_t t = 0; t < y.size(); ++t) EXPECT_NEAR(out.values[t], y.values[t], 1e-6);
  EXPECT_FALSE(out.measured);
}

TEST(AggregateLaplace, ZeroMeanNoise) {
  Rng rng(52);
  const PowerSeries y = MakeSeries(std::vector<double>(10000, 100.0));
  const PowerSeries out = BaselineAggregateLaplace(y, 1.0, 10.0, rng);
  double mean = 0.0;
  for (double v : out.values) mean += v;
  EXPECT_NEAR(mean / 10000.0, 100.0, 1.0);
}

TEST(AggregateLaplace, ZeroReadingsGoNegativeHalfTheTime) {
  Rng rng(53);
  const PowerSeries y = MakeSeries(std::vector<double>(20000, 0.0));
  const PowerSeries out = BaselineAggregateLaplace(y, 0.1, 400.0, rng);
  double negative = 0;
  for (double v : out.values) negative += v < 0.0;
  EXPECT_NEAR(negative / 20000.0, 0.5, 0.02);
}

TEST(AggregateLaplace, RejectsBadParameters) {
  Rng rng(54);
  EXPECT_THROW(BaselineAggregateLaplace(MakeSeries({1}), 0.0, 1.0, rng), Error);
  EXPECT_THROW(BaselineAggregateLaplace(MakeSeries({1}), 1.0, 0.0, rng), Error);
}

FhmmModel NoiselessModel(const SynthConfig& c) {
  std::vector<ApplianceModel> apps;
  for (const auto& a : c.appliances) {
    ApplianceModel m = MakeAppliance(a.id, a.state_means, 0.9, 5.0);
    m.transition = a.transition;
    apps.push_back(m);
  }
  return BuildFhmm(apps);
}

TEST(HmmResynthesis, ZeroSigmaReproducesStateMeans) {
  SynthConfig c = BenchmarkSynthConfig(500, 55);
  for (auto& a : c.appliances) a.jitter_std = 0.0;
  const LabeledDataset d = SynthGenerate(c);
  Rng rng(1);
  const PowerSeries out = BaselineHmmResynthesis(NoiselessModel(c), d.aggregate, 0.0, rng);
  EXPECT_EQ(out.values, d.aggregate.values);
}

TEST(HmmResynthesis, AllOffGivesZeros) {
  const FhmmModel m = BuildFhmm({MakeAppliance("a", {0, 100}), MakeAppliance("b", {0, 300})});
  Rng rng(1);
  const PowerSeries out = BaselineHmmResynthesis(m, MakeSeries(std::vector<double>(40, 0.0)), 0.0, rng);
  EXPECT_EQ(out.values, std::vector<double>(40, 0.0));
}

TEST(HmmResynthesis, ResidualStdMatchesSigma) {
  SynthConfig c = BenchmarkSynthConfig(10000, 56);
  const LabeledDataset d = SynthGenerate(c);
  const FhmmModel m = NoiselessModel(c);
  Rng rng(57);
  const PowerSeries out = BaselineHmmResynthesis(m, d.aggregate, 50.0, rng);
  const PowerSeries means =
      SumAppliances(StatesToPower(m, ViterbiMap(m, d.aggregate).states));
  double mean = 0.0, ss = 0.0;
  const auto n = static_cast<double>(out.size());
  for (std::size_t t = 0; t < out.size(); ++t) mean += out.values[t] - means.values[t];
  mean /= n;
  for (std::size_t t = 0; t < out.size(); ++t) {
    const double r = out.values[t] - means.values[t] - mean;
    ss += r * r;
  }
  EXPECT_NEAR(std::sqrt(ss / (n - 1)), 50.0, 2.5);
}

}  // namespace
}  // namespace switchdp
