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

#include "switchdp/reaggregation.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "switchdp/error.hpp"
#include "switchdp/fhmm_model.hpp"
#include "switchdp/mechanism.hpp"
#include "switchdp/synth.hpp"
#include "test_util.hpp"

namespace switchdp {
namespace {

using testing::MakeAppliance;
using testing::MakeSeries;

TEST(Reaggregate, UnchangedStateKeepsOriginal) {
  Rng rng(61);
  const ApplianceModel m = MakeAppliance("a", {0, 200});
  const PowerSeries out = ReaggregateAppliance(MakeSeries({203, 198}), StateSequence{"a", 1, {1, 1}},
                                               StateSequence{"a", 1, {1, 1}}, m, rng);
  EXPECT_EQ(out.values, (std::vector<double>{203, 198}));
}

TEST(Reaggregate, OffIsZero) {
  Rng rng(62);
  const ApplianceModel m = MakeAppliance("a", {0, 200});
  for (const std::vector<int>& x : {std::vector<int>{0, 0}, {1, 0}, {1, 1}}) {
    const PowerSeries out = ReaggregateAppliance(MakeSeries({203, 198}), StateSequence{"a", 1, x},
                                                 StateSequence{"a", 1, {0, 0}}, m, rng);
    EXPECT_EQ(out.values, (std::vector<double>{0, 0}));
  }
}

TEST(Reaggregate, ChangedStateDrawsFromProfile) {
  ApplianceModel m = MakeAppliance("a", {0, 200, 500});
  m.profile[2] = {480, 495, 510};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const PowerSeries out = ReaggregateAppliance(MakeSeries({0}), StateSequence{"a", 2, {0}},
                                                 StateSequence{"a", 2, {2}}, m, rng);
    EXPECT_NE(std::find(m.profile[2].begin(), m.profile[2].end(), out.values[0]),
              m.profile[2].end());
  }
}

TEST(Reaggregate, Errors) {
  Rng rng(63);
  ApplianceModel m = MakeAppliance("a", {0, 200});
  EXPECT_THROW(ReaggregateAppliance(MakeSeries({1, 2}), StateSequence{"a", 1, {0}},
                                    StateSequence{"a", 1, {0}}, m, rng),
               Error);
  m.profile[1].clear();
  try {
    ReaggregateAppliance(MakeSeries({0}), StateSequence{"a", 1, {0}}, StateSequence{"a", 1, {1}}, m,
                         rng);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kReaggregation);
  }
}

TEST(SumAppliances, Examples) {
  const NamedSeries two{{"a", MakeSeries({100, 0})}, {"b", MakeSeries({0, 300})}};
  EXPECT_EQ(SumAppliances(two).values, (std::vector<double>{100, 300}));
  const NamedSeries one{{"a", MakeSeries({1.5, 2.5})}};
  EXPECT_EQ(SumAppliances(one), one[0].second);
  NamedSeries bad = two;
  bad[1].second.start_time = 60;
  EXPECT_THROW(SumAppliances(bad), Error);
}

TEST(SumAppliances, MatchesElementwiseOracle) {
  Rng rng(64);
  NamedSeries parts;
  for (int i = 0; i < 3; ++i) {
    std::vector<double> v(257);
    for (auto& x : v) x = 1000 * UniformOpen01(rng);
    parts.emplace_back("a" + std::to_string(i), MakeSeries(v));
  }
  const PowerSeries sum = SumAppliances(parts);
  for (std::size_t t = 0; t < 257; ++t) {
    EXPECT_EQ(sum.values[t],
              parts[0].second.values[t] + parts[1].second.values[t] + parts[2].second.values[t]);
  }
}

TEST(Fog, Grouping) {
  std::vector<PowerSeries> meters;
  for (int m = 1; m <= 5; ++m) meters.push_back(MakeSeries({1.0 * m, 10.0 * m}));
  const auto three = FogAggregate({meters[0], meters[1], meters[2]}, 3);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0].values, (std::vector<double>{6, 60}));
  EXPECT_EQ(FogAggregate(meters, 1), meters);
  const auto pairs = FogAggregate(meters, 2);
  ASSERT_EQ(pairs.size(), 3u);
  EXPECT_EQ(pairs[0].values, (std::vector<double>{3, 30}));
  EXPECT_EQ(pairs[1].values, (std::vector<double>{7, 70}));
  EXPECT_EQ(pairs[2].values, (std::vector<double>{5, 50}));
  EXPECT_THROW(FogAggregate(meters, 0), Error);
}

TEST(StateMechanism, OutputIsNonNegativeAndPerApplianceSumsMatch) {
  const SynthConfig c = BenchmarkSynthConfig(600, 65);
  const LabeledDataset d = SynthGenerate(c);
  std::vector<ApplianceModel> apps;
  for (const auto& a : c.appliances) apps.push_back(MakeAppliance(a.id, a.state_means, 0.9, 5.0));
  const FhmmModel model = BuildFhmm(apps);
  const ModelMetadata meta{60, 600, 2500};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    MechanismConfig mc;
    mc.privacy.epsilon = 0.1 + 0.1 * static_cast<double>(seed % 20);
    mc.privacy.seed = seed;
    const ObfuscationResult r = Obfuscate(Mechanism::kStates, model, meta, d, mc);
    ASSERT_EQ(r.aggregate.size(), d.aggregate.size());
    EXPECT_TRUE(std::all_of(r.aggregate.values.begin(), r.aggregate.values.end(),
                            [](double v) { return v >= 0.0; }));
    for (std::size_t t = 0; t < r.aggregate.size(); t += 37) {
      double sum = 0.0;
      for (const auto& [id, s] : r.per_appliance) sum += s.values[t];
      EXPECT_NEAR(sum, r.aggregate.values[t], 1e-6);
    }
  }
}

TEST(StateMechanism, IdentityMechanismReturnsInput) {
  const LabeledDataset d = SynthGenerate(BenchmarkSynthConfig(50, 66));
  const FhmmModel model = BuildFhmm({MakeAppliance("fridge", {0, 150})});
  MechanismConfig mc;
  EXPECT_EQ(Obfuscate(Mechanism::kIdentity, model, ModelMetadata{}, d, mc).aggregate, d.aggregate);
  EXPECT_THROW(ParseMechanism("none"), Error);
  for (auto m : {Mechanism::kIdentity, Mechanism::kStates, Mechanism::kAggregateLaplace,
                 Mechanism::kHmmResynth}) {
    EXPECT_EQ(ParseMechanism(MechanismName(m)), m);
  }
}

}  // namespace
}  // namespace switchdp
