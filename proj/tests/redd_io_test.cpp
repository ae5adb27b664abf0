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

#include "switchdp/redd_io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <sstream>
#include <vector>

#include "switchdp/error.hpp"
#include "switchdp/rng.hpp"
#include "switchdp/synth.hpp"

namespace switchdp {
namespace {

PowerSeries Parse(const std::string& text, std::int64_t interval) {
  std::istringstream in(text);
  return ParseReddChannel(in, interval);
}

ErrorCode ParseErrorCode(const std::string& text) {
  try {
    Parse(text, 1);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::kIo;
}

// Bucket means with forward fill, computed directly from (t, w) pairs.
std::vector<double> ResampleOracle(const std::vector<std::pair<std::int64_t, double>>& raw,
                                   std::int64_t interval) {
  const std::int64_t t0 = raw.front().first / interval * interval;
  const std::int64_t t1 = raw.back().first;
  std::vector<double> out;
  double last = 0.0;
  for (std::int64_t b = t0; b <= t1; b += interval) {
    double sum = 0.0;
    int n = 0;
    for (const auto& [t, w] : raw) {
      if (t >= b && t < b + interval) {
        sum += w;
        ++n;
      }
    }
    last = n > 0 ? sum / n : last;
    out.push_back(last);
  }
  return out;
}

TEST(ReddChannel, IdentityResample) {
  const PowerSeries s = Parse("0 100\n1 100\n2 300\n", 1);
  EXPECT_EQ(s.values, (std::vector<double>{100, 100, 300}));
  EXPECT_EQ(s.start_time, 0);
  EXPECT_TRUE(s.measured);
}

TEST(ReddChannel, BucketMean) {
  EXPECT_EQ(Parse("0 100\n1 100\n2 300\n", 2).values, (std::vector<double>{100, 300}));
}

TEST(ReddChannel, GapIsForwardFilled) {
  EXPECT_EQ(Parse("0 50\n4 50\n", 1).values, ResampleOracle({{0, 50}, {4, 50}}, 1));
  EXPECT_EQ(Parse("0 50\n4 50\n", 1).values, (std::vector<double>(5, 50.0)));
}

TEST(ReddChannel, MatchesOracleOnIrregularReadings) {
  Rng rng(11);
  std::vector<std::pair<std::int64_t, double>> raw;
  std::int64_t t = 1303132805;
  std::string text;
  for (int i = 0; i < 400; ++i) {
    t += static_cast<std::int64_t>(UniformIndex(rng, 40));
    const double w = std::round(1000 * UniformOpen01(rng));
    raw.emplace_back(t, w);
    text += std::to_string(t) + " " + std::to_string(static_cast<int>(w)) + "\n";
  }
  const auto expected = ResampleOracle(raw, 60);
  const auto got = Parse(text, 60).values;
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], expected[k], 1e-9);
}

TEST(ReddChannel, ResamplingPreservesEnergyWithinOneBucket) {
  Rng rng(12);
  std::string text;
  double energy_in = 0.0;
  double max_reading = 0.0;
  for (int t = 0; t < 3607; ++t) {
    const double w = 2000 * UniformOpen01(rng);
    text += std::to_string(t) + " " + std::to_string(w) + "\n";
  }
  // Reload what was written so the comparison uses the parsed values.
  std::istringstream raw(text);
  const PowerSeries one_hz = ParseReddChannel(raw, 1);
  for (double w : one_hz.values) {
    energy_in += w;
    max_reading = std::max(max_reading, w);
  }
  const PowerSeries s = Parse(text, 60);
  double energy_out = 0.0;
  for (double w : s.values) energy_out += w * 60.0;
  EXPECT_LE(std::abs(energy_out - energy_in), max_reading * 60.0);
}

TEST(ReddChannel, Errors) {
  EXPECT_EQ(ParseErrorCode(""), ErrorCode::kEmptySeries);
  EXPECT_EQ(ParseErrorCode("0 100\nbad line here\n"), ErrorCode::kParse);
  EXPECT_EQ(ParseErrorCode("0 abc\n"), ErrorCode::kParse);
  EXPECT_EQ(ParseErrorCode("5 1\n4 1\n"), ErrorCode::kParse);
  EXPECT_EQ(ParseErrorCode("0 -3\n"), ErrorCode::kValidation);
  try {
    Parse("0 1\n\n1 x\n", 1);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find(":3"), std::string::npos) << e.what();
  }
}

TEST(ReddChannel, RoundTripIsExact) {
  Rng rng(13);
  PowerSeries s;
  s.start_time = 1303132800;
  s.interval = 60;
  s.measured = true;
  for (int i = 0; i < 500; ++i) s.values.push_back(1234.5678 * UniformOpen01(rng));
  std::istringstream in(FormatReddChannel(s));
  EXPECT_EQ(ParseReddChannel(in, 60), s);
}

TEST(ReddLabels, ParseAndErrors) {
  std::istringstream in("1 mains\n2 mains\n3 fridge\n");
  const auto labels = ParseReddLabels(in);
  ASSERT_EQ(labels.size(), 3u);
  EXPECT_EQ(labels[2], (std::pair<int, std::string>{3, "fridge"}));
  std::istringstream bad("x fridge\n");
  EXPECT_THROW(ParseReddLabels(bad), Error);
}

TEST(AlignSeries, TrimsToCommonWindow) {
  PowerSeries a{0, 10, {1, 2, 3, 4}, true};
  PowerSeries b{10, 10, {5, 6, 7, 8}, true};
  AlignSeries({&a, &b});
  EXPECT_EQ(a.values, (std::vector<double>{2, 3, 4}));
  EXPECT_EQ(b.values, (std::vector<double>{5, 6, 7}));
  EXPECT_EQ(a.start_time, 10);
  PowerSeries c{5, 10, {1}, true};
  EXPECT_THROW(AlignSeries({&a, &c}), Error);
}

TEST(House, WriteThenLoadRoundTrips) {
  SynthConfig config = BenchmarkSynthConfig(300, 7);
  const LabeledDataset data = SynthGenerate(config);
  const auto dir = std::filesystem::temp_directory_path() / "switchdp_house_test";
  std::filesystem::remove_all(dir);
  WriteHouse(dir, data);
  const LabeledDataset loaded = LoadHouse(dir, config.interval);
  EXPECT_EQ(loaded.aggregate.values, data.aggregate.values);
  ASSERT_EQ(loaded.appliances.size(), data.appliances.size());
  for (std::size_t i = 0; i < data.appliances.size(); ++i) {
    EXPECT_EQ(loaded.appliances[i].id, data.appliances[i].id);
    EXPECT_EQ(loaded.appliances[i].power.values, data.appliances[i].power.values);
    EXPECT_EQ(loaded.appliances[i].truth, data.appliances[i].truth);
  }
  std::filesystem::remove_all(dir);
}

TEST(Dataset, SplitAndValidate) {
  const LabeledDataset data = SynthGenerate(BenchmarkSynthConfig(101, 3));
  EXPECT_NO_THROW(data.Validate(true));
  const auto [train, eval] = data.Split(0.5);
  EXPECT_EQ(train.aggregate.size(), 50u);
  EXPECT_EQ(eval.aggregate.size(), 51u);
  EXPECT_EQ(eval.aggregate.start_time, data.aggregate.TimeAt(50));
  EXPECT_EQ(eval.appliances[0].truth->states.front(),
            data.appliances[0].truth->states[50]);

  LabeledDataset broken = data;
  broken.aggregate.values[3] += 1.0;
  EXPECT_THROW(broken.Validate(true), Error);
  EXPECT_NO_THROW(broken.Validate(false));
}

}  // namespace
}  // namespace switchdp
