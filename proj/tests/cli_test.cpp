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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>

#include "switchdp/cli/commands.hpp"
#include "switchdp/cli/config.hpp"
#include "switchdp/error.hpp"
#include "switchdp/fhmm_model.hpp"
#include "switchdp/redd_io.hpp"
#include "switchdp/text_format.hpp"

namespace switchdp::cli {
namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("switchdp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path WriteConfig(const nlohmann::json& j, const std::string& name = "config.json") {
    const fs::path p = dir_ / name;
    WriteTextFile(p, j.dump(1));
    return p;
  }

  int Run(const std::string& args) {
    const std::string cmd = std::string(SWITCHDP_CLI_PATH) + " " + args + " >" +
                            (dir_ / "stdout.txt").string() + " 2>" + (dir_ / "stderr.txt").string();
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  }

  std::map<std::string, std::string> Snapshot(const fs::path& root) {
    std::map<std::string, std::string> files;
    for (const auto& e : fs::recursive_directory_iterator(root)) {
      if (e.is_regular_file()) files[fs::relative(e.path(), root).string()] = ReadTextFile(e.path());
    }
    return files;
  }

  fs::path dir_;
};

nlohmann::json SmallConfig() {
  nlohmann::json j = PipelineConfigToJson(DefaultPipelineConfig());
  j["synth"]["duration"] = 800;
  j["data"]["meters"] = 2;
  j["fog"]["group_size"] = 2;
  j["evaluation"]["seeds"] = {1, 2};
  return j;
}

TEST(Config, JsonRoundTrip) {
  PipelineConfig c = DefaultPipelineConfig();
  c.seed = 9;
  c.privacy.mechanism = Mechanism::kAggregateLaplace;
  c.privacy.resynth_sigma = 12.5;
  c.appliances = {{"fridge", 1}};
  c.evaluation.epsilons = {0.5};
  const PipelineConfig back = PipelineConfigFromJson(PipelineConfigToJson(c));
  EXPECT_EQ(PipelineConfigToJson(back), PipelineConfigToJson(c));
}

TEST(Config, Defaults) {
  const PipelineConfig c = PipelineConfigFromJson(nlohmann::json::object());
  EXPECT_EQ(c.interval, 60);
  EXPECT_EQ(c.train_fraction, 0.5);
  EXPECT_EQ(c.privacy.sensitivity, SensitivityMode::kGlobal);
  EXPECT_EQ(c.privacy.beta, 0.1);
  EXPECT_EQ(c.evaluation.epsilons, (std::vector<double>{0.1, 1, 5, 10}));
  EXPECT_EQ(c.ResolvedAppliances().size(), 3u);
}

TEST(Config, Rejections) {
  EXPECT_THROW(PipelineConfigFromJson({{"train_fraction", 1.5}}), Error);
  EXPECT_THROW(PipelineConfigFromJson({{"privacy", {{"epsilon", 0}}}}), Error);
  EXPECT_THROW(PipelineConfigFromJson({{"privacy", {{"mechanism", "magic"}}}}), Error);
  EXPECT_THROW(PipelineConfigFromJson({{"seed", "abc"}}), Error);
  EXPECT_THROW(PipelineConfigFromJson({{"data", {{"source", "redd"}}}}), Error);
}

TEST_F(CliTest, TwoApplianceModelHasFourJointStates) {
  nlohmann::json j = SmallConfig();
  j["synth"]["appliances"] = {j["synth"]["appliances"][0], j["synth"]["appliances"][2]};
  const fs::path cfg = WriteConfig(j);
  ASSERT_EQ(Run("--config " + cfg.string() + " --out " + dir_.string() + " train"), 0);
  const auto [model, meta] = ParseModelFile(ReadTextFile(dir_ / "model.json"));
  EXPECT_EQ(model.num_joint_states(), 4u);
  EXPECT_EQ(meta.training_samples, 400u);
  const std::string first = ReadTextFile(dir_ / "model.json");
  ASSERT_EQ(Run("--config " + cfg.string() + " --out " + dir_.string() + " train"), 0);
  EXPECT_EQ(ReadTextFile(dir_ / "model.json"), first);
}

TEST_F(CliTest, TrainedTransitionsMatchGenerator) {
  PipelineConfig c = DefaultPipelineConfig();
  c.synth.duration = 20000;
  c.meters = 1;
  CmdTrain(c, dir_);
  const auto [model, meta] = ParseModelFile(ReadTextFile(dir_ / "model.json"));
  EXPECT_EQ(meta.training_samples, 10000u);
  for (std::size_t i = 0; i < c.synth.appliances.size(); ++i) {
    const auto& truth = c.synth.appliances[i].transition;
    const auto& got = model.appliances()[i].transition;
    for (std::size_t r = 0; r < truth.size(); ++r) {
      for (std::size_t k = 0; k < truth.size(); ++k) {
        EXPECT_NEAR(got[r][k], truth[r][k], 0.03) << c.synth.appliances[i].id;
      }
    }
  }
}

TEST_F(CliTest, MissingChannelIsNamed) {
  nlohmann::json j = SmallConfig();
  j["appliances"] = {{{"id", "toaster"}, {"omega", 1}}};
  const fs::path cfg = WriteConfig(j);
  EXPECT_NE(Run("--config " + cfg.string() + " --out " + dir_.string() + " train"), 0);
  EXPECT_NE(ReadTextFile(dir_ / "stderr.txt").find("toaster"), std::string::npos);
}

TEST_F(CliTest, AttackEmptySeriesGivesEmptyCsv) {
  const fs::path cfg = WriteConfig(SmallConfig());
  ASSERT_EQ(Run("--config " + cfg.string() + " --out " + dir_.string() + " train"), 0);
  WriteTextFile(dir_ / "empty.dat", "");
  ASSERT_EQ(Run("--config " + cfg.string() + " --out " + dir_.string() +
                " attack --input " + (dir_ / "empty.dat").string()),
            0);
  const std::string states = ReadTextFile(dir_ / "attack" / "states.csv");
  EXPECT_EQ(states.substr(states.find("t,")), "t,appliance,state\n");
}

TEST_F(CliTest, AttackRecoversCleanAggregate) {
  const PipelineConfig c = PipelineConfigFromJson(SmallConfig());
  CmdSynth(c, dir_);
  CmdTrain(c, dir_);
  CmdAttack(c, dir_, {}, dir_ / "data" / "meter_0" / "channel_1.dat");
  const auto states = ParseStatesCsv(ReadTextFile(dir_ / "attack" / "states.csv"));
  const auto truth = ParseStatesCsv(ReadTextFile(dir_ / "data" / "meter_0" / "truth_states.csv"));
  ASSERT_EQ(states.size(), truth.size());
  std::size_t hit = 0, total = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    for (std::size_t t = 0; t < truth[i].size(); ++t) {
      hit += (truth[i].states[t] > 0) == (states[i].states[t] > 0);
      ++total;
    }
  }
  EXPECT_GE(static_cast<double>(hit) / static_cast<double>(total), 0.95);
}

TEST_F(CliTest, PrivatizeIdentityReturnsInput) {
  const fs::path cfg = WriteConfig(SmallConfig());
  const std::string base = "--config " + cfg.string() + " --out " + dir_.string();
  ASSERT_EQ(Run(base + " train"), 0);
  ASSERT_EQ(Run(base + " privatize --mechanism identity"), 0);
  const PipelineConfig c = PipelineConfigFromJson(SmallConfig());
  const auto eval = LoadMeters(c)[1].Split(0.5).second;
  const PowerSeries out = LoadReddChannel(dir_ / "privatized" / "meter_1" / "channel_1.dat", 60);
  EXPECT_EQ(out.values, eval.aggregate.values);
  EXPECT_EQ(out.start_time, eval.aggregate.start_time);
}

TEST_F(CliTest, PrivatizeIsSeedDeterministic) {
  const fs::path cfg = WriteConfig(SmallConfig());
  const std::string base = "--config " + cfg.string() + " --out " + dir_.string();
  ASSERT_EQ(Run(base + " train"), 0);
  ASSERT_EQ(Run(base + " privatize --epsilon 1 --seed 5"), 0);
  const auto first = Snapshot(dir_ / "privatized");
  ASSERT_EQ(Run(base + " privatize --epsilon 1 --seed 5"), 0);
  EXPECT_EQ(Snapshot(dir_ / "privatized"), first);
  ASSERT_EQ(Run(base + " privatize --epsilon 1 --seed 6"), 0);
  EXPECT_NE(Snapshot(dir_ / "privatized").at("meter_0/channel_1.dat"), first.at("meter_0/channel_1.dat"));
  EXPECT_TRUE(fs::exists(dir_ / "privatized" / "fog.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "privatized" / "meter_0" / "obfuscated_states.csv"));
}

TEST_F(CliTest, PipelineIsByteIdenticalOnRerun) {
  const fs::path cfg = WriteConfig(SmallConfig());
  ASSERT_EQ(Run("--config " + cfg.string() + " --out " + (dir_ / "a").string() + " pipeline"), 0);
  ASSERT_EQ(Run("--config " + cfg.string() + " --out " + (dir_ / "b").string() + " --jobs 3 pipeline"), 0);
  const auto a = Snapshot(dir_ / "a");
  EXPECT_EQ(a, Snapshot(dir_ / "b"));
  EXPECT_TRUE(a.count("model.json"));
  EXPECT_TRUE(a.count("sweep/report.csv"));
  EXPECT_TRUE(a.count("sweep/plot_data.csv"));
}

TEST_F(CliTest, PipelineEqualsSeparateStages) {
  const fs::path cfg = WriteConfig(SmallConfig());
  const std::string a = "--config " + cfg.string() + " --out " + (dir_ / "a").string();
  const std::string b = "--config " + cfg.string() + " --out " + (dir_ / "b").string();
  ASSERT_EQ(Run(a + " pipeline"), 0);
  ASSERT_EQ(Run(b + " synth"), 0);
  ASSERT_EQ(Run(b + " train"), 0);
  ASSERT_EQ(Run(b + " privatize"), 0);
  ASSERT_EQ(Run(b + " attack --input " + (dir_ / "b" / "privatized" / "meter_0" / "channel_1.dat").string()), 0);
  ASSERT_EQ(Run(b + " evaluate"), 0);
  ASSERT_EQ(Run(b + " sweep"), 0);
  EXPECT_EQ(Snapshot(dir_ / "a"), Snapshot(dir_ / "b"));
}

TEST_F(CliTest, FailingSweepCellExitsNonZero) {
  nlohmann::json j = SmallConfig();
  j["privacy"]["resynth_sigma"] = -1.0;
  const fs::path cfg = WriteConfig(j);
  const std::string base = "--config " + cfg.string() + " --out " + dir_.string();
  ASSERT_EQ(Run(base + " train"), 0);
  EXPECT_NE(Run(base + " sweep"), 0);
  EXPECT_NE(ReadTextFile(dir_ / "stderr.txt").find("hmm-resynth epsilon=0.1 seed=1"),
            std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_NE(Run(""), 0);
  EXPECT_NE(Run("frobnicate"), 0);
  EXPECT_NE(Run("--config /nonexistent/config.json train"), 0);
}

}  // namespace
}  // namespace switchdp::cli
