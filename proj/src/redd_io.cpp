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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "switchdp/csv_io.hpp"
#include "switchdp/error.hpp"
#include "switchdp/text_format.hpp"

namespace switchdp {
namespace {

std::int64_t FloorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

constexpr const char* kTruthFile = "truth_states.csv";

}  // namespace

PowerSeries ParseReddChannel(std::istream& in, std::int64_t interval,
                             const std::string& source) {
  if (interval <= 0) {
    throw Error(ErrorCode::kValidation, "resample interval must be positive");
  }
  std::vector<std::int64_t> stamps;
  std::vector<double> watts;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    const auto where = source + ":" + std::to_string(line_no);
    if (fields.size() != 2) {
      throw Error(ErrorCode::kParse,
                  where + ": expected `timestamp watts`, got '" + line + "'");
    }
    const auto ts = ParseInt(fields[0]);
    const auto w = ParseDouble(fields[1]);
    if (!ts || !w) {
      throw Error(ErrorCode::kParse, where + ": cannot parse '" + line + "'");
    }
    if (!stamps.empty() && *ts < stamps.back()) {
      throw Error(ErrorCode::kParse, where + ": timestamps must not decrease");
    }
    if (*w < 0.0) {
      throw Error(ErrorCode::kValidation,
                  where + ": negative power " + std::string(fields[1]));
    }
    stamps.push_back(*ts);
    watts.push_back(*w);
  }
  if (stamps.empty()) {
    throw Error(ErrorCode::kEmptySeries, source + " contains no readings");
  }

  const std::int64_t anchor = FloorDiv(stamps.front(), interval) * interval;
  const auto buckets =
      static_cast<std::size_t>((stamps.back() - anchor) / interval) + 1;
  std::vector<double> sum(buckets, 0.0);
  std::vector<std::size_t> count(buckets, 0);
  for (std::size_t i = 0; i < stamps.size(); ++i) {
    const auto k = static_cast<std::size_t>((stamps[i] - anchor) / interval);
    sum[k] += watts[i];
    ++count[k];
  }

  PowerSeries out;
  out.start_time = anchor;
  out.interval = interval;
  out.measured = true;
  out.values.resize(buckets);
  for (std::size_t k = 0; k < buckets; ++k) {
    // Bucket 0 always holds the first reading.
    out.values[k] = count[k] > 0 ? sum[k] / static_cast<double>(count[k])
                                 : out.values[k - 1];
  }
  return out;
}

PowerSeries LoadReddChannel(const std::filesystem::path& path,
                            std::int64_t interval) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return ParseReddChannel(in, interval, path.string());
}

std::string FormatReddChannel(const PowerSeries& series) {
  std::string out;
  out.reserve(series.size() * 20);
  for (std::size_t k = 0; k < series.size(); ++k) {
    out += std::to_string(series.TimeAt(k));
    out += ' ';
    out += FormatDouble(series.values[k]);
    out += '\n';
  }
  return out;
}

void WriteReddChannel(const std::filesystem::path& path,
                      const PowerSeries& series) {
  WriteTextFile(path, FormatReddChannel(series));
}

ChannelLabels ParseReddLabels(std::istream& in, const std::string& source) {
  ChannelLabels out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    const auto ch = fields.size() == 2 ? ParseInt(fields[0]) : std::nullopt;
    if (!ch) {
      throw Error(ErrorCode::kParse, source + ":" + std::to_string(line_no) +
                                         ": expected `channel name`");
    }
    out.emplace_back(static_cast<int>(*ch), std::string(fields[1]));
  }
  return out;
}

ChannelLabels LoadReddLabels(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return ParseReddLabels(in, path.string());
}

void WriteReddLabels(const std::filesystem::path& path,
                     const ChannelLabels& labels) {
  std::string out;
  for (const auto& [ch, name] : labels) {
    out += std::to_string(ch) + " " + name + "\n";
  }
  WriteTextFile(path, out);
}

void AlignSeries(std::vector<PowerSeries*> series) {
  if (series.empty()) return;
  const std::int64_t interval = series.front()->interval;
  std::int64_t begin = series.front()->start_time;
  std::int64_t end = series.front()->TimeAt(series.front()->size());
  for (const PowerSeries* s : series) {
    if (s->interval != interval ||
        (s->start_time - series.front()->start_time) % interval != 0) {
      throw Error(ErrorCode::kAlignment,
                  "series do not share an interval and grid phase");
    }
    begin = std::max(begin, s->start_time);
    end = std::min(end, s->TimeAt(s->size()));
  }
  if (end < begin) end = begin;
  for (PowerSeries* s : series) {
    const auto first = static_cast<std::size_t>((begin - s->start_time) / interval);
    const auto count = static_cast<std::size_t>((end - begin) / interval);
    *s = s->Slice(first, first + count);
  }
}

LabeledDataset LoadHouse(const std::filesystem::path& dir,
                         std::int64_t interval) {
  const ChannelLabels labels = LoadReddLabels(dir / "labels.dat");
  std::vector<PowerSeries> mains;
  LabeledDataset data;
  for (const auto& [ch, name] : labels) {
    PowerSeries s = LoadReddChannel(
        dir / ("channel_" + std::to_string(ch) + ".dat"), interval);
    if (name == "mains") {
      mains.push_back(std::move(s));
      continue;
    }
    std::string id = name;
    if (data.Find(id) != nullptr) id += "_" + std::to_string(ch);
    data.appliances.push_back(ApplianceChannel{id, std::move(s), std::nullopt});
  }
  if (mains.empty()) {
    throw Error(ErrorCode::kValidation,
                dir.string() + "/labels.dat names no mains channel");
  }
  std::vector<PowerSeries*> all;
  for (auto& m : mains) all.push_back(&m);
  for (auto& a : data.appliances) all.push_back(&a.power);
  AlignSeries(all);

  data.aggregate = mains.front();
  for (std::size_t i = 1; i < mains.size(); ++i) {
    for (std::size_t t = 0; t < data.aggregate.size(); ++t) {
      data.aggregate.values[t] += mains[i].values[t];
    }
  }

  const auto truth_path = dir / kTruthFile;
  if (std::filesystem::exists(truth_path)) {
    for (auto& seq : ParseStatesCsv(ReadTextFile(truth_path))) {
      for (auto& a : data.appliances) {
        if (a.id == seq.appliance_id && seq.size() == a.power.size()) {
          a.truth = std::move(seq);
          break;
        }
      }
    }
  }
  data.Validate(false);
  return data;
}

void WriteHouse(const std::filesystem::path& dir, const LabeledDataset& data) {
  ChannelLabels labels{{1, "mains"}};
  WriteReddChannel(dir / "channel_1.dat", data.aggregate);
  int ch = 2;
  for (const auto& a : data.appliances) {
    labels.emplace_back(ch, a.id);
    WriteReddChannel(dir / ("channel_" + std::to_string(ch) + ".dat"), a.power);
    ++ch;
  }
  WriteReddLabels(dir / "labels.dat", labels);
  if (data.HasTruth()) {
    WriteTextFile(dir / kTruthFile, FormatStatesCsv(data.TruthStates()));
  }
}

}  // namespace switchdp
