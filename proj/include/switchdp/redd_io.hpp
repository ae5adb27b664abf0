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

// REDD low-frequency text format: one `timestamp watts` pair per line in
// channel_N.dat, and labels.dat mapping `N name`. Channels labelled "mains"
// are summed into the aggregate when a whole house directory is loaded.

#ifndef SWITCHDP_REDD_IO_HPP_
#define SWITCHDP_REDD_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "switchdp/dataset.hpp"
#include "switchdp/series.hpp"

namespace switchdp {

// Parses channel text and resamples to `interval` seconds. Buckets are
// anchored at floor(first_timestamp / interval) * interval; each bucket takes
// the mean of its readings and empty buckets repeat the previous bucket.
//
// Errors: kParse (with 1-based line number) for malformed lines or decreasing
// timestamps, kEmptySeries when no readings are present, kValidation for
// negative watts or a non-positive interval.
PowerSeries ParseReddChannel(std::istream& in, std::int64_t interval,
                             const std::string& source = "<stream>");
PowerSeries LoadReddChannel(const std::filesystem::path& path,
                            std::int64_t interval);

std::string FormatReddChannel(const PowerSeries& series);
void WriteReddChannel(const std::filesystem::path& path,
                      const PowerSeries& series);

using ChannelLabels = std::vector<std::pair<int, std::string>>;

ChannelLabels ParseReddLabels(std::istream& in,
                              const std::string& source = "<stream>");
ChannelLabels LoadReddLabels(const std::filesystem::path& path);
void WriteReddLabels(const std::filesystem::path& path,
                     const ChannelLabels& labels);

// Crops every series to the common time range. All series must share an
// interval and a grid phase.
void AlignSeries(std::vector<PowerSeries*> series);

// Reads labels.dat and channel_N.dat from `dir`. When `truth_states.csv`
// exists (written by WriteHouse for synthetic data) ground truth is attached.
LabeledDataset LoadHouse(const std::filesystem::path& dir,
                         std::int64_t interval);

// Writes labels.dat (channel 1 = mains), channel files and, when present,
// truth_states.csv with columns t,appliance,state.
void WriteHouse(const std::filesystem::path& dir, const LabeledDataset& data);

}  // namespace switchdp

#endif  // SWITCHDP_REDD_IO_HPP_
