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

// Long-format CSV artifacts exchanged between CLI stages.
//
//   states:  `# omega <appliance> <omega>` lines, then header t,appliance,state
//   power:   header t,appliance,watts
//
// t is the sample index. Rows are appliance-major in the order given.

#ifndef SWITCHDP_CSV_IO_HPP_
#define SWITCHDP_CSV_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include "switchdp/series.hpp"

namespace switchdp {

std::string FormatStatesCsv(const std::vector<StateSequence>& states);
std::vector<StateSequence> ParseStatesCsv(const std::string& text);

using NamedSeries = std::vector<std::pair<std::string, PowerSeries>>;

std::string FormatPowerCsv(const NamedSeries& series);

}  // namespace switchdp

#endif  // SWITCHDP_CSV_IO_HPP_
