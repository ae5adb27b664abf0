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

#include <fstream>
#include <sstream>

#include "switchdp/csv_io.hpp"
#include "switchdp/error.hpp"
#include "switchdp/text_format.hpp"

namespace switchdp {

void WriteTextFile(const std::filesystem::path& path,
                   std::string_view content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw Error(ErrorCode::kIo, "cannot create directory " +
                                      path.parent_path().string() + ": " +
                                      ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string FormatStatesCsv(const std::vector<StateSequence>& states) {
  std::string out;
  for (const auto& s : states) {
    out += "# omega " + s.appliance_id + " " + std::to_string(s.omega) + "\n";
  }
  out += "t,appliance,state\n";
  for (const auto& s : states) {
    for (std::size_t t = 0; t < s.states.size(); ++t) {
      out += std::to_string(t) + "," + s.appliance_id + "," +
             std::to_string(s.states[t]) + "\n";
    }
  }
  return out;
}

std::vector<StateSequence> ParseStatesCsv(const std::string& text) {
  std::vector<StateSequence> out;
  auto find = [&](const std::string& id) -> StateSequence* {
    for (auto& s : out) {
      if (s.appliance_id == id) return &s;
    }
    return nullptr;
  };
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::kParse,
                  "states csv line " + std::to_string(line_no) + ": " + why);
    };
    if (line.rfind("# omega ", 0) == 0) {
      std::istringstream ls(line.substr(8));
      std::string id;
      int omega = 0;
      if (!(ls >> id >> omega)) fail("bad omega declaration");
      out.push_back(StateSequence{id, omega, {}});
      continue;
    }
    if (!header_seen) {
      if (line != "t,appliance,state") fail("expected header t,appliance,state");
      header_seen = true;
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) fail("need 3 fields");
    const auto t = ParseInt(std::string_view(line).substr(0, c1));
    const std::string id = line.substr(c1 + 1, c2 - c1 - 1);
    const auto state = ParseInt(std::string_view(line).substr(c2 + 1));
    if (!t || !state) fail("non-integer field");
    StateSequence* seq = find(id);
    if (seq == nullptr) fail("appliance '" + id + "' has no omega declaration");
    if (*t != static_cast<std::int64_t>(seq->states.size())) {
      fail("time index out of order");
    }
    seq->states.push_back(static_cast<int>(*state));
  }
  for (const auto& s : out) s.Validate();
  return out;
}

std::string FormatPowerCsv(const NamedSeries& series) {
  std::string out = "t,appliance,watts\n";
  for (const auto& [id, s] : series) {
    for (std::size_t t = 0; t < s.values.size(); ++t) {
      out += std::to_string(t) + "," + id + "," + FormatDouble(s.values[t]) +
             "\n";
    }
  }
  return out;
}

}  // namespace switchdp
