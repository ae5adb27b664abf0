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

#ifndef SWITCHDP_ERROR_HPP_
#define SWITCHDP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace switchdp {

enum class ErrorCode {
  kParse,
  kEmptySeries,
  kValidation,
  kDegenerateCluster,
  kTraining,
  kCapacity,
  kAlignment,
  kReaggregation,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. The code identifies the failure class;
// the message carries the detail (line number, appliance, state, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return "parse error";
    case ErrorCode::kEmptySeries:
      return "empty series";
    case ErrorCode::kValidation:
      return "validation error";
    case ErrorCode::kDegenerateCluster:
      return "degenerate cluster";
    case ErrorCode::kTraining:
      return "training error";
    case ErrorCode::kCapacity:
      return "capacity error";
    case ErrorCode::kAlignment:
      return "alignment error";
    case ErrorCode::kReaggregation:
      return "reaggregation error";
    case ErrorCode::kIo:
      return "io error";
  }
  return "error";
}

}  // namespace switchdp

#endif  // SWITCHDP_ERROR_HPP_
