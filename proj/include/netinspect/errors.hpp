// Copyright 2026 The netinspect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETINSPECT_ERRORS_HPP_
#define NETINSPECT_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace netinspect {

// Top-level error classes. They map 1:1 onto the C API status values and
// the CLI exit codes (validation=2, size_cap=3, numeric=4, infeasible=5).
enum class ErrorCode {
  kValidation,
  kSizeCap,
  kNumeric,
  kInfeasibleMode,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail, const std::string& message,
        std::string location = {})
      : std::runtime_error(message),
        code_(code),
        detail_(std::move(detail)),
        location_(std::move(location)) {}

  ErrorCode code() const { return code_; }

  // Short machine-readable tag, e.g. "accuracy_range" or "matrix_too_large".
  const std::string& detail() const { return detail_; }

  // Where in the offending input the problem sits, e.g. "sensors[2]".
  const std::string& location() const { return location_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::string location_;
};

[[noreturn]] inline void throw_validation(std::string detail,
                                          const std::string& message,
                                          std::string location = {}) {
  throw Error(ErrorCode::kValidation, std::move(detail), message,
              std::move(location));
}

}  // namespace netinspect

#endif  // NETINSPECT_ERRORS_HPP_
