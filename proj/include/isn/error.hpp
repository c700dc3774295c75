// Copyright 2026 The ISN Coordination Authors
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

#ifndef ISN_ERROR_HPP
#define ISN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace isn {

enum class ErrorCode {
  kMissingCoalition,
  kAgentCountMismatch,
  kUnknownAgent,
  kBoundExceeded,
  kRosterMismatch,
  kLengthMismatch,
  kInvalidRule,
  kInvalidStream,
  kTargetTooSmall,
  kNonpositiveEpsilon,
  kPolicyInvalid,
  kParseError,
  kValidationError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every library failure is reported through this exception; `code()` lets
// callers (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isn

#endif  // ISN_ERROR_HPP
