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

#include "isn/error.hpp"

namespace isn {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingCoalition: return "MissingCoalition";
    case ErrorCode::kAgentCountMismatch: return "AgentCountMismatch";
    case ErrorCode::kUnknownAgent: return "UnknownAgent";
    case ErrorCode::kBoundExceeded: return "BoundExceeded";
    case ErrorCode::kRosterMismatch: return "RosterMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kInvalidRule: return "InvalidRule";
    case ErrorCode::kInvalidStream: return "InvalidStream";
    case ErrorCode::kTargetTooSmall: return "TargetTooSmall";
    case ErrorCode::kNonpositiveEpsilon: return "NonpositiveEpsilon";
    case ErrorCode::kPolicyInvalid: return "PolicyInvalid";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace isn
