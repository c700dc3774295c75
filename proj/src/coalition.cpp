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

#include "isn/coalition.hpp"

#include "isn/error.hpp"

namespace isn {

Coalition::Coalition(std::initializer_list<AgentId> members) {
  for (AgentId i : members) {
    if (i >= kMaxAgents) {
      throw Error(ErrorCode::kUnknownAgent,
                  "agent id " + std::to_string(i) + " exceeds 63");
    }
    bits_ |= std::uint64_t{1} << i;
  }
}

Coalition Coalition::FromMembers(const std::vector<AgentId>& members) {
  Coalition c;
  for (AgentId i : members) {
    if (i >= kMaxAgents) {
      throw Error(ErrorCode::kUnknownAgent,
                  "agent id " + std::to_string(i) + " exceeds 63");
    }
    c = c.with(i);
  }
  return c;
}

std::vector<AgentId> Coalition::members() const {
  std::vector<AgentId> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<AgentId>(std::countr_zero(rest)));
  }
  return out;
}

std::string Coalition::ToString() const {
  std::string out = "{";
  bool first = true;
  for (AgentId i : members()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace isn
