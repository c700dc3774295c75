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

#include <doctest.h>

#include <string>

#include "isn/error.hpp"
#include "isn/scenario_io.hpp"
#include "test_support.hpp"

namespace isn {
namespace {

const std::string kData = ISN_TEST_DATA_DIR;

ErrorCode CodeOf(const std::string& text) {
  try {
    ParseScenario(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("scenario accepted");
  return ErrorCode::kParseError;
}

TEST_CASE("tables file loads G3") {
  LoadedScenario s = LoadScenario(kData + "/g3.json");
  CHECK(s.agents == std::vector<std::string>{"A", "B", "C"});
  CHECK_FALSE(s.policy);
  CHECK_FALSE(s.exchange);
  const ISNGame g3 = testing::G3();
  for (std::uint64_t m = 0; m < 8; ++m) {
    CHECK(s.game.value(Coalition(m)) == g3.value(Coalition(m)));
  }
}

TEST_CASE("decimal and fraction strings are exact") {
  LoadedScenario s = LoadScenario(kData + "/g3_prime.json");
  CHECK(s.game.value(Coalition{0, 2}) == 10);
  CHECK(s.game.value(Coalition{1, 2}) == 10);
  LoadedScenario t = ParseScenario(R"({"agents": ["A", "B"],
      "tables": {"T": {"A,B": "0.1"}, "O": {"B, A": "1/30"}}})");
  CHECK(t.game.value(Coalition{0, 1}) == Money(1, 15));
}

TEST_CASE("exchange file loads scenario W") {
  LoadedScenario s = LoadScenario(kData + "/w.json");
  REQUIRE(s.exchange);
  CHECK(s.exchange->streams.size() == 2);
  CHECK(s.game.value(Coalition{0, 1}) == 62);
}

TEST_CASE("policies load in file order") {
  LoadedScenario s = LoadScenario(kData + "/g3_prohibit.json");
  REQUIRE(s.policy);
  REQUIRE(s.policy->entries().size() == 1);
  CHECK(s.policy->entries()[0].first == Coalition{0, 1});
  CHECK(s.policy->entries()[0].second == PolicyLabel::kProhibited);
}

TEST_CASE("overlapping promoted groups are a validation error") {
  try {
    LoadScenario(kData + "/g3_overlap.json");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kValidationError);
    CHECK(std::string(e.what()).find("PolicyInvalid") != std::string::npos);
  }
}

TEST_CASE("parse errors name the line or field") {
  try {
    LoadScenario(kData + "/malformed.json");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParseError);
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  try {
    ParseScenario(R"({"agents": ["A", "B"], "tables": {"T": {"A,B": 1.5}, "O": {"A,B": 0}}})");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParseError);
    CHECK(std::string(e.what()).find("tables.T[\"A,B\"]") != std::string::npos);
  }
  CHECK(CodeOf(R"({"agents": ["A", "B"], "tables": {"T": {"A,Z": 1}, "O": {}}})") ==
        ErrorCode::kParseError);
  CHECK(CodeOf(R"({"agents": ["A", "B"]})") == ErrorCode::kParseError);
  CHECK(CodeOf(R"({"agents": ["A", "B"], "tables": {"T": {}, "O": {}},
                  "exchange": {"streams": []}})") == ErrorCode::kParseError);
  CHECK(CodeOf(R"({"agents": ["A", "B"], "exchange": {"streams": [
      {"firm": "A", "resource": "r", "kind": "gift", "quantity": 1}]}})") ==
        ErrorCode::kParseError);
}

TEST_CASE("model-level rejections become validation errors") {
  CHECK(CodeOf(R"({"agents": ["A", "A"], "tables": {"T": {}, "O": {}}})") ==
        ErrorCode::kValidationError);
  // Missing coalition A,B in O.
  CHECK(CodeOf(R"({"agents": ["A", "B"], "tables": {"T": {"A,B": 1}, "O": {}}})") ==
        ErrorCode::kValidationError);
  // Negative quantity.
  CHECK(CodeOf(R"({"agents": ["A", "B"], "exchange": {"streams": [
      {"firm": "A", "resource": "r", "kind": "waste-offer", "quantity": -1}]}})") ==
        ErrorCode::kValidationError);
  CHECK(CodeOf(R"({"agents": ["A", "B", "C"], "tables": {"T": {"A,B": 1, "A,C": 1,
      "B,C": 1, "A,B,C": 1}, "O": {"A,B": 0, "A,C": 0, "B,C": 0, "A,B,C": 0}},
      "policy": {"promoted": ["A"]}})") == ErrorCode::kValidationError);
}

TEST_CASE("too many agents is a bound error") {
  try {
    LoadScenario(kData + "/too_many_agents.json");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBoundExceeded);
  }
}

TEST_CASE("coalition keys") {
  const std::vector<std::string> agents{"A", "B", "C"};
  CHECK(ParseCoalitionKey(agents, "C, A") == Coalition{0, 2});
  CHECK(ParseCoalitionKey(agents, "") == Coalition{});
  CHECK(CoalitionKey(agents, Coalition{0, 2}) == "A,C");
  CHECK(CoalitionLabel(agents, Coalition{1}) == "{B}");
  CHECK_THROWS_AS(ParseCoalitionKey(agents, "A,A"), Error);
}

}  // namespace
}  // namespace isn
