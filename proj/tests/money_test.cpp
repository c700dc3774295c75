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

#include "isn/error.hpp"
#include "isn/money.hpp"

namespace isn {
namespace {

TEST_CASE("ParseMoney reads integers, fractions and decimals exactly") {
  CHECK(ParseMoney("12") == 12);
  CHECK(ParseMoney("-3") == -3);
  CHECK(ParseMoney("6/4") == Money(3, 2));
  CHECK(ParseMoney("-1/3") == Money(-1, 3));
  CHECK(ParseMoney("0.5") == Money(1, 2));
  CHECK(ParseMoney("0.1") == Money(1, 10));
  CHECK(ParseMoney("-2.125") == Money(-17, 8));
  CHECK(ParseMoney(".25") == Money(1, 4));
  CHECK(ParseMoney("3.") == 3);
}

TEST_CASE("ParseMoney rejects malformed text") {
  for (const char* bad : {"", "-", "1/0", "a", "1e3", "1.2.3", "1/2/3", ".", "0x10"}) {
    CAPTURE(bad);
    try {
      ParseMoney(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParseError);
    }
  }
}

TEST_CASE("ToString prints lowest terms") {
  CHECK(ToString(Money(26, 6)) == "13/3");
  CHECK(ToString(Money(-4, 2)) == "-2");
  CHECK(ToString(Money(0)) == "0");
}

}  // namespace
}  // namespace isn
