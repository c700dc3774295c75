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
#include "isn/game.hpp"
#include "test_support.hpp"

namespace isn {
namespace {

using testing::G3;

TEST_CASE("MakeIsnGame subtracts O from T") {
  ISNGame g = MakeIsnGame(2, {{Coalition{0, 1}, 100}}, {{Coalition{0, 1}, 80}});
  CHECK(g.value(Coalition{0, 1}) == 20);

  ISNGame g3 = G3();
  CHECK(g3.value(Coalition{0, 1}) == 10);
  CHECK(g3.value(Coalition{0, 2}) == 4);
  CHECK(g3.value(Coalition{1, 2}) == 6);
  CHECK(g3.value(Coalition{0, 1, 2}) == 12);
}

TEST_CASE("singletons and the empty coalition are worth zero") {
  ISNGame one = MakeIsnGame(1, {}, {});
  CHECK(one.value(Coalition{}) == 0);
  CHECK(one.value(Coalition{0}) == 0);

  ISNGame g3 = G3();
  CHECK(g3.value(Coalition{2}) == 0);
  CHECK(g3.value(Coalition{}) == 0);

  // Singleton entries in the tables are ignored.
  ISNGame g = MakeIsnGame(2, {{Coalition{0}, 50}, {Coalition{0, 1}, 106}},
                          {{Coalition{0}, 50}, {Coalition{0, 1}, 44}});
  CHECK(g.value(Coalition{0}) == 0);
  CHECK(g.value(Coalition{0, 1}) == 62);
}

TEST_CASE("normalization holds for every random game up to eight agents") {
  testing::Rng rng(7);
  for (unsigned n = 1; n <= 8; ++n) {
    ISNGame g = testing::RandomGame(rng, n, -20, 20);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      if (std::popcount(m) <= 1) CHECK(g.value(Coalition(m)) == 0);
    }
  }
}

TEST_CASE("MakeIsnGame error paths") {
  CoalitionTable t{{Coalition{0, 1}, 1}, {Coalition{0, 2}, 1}, {Coalition{1, 2}, 1}};
  CoalitionTable o = t;
  try {
    MakeIsnGame(3, t, o);
    FAIL("expected MissingCoalition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMissingCoalition);
  }
  CoalitionTable bad{{Coalition{0, 5}, 1}};
  try {
    MakeIsnGame(2, bad, {});
    FAIL("expected AgentCountMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAgentCountMismatch);
  }
  try {
    MakeIsnGame(17, {}, {});
    FAIL("expected BoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBoundExceeded);
  }
}

TEST_CASE("value rejects agents outside the roster") {
  ISNGame g3 = G3();
  try {
    (void)g3.value(Coalition{0, 3});
    FAIL("expected UnknownAgent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownAgent);
  }
}

TEST_CASE("CheckSuperadditive") {
  CHECK(CheckSuperadditive(G3()).holds);
  CHECK(CheckSuperadditive(MakeIsnGame(1, {}, {})).holds);

  ISNGame bad(3, {{Coalition{0, 1}, 5},
                  {Coalition{0, 2}, 0},
                  {Coalition{1, 2}, 0},
                  {Coalition{0, 1, 2}, 3}});
  SuperadditivityVerdict v = CheckSuperadditive(bad);
  REQUIRE_FALSE(v.holds);
  CHECK(v.counterexample->first == Coalition{0, 1});
  CHECK(v.counterexample->second == Coalition{2});
}

TEST_CASE("CheckSuperadditive agrees with a brute-force double loop") {
  testing::Rng rng(11);
  int violated = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + trial % 6;
    ISNGame g = testing::RandomGame(rng, n, 0, 12);
    SuperadditivityVerdict v = CheckSuperadditive(g);
    CHECK(v.holds == testing::BruteSuperadditive(g));
    if (!v.holds) {
      ++violated;
      auto [s, t] = *v.counterexample;
      CHECK_FALSE(s.intersects(t));
      CHECK(g.value(s | t) < g.value(s) + g.value(t));
    }
  }
  CHECK(violated > 0);
}

TEST_CASE("Subgame relabels members in ascending order") {
  TableGame sub = Subgame(G3(), Coalition{1, 2});
  CHECK(sub.n_agents() == 2);
  CHECK(sub.value(Coalition{0, 1}) == 6);
  CHECK(sub.value(Coalition{0}) == 0);
}

TEST_CASE("Coalition basics") {
  Coalition s{0, 2, 5};
  CHECK(s.size() == 3);
  CHECK(s.ToString() == "{0,2,5}");
  CHECK(s.members() == std::vector<AgentId>{0, 2, 5});
  CHECK((Coalition::Grand(3) - Coalition{1}) == Coalition{0, 2});
  CHECK_FALSE(s.within(5));
  CHECK(s.within(6));
}

}  // namespace
}  // namespace isn
