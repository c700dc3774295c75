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

#include <numeric>

#include "isn/coordination.hpp"
#include "isn/error.hpp"
#include "isn/solutions.hpp"
#include "test_support.hpp"

namespace isn {
namespace {

using testing::G3;
using testing::G3Prime;
using testing::Q;

Policy MakePolicy(unsigned n, std::vector<Coalition> promoted,
                  std::vector<Coalition> prohibited = {}) {
  Policy p(n);
  for (Coalition g : promoted) p.Label(g, PolicyLabel::kPromoted);
  for (Coalition g : prohibited) p.Label(g, PolicyLabel::kProhibited);
  return p;
}

TEST_CASE("Classify defaults to permitted") {
  Policy p = MakePolicy(3, {Coalition{0, 1}});
  CHECK(Classify(p, Coalition{0, 1}) == PolicyLabel::kPromoted);
  CHECK(Classify(p, Coalition{1, 2}) == PolicyLabel::kPermitted);
  Policy q = MakePolicy(3, {}, {Coalition{0, 1, 2}});
  CHECK(Classify(q, Coalition{0, 1, 2}) == PolicyLabel::kProhibited);
}

TEST_CASE("Policy rejects small, foreign and duplicate groups") {
  Policy p(3);
  CHECK_THROWS_AS(p.Label(Coalition{0}, PolicyLabel::kPromoted), Error);
  CHECK_THROWS_AS(p.Label(Coalition{0, 3}, PolicyLabel::kPromoted), Error);
  p.Label(Coalition{0, 1}, PolicyLabel::kPromoted);
  CHECK_THROWS_AS(p.Label(Coalition{0, 1}, PolicyLabel::kProhibited), Error);
}

TEST_CASE("IncentiveValue") {
  IncentiveNet net(3, {{Coalition{0, 1, 2}, Coalition{}, Q("1/2")}});
  CHECK(IncentiveValue(net, Coalition{0, 1, 2}) == Q("1/2"));
  CHECK(IncentiveValue(net, Coalition{0, 1}) == 0);
  CHECK(IncentiveValue(IncentiveNet(3), Coalition{0, 2}) == 0);
}

TEST_CASE("SynthesizePromotion worked examples") {
  Promotion grand = SynthesizePromotion(G3(), Coalition{0, 1, 2});
  CHECK(grand.iota_min == Q("1/2"));
  REQUIRE(grand.rule);
  CHECK(*grand.rule == MCNetRule{Coalition{0, 1, 2}, Coalition{}, Q("1/2")});
  CoordinatedGame c = Coordinate(G3(), IncentiveNet(3, {*grand.rule}));
  CHECK(IsImplementable(c.coordinated()));
  CHECK(ShapleyBruteforce(c.coordinated()) ==
        Allocation{Q("9/2"), Q("11/2"), Q("5/2")});

  Promotion pair = SynthesizePromotion(G3(), Coalition{0, 1});
  CHECK(pair.iota_min == 0);
  CHECK_FALSE(pair.rule);

  Promotion symmetric = SynthesizePromotion(G3Prime(), Coalition{0, 1, 2});
  CHECK(symmetric.iota_min == 3);

  try {
    SynthesizePromotion(G3(), Coalition{1});
    FAIL("expected TargetTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTargetTooSmall);
  }
}

TEST_CASE("promotion is sound and minimal on random games") {
  testing::Rng rng(47);
  int positive = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 3 + trial % 4;
    ISNGame g = testing::RandomRationalGame(rng, n);
    Coalition target;
    while (target.size() < 2) {
      target = Coalition(static_cast<std::uint64_t>(
          testing::UniformInt(rng, 0, (1 << n) - 1)));
    }
    Promotion p = SynthesizePromotion(g, target);
    IncentiveNet net(n);
    if (p.rule) net.Add(*p.rule);
    CoordinatedGame c = Coordinate(g, net);
    CHECK(IsImplementable(Subgame(c.coordinated(), target)));
    if (sgn(p.iota_min) > 0) {
      ++positive;
      IncentiveNet weaker(n, {{target, g.grand() - target,
                               p.iota_min * Q("999/1000")}});
      CHECK_FALSE(IsImplementable(Subgame(Coordinate(g, weaker).coordinated(), target)));
    }
  }
  CHECK(positive > 0);
}

TEST_CASE("SynthesizeProhibition") {
  auto rule = SynthesizeProhibition(G3(), Coalition{0, 1}, 1);
  REQUIRE(rule);
  CHECK(*rule == MCNetRule{Coalition{0, 1}, Coalition{2}, -11});
  CoordinatedGame c = Coordinate(G3(), IncentiveNet(3, {*rule}));
  CHECK(c.value(Coalition{0, 1}) == -1);

  ISNGame flat(2, {{Coalition{0, 1}, 0}});
  CHECK(SynthesizeProhibition(flat, Coalition{0, 1}, 1)->value == -1);

  TableGame already(2, [](Coalition s) { return s.size() == 2 ? Money(-1) : Money(0); });
  CHECK_FALSE(SynthesizeProhibition(already, Coalition{0, 1}, 1));

  try {
    SynthesizeProhibition(G3(), Coalition{0, 1}, 0);
    FAIL("expected NonpositiveEpsilon");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonpositiveEpsilon);
  }
  try {
    SynthesizeProhibition(G3(), Coalition{0}, 1);
    FAIL("expected TargetTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTargetTooSmall);
  }
}

TEST_CASE("Coordinate adds incentive values everywhere") {
  CoordinatedGame sub = Coordinate(G3(), IncentiveNet(3, {{Coalition{0, 1, 2}, Coalition{}, Q("1/2")}}));
  CHECK(sub.value(Coalition{0, 1, 2}) == Q("25/2"));
  CHECK(sub.value(Coalition{0, 1}) == 10);

  CoordinatedGame same = Coordinate(G3(), IncentiveNet(3));
  for (std::uint64_t m = 0; m < 8; ++m) CHECK(same.value(Coalition(m)) == G3().value(Coalition(m)));

  testing::Rng rng(53);
  for (unsigned n = 1; n <= 8; ++n) {
    ISNGame g = testing::RandomRationalGame(rng, n);
    IncentiveNet net = FromIsnGame(testing::RandomRationalGame(rng, n));
    if (n >= 2) net.Add({Coalition{0}, Coalition{1}, Q("-3/5")});
    CoordinatedGame c = Coordinate(g, net);
    MCNet combined = c.AsMCNet();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Coalition s(m);
      CHECK(c.value(s) == g.value(s) + IncentiveValue(net, s));
      CHECK(combined.Evaluate(s) == c.value(s));
    }
  }

  CHECK_THROWS_AS(Coordinate(G3(), IncentiveNet(4)), Error);
}

TEST_CASE("an exact-group rule changes only that group") {
  for (unsigned n = 2; n <= 5; ++n) {
    const Coalition grand = Coalition::Grand(n);
    for (std::uint64_t t = 0; t <= grand.bits(); ++t) {
      Coalition target(t);
      if (target.size() < 2) continue;
      IncentiveNet net(n, {{target, grand - target, 7}});
      for (std::uint64_t m = 0; m <= grand.bits(); ++m) {
        CHECK(IncentiveValue(net, Coalition(m)) == (m == t ? 7 : 0));
      }
    }
  }
}

TEST_CASE("ValidatePolicy") {
  CHECK(ValidatePolicy(MakePolicy(4, {Coalition{0, 1}, Coalition{2, 3}})).valid);
  PolicyVerdict bad = ValidatePolicy(MakePolicy(3, {Coalition{0, 1}, Coalition{1, 2}}));
  CHECK_FALSE(bad.valid);
  CHECK(bad.overlap->first == Coalition{0, 1});
  CHECK(bad.overlap->second == Coalition{1, 2});
  CHECK(ValidatePolicy(Policy(3)).valid);
}

TEST_CASE("EnforcePolicy worked examples") {
  IncentiveNet promote = EnforcePolicy(G3(), MakePolicy(3, {Coalition{0, 1, 2}}), 1);
  CHECK(promote.rules() ==
        std::vector<MCNetRule>{{Coalition{0, 1, 2}, Coalition{}, Q("1/2")}});

  IncentiveNet prohibit = EnforcePolicy(G3(), MakePolicy(3, {}, {Coalition{0, 1}}), 1);
  CHECK(prohibit.rules() == std::vector<MCNetRule>{{Coalition{0, 1}, Coalition{2}, -11}});

  try {
    EnforcePolicy(G3(), MakePolicy(3, {Coalition{0, 1}, Coalition{1, 2}}), 1);
    FAIL("expected PolicyInvalid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPolicyInvalid);
  }
}

TEST_CASE("a prohibition nested in a promotion is priced in") {
  // Prohibiting {0,1} inside promoted {0,1,2} changes the subgame's Shapley
  // value, so the subsidy must be computed after the tax.
  Policy p = MakePolicy(3, {Coalition{0, 1, 2}}, {Coalition{0, 1}});
  IncentiveNet net = EnforcePolicy(G3(), p, 1);
  CoordinatedGame c = Coordinate(G3(), net);
  CHECK(c.value(Coalition{0, 1}) == -1);
  CHECK(IsImplementable(c.coordinated()));
}

TEST_CASE("disjoint promoted groups are implementable together") {
  testing::Rng rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = 4 + trial % 3;
    ISNGame g = testing::RandomRationalGame(rng, n);
    std::vector<AgentId> ids(n);
    std::iota(ids.begin(), ids.end(), 0U);
    std::shuffle(ids.begin(), ids.end(), rng);
    const int split = testing::UniformInt(rng, 2, static_cast<int>(n) - 2);
    Coalition a = Coalition::FromMembers({ids.begin(), ids.begin() + split});
    Coalition b = Coalition::FromMembers({ids.begin() + split, ids.end()});
    Policy p = MakePolicy(n, {a, b});
    CoordinatedGame c = Coordinate(g, EnforcePolicy(g, p, 1));
    CHECK(IsImplementable(Subgame(c.coordinated(), a)));
    CHECK(IsImplementable(Subgame(c.coordinated(), b)));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Coalition s(m);
      if (s != a && s != b) CHECK(c.value(s) == g.value(s));
    }
  }
}

}  // namespace
}  // namespace isn
