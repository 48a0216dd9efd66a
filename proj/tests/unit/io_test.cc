// Copyright 2026 The SCG Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "doctest.h"
#include "scg/equilibria.h"
#include "scg/errors.h"
#include "scg/io.h"
#include "test_util.h"

namespace scg::io {
namespace {

using scg::testing::R;
using scg::testing::Rs;

void CheckSameGame(const GameWithDefaults& a, const GameWithDefaults& b) {
  REQUIRE(a.game.strategy_counts() == b.game.strategy_counts());
  CHECK(a.game.orientation() == b.game.orientation());
  for (const auto& p : scg::testing::AllProfiles(a.game)) {
    CHECK(a.game.Evaluate(p).costs == b.game.Evaluate(p).costs);
    CHECK(a.game.SocialCost(p) == b.game.SocialCost(p));
  }
}

TEST_CASE("rationals") {
  CHECK(RationalFrom(Json("3/6")) == R(1, 2));
  CHECK(RationalFrom(Json(-4)) == -4);
  CHECK(ToJson(R(2)) == "2/1");
  CHECK_THROWS_AS(RationalFrom(Json(0.5)), ParseError);
  CHECK_THROWS_AS(RationalFrom(Json("1/0")), ParseError);
}

TEST_CASE("table game format") {
  const Json j = Json::parse(R"({"players": 2, "strategies": [2, 1], "costs": [[1, 2], ["1/2", 0]],
                                "social": "sum", "orientation": "min"})");
  const auto inst = ParseInstance(j);
  CHECK(inst.kind == InstanceKind::kTable);
  const auto g = inst.Build();
  CHECK(g.game.SocialCost(Profile{1, 0}) == R(1, 2));
  CHECK(inst.digest.size() == 16);
  CHECK(ParseInstance(Json::parse(j.dump())).digest == inst.digest);
  Json bad = j;
  bad["costs"].erase(1);
  CHECK_THROWS_AS(ParseInstance(bad), ParseError);
  Json no_kind = Json::parse(R"({"foo": 1})");
  CHECK_THROWS_AS(ParseInstance(no_kind), ParseError);
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(1);
  {
    const auto s = RandomWeightConditionInstance(rng, 2, 3);
    const auto back = SchedulingFrom(Json::parse(ToJson(s).dump()));
    CHECK(back.p == s.p);
    CHECK(back.weights == s.weights);
    CheckSameGame(SchedulingGame(s), ParseInstance(ToJson(s)).Build());
    const auto q = RandomFlowTimeInstance(rng, Environment::kQ, 2, 3);
    CHECK(SchedulingFrom(ToJson(q)).p == q.p);
    const auto p = SchedulingInstance::Identical(3, Rs({1, 2}));
    CHECK(SchedulingFrom(ToJson(p)).env == Environment::kP);
  }
  {
    CongestionGame cg{2, {LinearDelay{R(1, 2), R(1)}, LinearDelay{}}, {{{0}, {1}}, {{0, 1}}}};
    CheckSameGame(MakeCongestionGame(cg), ParseInstance(ToJson(cg)).Build());
  }
  {
    const auto a = MakeAuction(Rs({1, 2, 2}));
    CheckSameGame(AuctionGame(a), ParseInstance(ToJson(a)).Build());
  }
  {
    const auto u = RandomCoverageGame(rng, 4, 3, 2, 2, PayoffRule::kFairShare);
    CheckSameGame(MakeUtilityGame(u), ParseInstance(ToJson(u)).Build());
  }
  {
    const auto s = SchedulingInstance::Identical(2, Rs({1, 2}));
    const auto g = SchedulingGame(s);
    const auto table = ParseInstance(TableGameJson(g.game, g.defaults)).Build();
    CheckSameGame(g, table);
    CHECK(ScgCost(table.game, table.defaults, 0, Profile{0, 0}) == ScgCost(g.game, g.defaults, 0, Profile{0, 0}));
  }
}

TEST_CASE("set function keys") {
  const Json j = Json::parse(R"({"ground": 1, "values": {"0": 0, "1": "3/2"}, "strategies": [[0, 1]]})");
  const auto u = UtilityFrom(j);
  CHECK(u.v(1) == R(3, 2));
  Json missing = j;
  missing["values"].erase("1");
  CHECK_THROWS_AS(UtilityFrom(missing), ParseError);
  Json bad = j;
  bad["values"]["x"] = 1;
  bad["values"].erase("1");
  CHECK_THROWS_AS(UtilityFrom(bad), ParseError);
}

TEST_CASE("certificates and alpha files") {
  SmoothnessCertificate cert{R(17, 5), R(2, 5), MixedStrategyProfile::Uniform({2, 1}), Profile{1, 0},
                             SmoothnessFlavor::kFriendship};
  const Json j = ToJson(cert);
  CHECK(j["lambda"] == "17/5");
  const auto back = CertificateFrom(j);
  CHECK(back.lambda == cert.lambda);
  CHECK(back.mu == cert.mu);
  CHECK(back.sstar == cert.sstar);
  CHECK(back.flavor == cert.flavor);
  CHECK(ToJson(back.sbar) == j["sbar"]);
  const auto pure = CertificateFrom(Json::parse(R"({"lambda": 2, "mu": "1/2", "sstar": [0, -1]})"));
  CHECK(pure.sbar.is_pure());
  CHECK(AltruismFrom(Json::parse(R"(["1/2", 0])")).values() == std::vector<Rational>{R(1, 2), R(0)});
  CHECK(AltruismFrom(Json::parse(R"({"alpha": [2], "extended": true})")).extended());
  CHECK_THROWS(AltruismFrom(Json::parse(R"([2])")));
  const auto f = FriendshipFrom(Json::parse(R"([[1, "1/3"], [0, 1]])"));
  CHECK(f(0, 1) == R(1, 3));
  CHECK(FriendshipFrom(ToJson(f)).rows() == f.rows());
}

}  // namespace
}  // namespace scg::io
