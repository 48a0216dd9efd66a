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
#include "scg/social_contribution.h"
#include "scg/utility_games.h"
#include "test_util.h"

namespace scg {
namespace {

using testing::R;

SetFunction Squares(int ground) {
  std::vector<Rational> values(std::size_t{1} << ground);
  for (Subset s = 0; s < values.size(); ++s) {
    const int c = __builtin_popcount(s);
    values[s] = c * c;
  }
  return SetFunction(ground, values);
}

TEST_CASE("set functions") {
  CHECK(CheckSubmodular(SetFunction::Cardinality(4)).ok);
  CHECK_FALSE(FindMonotonicityViolation(SetFunction::Cardinality(4)));
  // One client covered by every facility: min(|S|, 1).
  const auto cover = SetFunction::Coverage(3, {0b111}, {R(1)});
  CHECK(cover(0) == 0);
  CHECK(cover(0b101) == 1);
  CHECK(CheckSubmodular(cover).ok);
  const auto sq = CheckSubmodular(Squares(3));
  CHECK_FALSE(sq.ok);
  REQUIRE(sq.witness);
  const auto [a, b, x] = *sq.witness;
  CHECK((a & b) == a);
  CHECK((b & x) == 0);
  CHECK_THROWS_AS(SetFunction(2, {R(0), R(1)}), ParameterError);
  const SetFunction negative(1, {R(0), R(-1)});
  const auto neg = CheckValidUtility(UtilityGame{negative, {{0b0, 0b1}}, PayoffRule::kBasic});
  CHECK_FALSE(neg.ok);
  CHECK(neg.failed == "nonnegative");
  const SetFunction down(1, {R(2), R(1)});
  CHECK(FindMonotonicityViolation(down));
}

TEST_CASE("basic utility games") {
  const auto single = BasicUtilityGame(SetFunction::Cardinality(3), {{0b001, 0b011}});
  const auto g1 = MakeUtilityGame(single);
  CHECK(g1.game.Cost(0, Profile{1}) == 2);
  CHECK(g1.game.orientation() == Orientation::kMaximize);
  const auto cover = SetFunction::Coverage(2, {0b01, 0b11}, {R(1), R(2)});
  const auto two = BasicUtilityGame(cover, {{0b01}, {0b01, 0b10}});
  const auto g2 = MakeUtilityGame(two);
  CHECK(g2.game.Evaluate(Profile{0, 0}).costs[1] == 0);
  CHECK(g2.game.SocialCost(Profile{0, 1}) == 3);
  CHECK(CheckValidUtility(two).ok);
  const auto scg = CorrespondingScg(g2.game, g2.defaults);
  for (const auto& p : testing::AllProfiles(g2.game)) {
    CHECK(scg.game.Evaluate(p).costs == g2.game.Evaluate(p).costs);
  }
  CHECK(CheckAltruismIndependenceIdentity(g2.game, g2.defaults).ok);
  CHECK_THROWS_AS(BasicUtilityGame(Squares(2), {{0b01}, {0b10}}), PreconditionError);
}

TEST_CASE("valid utility failures are reported") {
  const auto basic = BasicUtilityGame(SetFunction::Cardinality(2), {{0b01, 0b10}, {0b01, 0b10}});
  Evaluator inflated = [basic](std::span<const int> profile) {
    Outcome out = EvaluateUtilityGame(basic, profile);
    for (auto& c : out.costs) c *= 2;
    return out;
  };
  FiniteGame game({2, 2}, Orientation::kMaximize, inflated);
  const auto check = CheckValidUtility(basic.v, basic.strategies, game, DefaultStrategyMap::All(2, inflated));
  CHECK_FALSE(check.ok);
  CHECK(check.failed == "sum-bounded");
  CHECK(check.profile.has_value());
  Evaluator deflated = [basic](std::span<const int> profile) {
    Outcome out = EvaluateUtilityGame(basic, profile);
    for (auto& c : out.costs) c /= 2;
    return out;
  };
  FiniteGame low({2, 2}, Orientation::kMaximize, deflated);
  const auto marginal = CheckValidUtility(basic.v, basic.strategies, low, DefaultStrategyMap::All(2, deflated));
  CHECK_FALSE(marginal.ok);
  CHECK(marginal.failed == "marginal");
  CHECK(CheckValidUtility(basic).ok);
}

TEST_CASE("fair share games are valid") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const auto game = RandomCoverageGame(rng, 5, 4, 2 + t % 2, 2, PayoffRule::kFairShare);
    CHECK(CheckValidUtility(game).ok);
    const auto g = MakeUtilityGame(game);
    for (const auto& p : testing::AllProfiles(g.game)) {
      const auto out = g.game.Evaluate(p);
      CHECK(Sum(out.costs) == out.social);
    }
  }
}

TEST_CASE("utility poa certificate and bounds") {
  const auto disjoint = BasicUtilityGame(SetFunction::Cardinality(2), {{0b01}, {0b10}});
  const auto dc = UtilityPoa2Certificate(disjoint);
  CHECK(dc.verdict.ok);
  CHECK(PurePoa(MakeUtilityGame(disjoint).game).value == 1);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> alpha_num(0, 4);
  for (int t = 0; t < 40; ++t) {
    const auto rule = t % 2 ? PayoffRule::kFairShare : PayoffRule::kBasic;
    const auto game = RandomCoverageGame(rng, 6, 5, 1 + t % 3, 2, rule);
    const auto g = MakeUtilityGame(game);
    const auto c = UtilityPoa2Certificate(game);
    CHECK(c.verdict.ok);
    CHECK(c.cert.RobustBound(Orientation::kMaximize) == 2);
    const auto scg = CorrespondingScg(g.game, g.defaults);
    CHECK(CheckValidUtility(game.v, game.strategies, scg.game, scg.defaults).ok);
    const auto poa = PurePoa(g.game);
    CHECK(poa.finite());
    if (poa.finite()) CHECK(poa.value <= 2);
    std::vector<Rational> a(game.num_players());
    for (auto& x : a) x = R(alpha_num(rng), 4);
    const auto ext = AltruisticExtension(g.game, AltruismVector(a));
    const auto ep = PurePoa(ext);
    if (ep.finite()) CHECK(ep.value <= 2);
    CHECK(ReductionTransferCheck(g.game, g.defaults, AltruismVector(a), c.cert).ok);
  }
  const SetFunction down(1, {R(2), R(1)});
  CHECK_THROWS_AS(UtilityPoa2Certificate(UtilityGame{down, {{0b0, 0b1}}, PayoffRule::kBasic}), UnsupportedError);
}

}  // namespace
}  // namespace scg
