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

#include "doctest.h"
#include "scg/errors.h"
#include "scg/game.h"
#include "scg/rational.h"
#include "test_util.h"

namespace scg {
namespace {

using testing::R;
using testing::SumTable;

TEST_CASE("rationals serialize as p/q") {
  CHECK(ToString(R(3)) == "3/1");
  CHECK(ToString(R(-6, 4)) == "-3/2");
  CHECK(ParseRational("6/4") == R(3, 2));
  CHECK(ParseRational(" 7 ") == R(7));
  CHECK(ParseRational("-2/3") == R(-2, 3));
  CHECK_THROWS_AS(ParseRational("1/0"), ParseError);
  CHECK_THROWS_AS(ParseRational("1.5"), ParseError);
  CHECK_THROWS_AS(ParseRational(""), ParseError);
  CHECK(Floor(R(7, 2)) == 3);
  CHECK(Floor(R(-7, 2)) == -4);
}

TEST_CASE("finite game validation") {
  Evaluator eval = [](std::span<const int>) { return Outcome{{Rational(0)}, Rational(0)}; };
  CHECK_THROWS_AS(FiniteGame({}, Orientation::kMinimize, eval), ParameterError);
  CHECK_THROWS_AS(FiniteGame({0}, Orientation::kMinimize, eval), ParameterError);
  CHECK_THROWS_AS(FiniteGame({2}, Orientation::kMinimize, eval, std::vector<Rational>{R(0)}), ParameterError);
  FiniteGame g({2}, Orientation::kMinimize, eval);
  CHECK_THROWS_AS(g.Evaluate(Profile{2}), EvaluationError);
  CHECK_THROWS_AS(g.Evaluate(Profile{kDefault}), EvaluationError);
  CHECK_THROWS_AS(g.Evaluate(Profile{0, 0}), EvaluationError);
  CHECK(g.NumProfiles() == 2);
}

TEST_CASE("profile space is lexicographic with player 0 most significant") {
  ProfileSpace space({2, 3});
  CHECK(space.size() == 6);
  CHECK(space.Index(Profile{1, 0}) == 3);
  CHECK(space.At(5) == Profile{1, 2});
  Profile p{0, 0};
  int count = 1;
  while (space.Next(p)) ++count;
  CHECK(count == 6);
  CHECK_THROWS_AS(ProfileSpace::Checked({10, 10}, 99), BudgetError);
}

TEST_CASE("altruistic extension endpoints and convex combination") {
  // At profile (0, 0): C_1 = 1, C_2 = 3, C = 4.
  auto g = SumTable({2, 2}, {{1, 3}, {2, 2}, {0, 5}, {4, 4}}).game;
  auto zero = AltruisticExtension(g, AltruismVector::Zeros(2));
  auto ones = AltruisticExtension(g, AltruismVector::Uniform(2, R(1)));
  for (const auto& p : testing::AllProfiles(g)) {
    CHECK(zero.Evaluate(p).costs == g.Evaluate(p).costs);
    CHECK(ones.Cost(0, p) == g.SocialCost(p));
    CHECK(ones.Cost(1, p) == g.SocialCost(p));
    CHECK(ones.SocialCost(p) == g.SocialCost(p));
  }
  auto half = AltruisticExtension(g, AltruismVector({R(1, 2), R(0)}));
  CHECK(half.Cost(0, Profile{0, 0}) == R(5, 2));
  CHECK_THROWS_AS(AltruismVector({R(3, 2)}), ParameterError);
  CHECK_NOTHROW(AltruismVector({R(3, 2), R(-1)}, true));
}

TEST_CASE("friendship extension") {
  auto g = SumTable({2, 2}, {{1, 3}, {2, 2}, {0, 5}, {4, 4}}).game;
  auto id = FriendshipExtension(g, FriendshipMatrix::Identity(2));
  auto all = FriendshipExtension(g, FriendshipMatrix::AllOnes(2));
  const AltruismVector a({R(1, 3), R(3, 4)});
  auto via_friendship = FriendshipExtension(g, FriendshipMatrix::FromAltruism(a));
  auto via_altruism = AltruisticExtension(g, a);
  for (const auto& p : testing::AllProfiles(g)) {
    CHECK(id.Evaluate(p).costs == g.Evaluate(p).costs);
    CHECK(all.Cost(0, p) == g.SocialCost(p));
    CHECK(all.Cost(1, p) == g.SocialCost(p));
    CHECK(via_friendship.Evaluate(p).costs == via_altruism.Evaluate(p).costs);
  }
  CHECK_THROWS_AS(FriendshipMatrix({{R(1), R(0)}, {R(0), R(1, 2)}}), ParameterError);
  CHECK_THROWS_AS(FriendshipMatrix({{R(1), R(2)}, {R(0), R(1)}}), ParameterError);
}

TEST_CASE("defaults evaluate through the extended table") {
  // One player with two strategies plus a default costing 0.
  std::vector<Outcome> base{{{R(2)}, R(2)}, {{R(5)}, R(5)}};
  std::vector<Outcome> ext{{{R(2)}, R(2)}, {{R(5)}, R(5)}, {{R(0)}, R(0)}};
  auto gd = MakeTableGame({2}, Orientation::kMinimize, base, std::nullopt, ext);
  CHECK(EvaluateWithDefaults(gd.game, gd.defaults, Profile{1}).social == 5);
  CHECK(EvaluateWithDefaults(gd.game, gd.defaults, Profile{kDefault}).social == 0);
  auto plain = SumTable({2}, {{2}, {5}});
  CHECK_THROWS_AS(EvaluateWithDefaults(plain.game, plain.defaults, Profile{kDefault}), EvaluationError);
  // Extended rows must agree with the base table.
  std::vector<Outcome> bad{{{R(3)}, R(3)}, {{R(5)}, R(5)}, {{R(0)}, R(0)}};
  CHECK_THROWS_AS(MakeTableGame({2}, Orientation::kMinimize, base, std::nullopt, bad), ParameterError);
}

TEST_CASE("weight and sum bounds") {
  std::vector<Outcome> rows{{{R(1), R(1)}, R(3)}, {{R(1), R(1)}, R(2)}};
  auto g = MakeTableGame({2, 1}, Orientation::kMinimize, rows).game;
  const auto table = OutcomeTable::Build(g);
  CHECK(FindSumBoundViolation(table) == Profile{0, 0});
  CHECK(!FindWeightBoundViolation(table, {R(2), R(1)}));
}

TEST_CASE("evaluation is deterministic") {
  auto g = SumTable({2, 2}, {{1, 3}, {2, 2}, {0, 5}, {4, 4}}).game;
  for (const auto& p : testing::AllProfiles(g)) CHECK(g.Evaluate(p).costs == g.Evaluate(p).costs);
}

}  // namespace
}  // namespace scg
