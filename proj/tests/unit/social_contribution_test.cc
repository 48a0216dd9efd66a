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
#include "scg/congestion.h"
#include "scg/equilibria.h"
#include "scg/errors.h"
#include "scg/scheduling.h"
#include "scg/social_contribution.h"
#include "test_util.h"

namespace scg {
namespace {

using testing::R;

// Random table game with a default: costs in [0, 6], social = sum, and the
// default removes the player (cost 0) from a random extended table.
GameWithDefaults RandomGameWithDefaults(std::mt19937_64& rng, std::vector<int> counts) {
  std::vector<int> ext_counts = counts;
  for (int& k : ext_counts) ++k;
  ProfileSpace ext(ext_counts);
  ProfileSpace base(counts);
  std::uniform_int_distribution<int> cost(0, 6);
  std::vector<Outcome> ext_rows(ext.size());
  for (std::uint64_t idx = 0; idx < ext.size(); ++idx) {
    const Profile p = ext.At(idx);
    for (std::size_t i = 0; i < counts.size(); ++i) {
      ext_rows[idx].costs.push_back(p[i] == counts[i] ? Rational(0) : Rational(cost(rng)));
    }
    ext_rows[idx].social = Sum(ext_rows[idx].costs);
  }
  std::vector<Outcome> rows;
  Profile p(counts.size(), 0);
  do rows.push_back(ext_rows[ext.Index(p)]);
  while (base.Next(p));
  return MakeTableGame(counts, Orientation::kMinimize, rows, std::nullopt, ext_rows);
}

GameWithDefaults SmallCongestion() {
  // Two players, two identity resources; player 0 picks {0} or {1}, player 1
  // picks {0} or {0, 1}.
  return MakeCongestionGame(CongestionGame::Identity(2, {{{0}, {1}}, {{0}, {0, 1}}}));
}

SmoothnessCertificate Cert(Rational lambda, Rational mu, const Profile& sstar,
                           SmoothnessFlavor flavor = SmoothnessFlavor::kBase) {
  return SmoothnessCertificate{std::move(lambda), std::move(mu), MixedStrategyProfile::Pure(sstar), sstar, flavor};
}

TEST_CASE("scg cost on one machine with two unit jobs") {
  const auto inst = SchedulingInstance::Identical(1, {R(1), R(1)});
  const auto g = SchedulingGame(inst);
  CHECK(ScgCost(g.game, g.defaults, 0, Profile{0, 0}) == 2);
  CHECK(ScgCost(g.game, g.defaults, 1, Profile{0, 0}) == 2);
  const auto scg = CorrespondingScg(g.game, g.defaults);
  CHECK(scg.game.Cost(0, Profile{0, 0}) == 2);
  CHECK(scg.game.SocialCost(Profile{0, 0}) == 3);
  CHECK(Sum(scg.game.Evaluate(Profile{0, 0}).costs) == 4);
}

TEST_CASE("scg of a single player game") {
  std::vector<Outcome> base{{{R(2)}, R(2)}, {{R(5)}, R(5)}};
  std::vector<Outcome> ext{{{R(2)}, R(2)}, {{R(5)}, R(5)}, {{R(0)}, R(1)}};
  auto gd = MakeTableGame({2}, Orientation::kMinimize, base, std::nullopt, ext);
  CHECK(ScgCost(gd.game, gd.defaults, 0, Profile{0}) == 1);
  CHECK(ScgCost(gd.game, gd.defaults, 0, Profile{1}) == 4);
  auto none = testing::SumTable({2}, {{2}, {5}});
  CHECK_THROWS_AS(CorrespondingScg(none.game, none.defaults), PreconditionError);
}

TEST_CASE("scg identity and idempotence") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = RandomGameWithDefaults(rng, {2, 2, 2});
    const auto scg = CorrespondingScg(g.game, g.defaults);
    CHECK(CheckIsScg(scg.game, scg.defaults).ok);
    const auto again = CorrespondingScg(scg.game, scg.defaults);
    for (const auto& p : testing::AllProfiles(g.game)) {
      CHECK(again.game.Evaluate(p).costs == scg.game.Evaluate(p).costs);
      for (int i = 0; i < 3; ++i) {
        Profile off = p;
        off[i] = kDefault;
        CHECK(scg.game.Cost(i, p) + EvaluateWithDefaults(g.game, g.defaults, off).social == g.game.SocialCost(p));
      }
    }
    CHECK(CheckAltruismIndependenceIdentity(scg.game, scg.defaults).ok);
  }
}

TEST_CASE("sc-boundedness and strong sc-boundedness of congestion games") {
  const auto g = SmallCongestion();
  CHECK(CheckScBounded(g.game, g.defaults).ok);
  const auto strong = CheckStronglyScBounded(g.game, g.defaults, {R(1), R(1)});
  CHECK(strong.ok);
  const auto id = CheckAltruismIndependenceIdentity(g.game, g.defaults);
  CHECK_FALSE(id.ok);
  CHECK_FALSE(id.is_scg);
  CHECK(id.player.has_value());
}

TEST_CASE("strong sc-boundedness reports the lowest violated condition") {
  // One player whose default still costs 1: condition 1 fails.
  std::vector<Outcome> base{{{R(2)}, R(2)}};
  std::vector<Outcome> ext{{{R(2)}, R(2)}, {{R(1)}, R(1)}};
  auto gd = MakeTableGame({1}, Orientation::kMinimize, base, std::nullopt, ext);
  const auto r = CheckStronglyScBounded(gd.game, gd.defaults, {R(1)});
  CHECK_FALSE(r.ok);
  CHECK(r.condition == 1);
  CHECK_THROWS_AS(CheckStronglyScBounded(gd.game, gd.defaults, {R(0)}), ParameterError);
  // Player 0 entering lowers player 1's cost: condition 2.
  std::vector<Outcome> base2{{{R(1), R(1)}, R(2)}};
  // Extended space 2 x 2; index 1 is the default of each player.
  std::vector<Outcome> ext2{{{R(1), R(1)}, R(2)}, {{R(3), R(0)}, R(3)}, {{R(0), R(4)}, R(4)}, {{R(0), R(0)}, R(0)}};
  auto g2 = MakeTableGame({1, 1}, Orientation::kMinimize, base2, std::nullopt, ext2);
  const auto r2 = CheckStronglyScBounded(g2.game, g2.defaults, {R(1), R(1)});
  CHECK_FALSE(r2.ok);
  CHECK(r2.condition == 2);
  CHECK(*r2.player == 0);
  CHECK(*r2.other == 1);
}

TEST_CASE("altruistic smoothness with alpha zero equals the base check at s*") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = RandomGameWithDefaults(rng, {2, 2, 2});
    const auto opt = SocialOptimum(g.game);
    for (const auto& [l, m] : std::vector<std::pair<Rational, Rational>>{{R(1), R(0)}, {R(2), R(1, 2)}, {R(5, 3), R(1, 3)}}) {
      const auto base = CheckSmoothnessBase(g.game, Cert(l, m, opt.profile));
      const auto alt = CheckSmoothnessAltruistic(g.game, AltruismVector::Zeros(3),
                                                 Cert(l, m, opt.profile, SmoothnessFlavor::kAltruistic));
      if (AllOptima(OutcomeTable::Build(g.game)).size() == 1) CHECK(base.ok == alt.ok);
      if (base.ok) CHECK(alt.ok);
    }
  }
}

TEST_CASE("friendship smoothness with identity equals the base check") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = RandomGameWithDefaults(rng, {2, 2});
    const auto opt = SocialOptimum(g.game);
    SmoothnessCertificate cert{R(3, 2), R(1, 4), MixedStrategyProfile::Uniform({2, 2}), opt.profile,
                               SmoothnessFlavor::kBase};
    const auto base = CheckSmoothnessBase(g.game, cert);
    cert.flavor = SmoothnessFlavor::kFriendship;
    const auto fr = CheckSmoothnessFriendship(g.game, FriendshipMatrix::Identity(2), {R(1), R(1)}, cert);
    CHECK(base.ok == fr.ok);
    if (!base.ok) CHECK(*base.violating == *fr.violating);
  }
}

TEST_CASE("certificate preconditions") {
  const auto g = SmallCongestion();
  const auto opt = SocialOptimum(g.game).profile;
  CHECK_THROWS_AS(CheckSmoothnessBase(g.game, Cert(R(1), R(1), opt)), ParameterError);
  CHECK_THROWS_AS(CheckSmoothnessBase(g.game, Cert(R(-1), R(0), opt)), ParameterError);
  CHECK_THROWS_AS(CheckSmoothnessBase(g.game, Cert(R(2), R(0), Profile{1, 1})), PreconditionError);
  CHECK_THROWS_AS(CheckSmoothnessBase(g.game, Cert(R(2), R(0), opt, SmoothnessFlavor::kAltruistic)),
                  ParameterError);
}

TEST_CASE("a violated certificate carries its witness") {
  const auto g = SmallCongestion();
  const auto scg = CorrespondingScg(g.game, g.defaults);
  const auto opt = SocialOptimum(g.game).profile;
  CHECK(CheckSmoothnessBase(scg.game, Cert(R(17, 5), R(2, 5), opt)).ok);
  const auto small = CheckSmoothnessBase(scg.game, Cert(R(1, 10), R(0), opt));
  CHECK_FALSE(small.ok);
  REQUIRE(small.violating.has_value());
  CHECK(small.lhs > small.rhs);
}

TEST_CASE("robust bound of a single-profile game") {
  auto g = testing::SumTable({1, 1}, {{2, 3}}).game;
  const auto r = RobustPoaBound(g, {MixedStrategyProfile::Pure({0, 0})}, DeviationModel{});
  CHECK(r.status == RobustPoaResult::Status::kOk);
  CHECK(r.attained);
  CHECK(r.value == 1);
  CHECK(r.lambda == 1);
  CHECK(r.mu == 0);
}

TEST_CASE("robust bound degenerate and validated") {
  auto g = testing::SumTable({2}, {{0}, {1}}).game;
  CHECK(RobustPoaBound(g, {MixedStrategyProfile::Pure({0})}, DeviationModel{}).status ==
        RobustPoaResult::Status::kDegenerate);
  CHECK_THROWS_AS(RobustPoaBound(g, {}, DeviationModel{}), ParameterError);
}

// For a fixed mu the least feasible lambda is explicit; sweep mu on a grid.
Rational GridOracle(const OutcomeTable& table, const std::vector<Rational>& d, const Rational& optimum) {
  std::optional<Rational> best;
  auto consider = [&](const Rational& mu) {
    Rational lambda = 0;
    for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
      const Rational need = (d[idx] - mu * table.at(idx).social) / optimum;
      if (need > lambda) lambda = need;
    }
    const Rational value = lambda / (1 - mu);
    if (!best || value < *best) best = value;
  };
  for (int k = -2000; k < 1000; ++k) consider(R(k, 1000));
  for (int k = -1000; k < -20; ++k) consider(R(k, 10));
  return *best;
}

TEST_CASE("robust bound agrees with a grid oracle on random 2x2x2 games") {
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const FiniteGame g = testing::RandomSumGame(rng, {2, 2, 2}, 6);
    const auto table = OutcomeTable::Build(g);
    const auto opt = SocialOptimum(table);
    if (opt.value == 0) continue;
    const auto sbar = MixedStrategyProfile::Pure(opt.profile);
    const auto r = RobustPoaBound(table, {sbar}, DeviationModel{});
    REQUIRE(r.status == RobustPoaResult::Status::kOk);
    const Rational oracle = GridOracle(table, DeviationSums(table, DeviationModel{}, sbar), opt.value);
    CHECK(oracle >= r.value);
    CHECK(ToDouble(oracle - r.value) <= 0.02);
    if (r.attained) {
      SmoothnessCertificate cert{r.lambda, r.mu, sbar, opt.profile, SmoothnessFlavor::kBase};
      CHECK(CheckSmoothness(table, DeviationModel{}, cert).ok);
      CHECK(cert.RobustBound(Orientation::kMinimize) == r.value);
    }
    ++compared;
  }
  CHECK(compared > 30);
}

TEST_CASE("robust bound is monotone in the candidate set") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const FiniteGame g = testing::RandomSumGame(rng, {2, 3}, 6);
    const auto table = OutcomeTable::Build(g);
    if (SocialOptimum(table).value == 0) continue;
    std::vector<MixedStrategyProfile> candidates;
    std::optional<Rational> previous;
    for (const auto& p : testing::AllProfiles(g)) {
      candidates.push_back(MixedStrategyProfile::Pure(p));
      const auto r = RobustPoaBound(table, candidates, DeviationModel{});
      if (previous) CHECK(r.value <= *previous);
      previous = r.value;
    }
    candidates.push_back(MixedStrategyProfile::Uniform({2, 3}));
    CHECK(RobustPoaBound(table, candidates, DeviationModel{}).value <= *previous);
  }
}

TEST_CASE("robust bound of congestion scg is at most 17/3") {
  const auto g = SmallCongestion();
  const auto scg = CorrespondingScg(g.game, g.defaults);
  const auto opt = SocialOptimum(g.game).profile;
  const auto r = RobustPoaBound(scg.game, {MixedStrategyProfile::Pure(opt)}, DeviationModel{});
  CHECK(r.value <= R(17, 3));
}

TEST_CASE("robust bound in maximization form") {
  // Welfare 2 at (0), 1 at (1): a one-player payoff game.
  std::vector<Outcome> rows{{{R(2)}, R(2)}, {{R(1)}, R(1)}};
  auto g = MakeTableGame({2}, Orientation::kMaximize, rows).game;
  const auto r = RobustPoaBound(g, {MixedStrategyProfile::Pure({0})}, DeviationModel{});
  REQUIRE(r.status == RobustPoaResult::Status::kOk);
  CHECK(r.value == 1);
  REQUIRE(r.attained);
  SmoothnessCertificate cert{r.lambda, r.mu, MixedStrategyProfile::Pure({0}), {0}, SmoothnessFlavor::kBase};
  CHECK(CheckSmoothnessBase(g, cert).ok);
  CHECK(cert.RobustBound(Orientation::kMaximize) == 1);
}

TEST_CASE("zero-welfare profile with no deviation gain is infeasible") {
  std::vector<Outcome> rows{{{R(2), R(0)}, R(2)}, {{R(0), R(0)}, R(0)}};
  auto g = MakeTableGame({1, 2}, Orientation::kMaximize, rows).game;
  // Deviating to strategy 1 of player 1 keeps welfare 0 at profile (0, 1).
  const auto r = RobustPoaBound(g, {MixedStrategyProfile::Pure({0, 1})}, DeviationModel{});
  CHECK(r.status == RobustPoaResult::Status::kInfeasible);
}

TEST_CASE("reduction transfer on a congestion game") {
  const auto g = SmallCongestion();
  const auto opt = SocialOptimum(g.game).profile;
  const auto cert = Cert(R(17, 5), R(2, 5), opt);
  const auto alt = ReductionTransferCheck(g.game, g.defaults, AltruismVector({R(1, 3), R(1)}), cert);
  CHECK(alt.ok);
  CHECK(alt.failure.empty());
  const FriendshipMatrix alpha({{R(1), R(2, 3)}, {R(1, 5), R(1)}});
  const auto fr = ReductionTransferCheck(g.game, g.defaults, alpha, {R(1), R(1)}, cert);
  CHECK(fr.ok);
  const auto weak = ReductionTransferCheck(g.game, g.defaults, alpha, {R(1), R(1)}, Cert(R(1, 2), R(0), opt));
  CHECK_FALSE(weak.ok);
  CHECK(weak.failure == "certificate does not hold on the social contribution game");
}

TEST_CASE("coarse cost within the robust bound") {
  const auto g = SmallCongestion();
  const auto fr = FriendshipExtension(g.game, FriendshipMatrix::AllOnes(2));
  const auto opt = SocialOptimum(g.game);
  for (const auto& p : EnumeratePureNash(fr)) {
    CHECK(CoarseCostWithinBound(g.game, FiniteSupportDistribution::PointMass(p), R(17, 3), opt.value));
  }
}

TEST_CASE("flavor names round trip") {
  for (auto f : {SmoothnessFlavor::kBase, SmoothnessFlavor::kAltruistic, SmoothnessFlavor::kFriendship}) {
    CHECK(ParseFlavor(FlavorName(f)) == f);
  }
  CHECK_THROWS_AS(ParseFlavor("other"), ParseError);
}

}  // namespace
}  // namespace scg
