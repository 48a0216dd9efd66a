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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "scg/equilibria.h"
#include "scg/errors.h"
#include "scg/scheduling.h"
#include "scg/social_contribution.h"
#include "test_util.h"

namespace scg {
namespace {

using testing::R;
using testing::Rs;

std::vector<Schedule> AllSchedules(int m, int n) {
  std::vector<Schedule> out;
  Schedule x(n, 0);
  while (true) {
    out.push_back(x);
    int j = n - 1;
    while (j >= 0 && x[j] == m - 1) x[j--] = 0;
    if (j < 0) break;
    ++x[j];
  }
  return out;
}

Rational BruteOptimum(const SchedulingInstance& inst) {
  std::optional<Rational> best;
  for (const auto& x : AllSchedules(inst.num_machines(), inst.num_jobs())) {
    const Rational c = WeightedSocialCost(inst, x);
    if (!best || c < *best) best = c;
  }
  return *best;
}

TEST_CASE("machine order follows Smith's rule") {
  const auto unit = SchedulingInstance::Identical(1, Rs({1, 1, 1}));
  CHECK(MachineOrder(unit, 0, {2, 0, 1}) == std::vector<int>{0, 1, 2});
  const auto w = SchedulingInstance::Identical(1, Rs({2, 2}), Rs({2, 1}));
  CHECK(MachineOrder(w, 0, {1, 0}) == std::vector<int>{0, 1});
  const auto zero = SchedulingInstance::Identical(1, Rs({1, 1}), Rs({0, 1}));
  CHECK(MachineOrder(zero, 0, {0, 1}) == std::vector<int>{1, 0});
  const auto both_zero = SchedulingInstance::Identical(1, Rs({3, 1}), Rs({0, 0}));
  CHECK(MachineOrder(both_zero, 0, {1, 0}) == std::vector<int>{0, 1});
}

TEST_CASE("completion times and social cost") {
  const auto one = SchedulingInstance::Unrelated({{R(3)}, {R(5)}}, Rs({1}));
  CHECK(CompletionTimes(one, Schedule{1}) == Rs({5}));
  const auto two = SchedulingInstance::Identical(1, Rs({1, 1}));
  CHECK(CompletionTimes(two, Schedule{0, 0}) == Rs({1, 2}));
  CHECK(WeightedSocialCost(two, Schedule{0, 0}) == 3);
  CHECK(WeightedSocialCost(two, Schedule{kDefault, kDefault}) == 0);
  CHECK(CompletionTimes(two, Schedule{kDefault, 0}) == Rs({0, 1}));
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(SchedulingInstance::Unrelated({{R(0)}}, Rs({1})), ParameterError);
  CHECK_THROWS_AS(SchedulingInstance::Unrelated({{R(1)}}, Rs({-1})), ParameterError);
  CHECK_THROWS_AS(SchedulingInstance::Related(Rs({1}), Rs({0}), Rs({1})), ParameterError);
  const auto q = SchedulingInstance::Related(Rs({2, 3}), {R(1), R(2)}, Rs({1, 1}));
  CHECK(q.p[1][1] == R(3, 2));
}

TEST_CASE("weight condition") {
  CHECK(CheckWeightCondition(SchedulingInstance::Identical(2, Rs({1, 3, 2}))).ok);
  CHECK(CheckWeightCondition(SchedulingInstance::Identical(2, Rs({1, 3}), Rs({5, 5}))).ok);
  for (int m = 2; m <= 4; ++m) {
    const auto r = CheckWeightCondition(MakeWeightCounterexample(m).instance);
    CHECK_FALSE(r.ok);
    CHECK(r.witness.has_value());
  }
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) CHECK(CheckWeightCondition(RandomWeightConditionInstance(rng, 3, 4)).ok);
}

TEST_CASE("scheduling game and its scg") {
  const auto inst = SchedulingInstance::Identical(2, Rs({1}));
  const auto g = SchedulingGame(inst);
  CHECK(ProfileSpace(g.game.strategy_counts()).size() == 2);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    const auto unit = RandomFlowTimeInstance(rng, Environment::kP, 2, 4);
    const auto ug = SchedulingGame(unit);
    for (const auto& x : AllSchedules(2, 4)) {
      const auto c = CompletionTimes(unit, x);
      for (int j = 0; j < 4; ++j) {
        int after = 0;
        for (int k = 0; k < 4; ++k) {
          if (k != j && x[k] == x[j] && SmithBefore(unit, x[j], j, k)) ++after;
        }
        const Rational sc = ScgCost(ug.game, ug.defaults, j, x);
        CHECK(sc == c[j] + after * unit.sizes[j]);
        CHECK(sc == ScheduledContribution(unit, x, j));
      }
    }
  }
  for (int t = 0; t < 10; ++t) {
    const auto w = RandomWeightConditionInstance(rng, 2, 3);
    const auto wg = SchedulingGame(w);
    for (const auto& x : AllSchedules(2, 3)) {
      const auto c = CompletionTimes(w, x);
      for (int j = 0; j < 3; ++j) {
        Rational expected = w.weights[j] * c[j];
        for (int k = 0; k < 3; ++k) {
          if (k != j && x[k] == x[j] && SmithBefore(w, x[j], j, k)) expected += w.weights[k] * w.p[x[j]][j];
        }
        CHECK(ScgCost(wg.game, wg.defaults, j, x) == expected);
      }
    }
  }
}

TEST_CASE("smith exchange never improves") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const auto inst = RandomWeightConditionInstance(rng, 1, 5);
    std::vector<int> jobs{0, 1, 2, 3, 4};
    const auto order = MachineOrder(inst, 0, jobs);
    auto cost = [&](const std::vector<int>& seq) {
      Rational time = 0, total = 0;
      for (int j : seq) {
        time += inst.p[0][j];
        total += inst.weights[j] * time;
      }
      return total;
    };
    const Rational base = cost(order);
    for (int a = 0; a + 1 < 5; ++a) {
      auto swapped = order;
      std::swap(swapped[a], swapped[a + 1]);
      CHECK(cost(swapped) >= base);
    }
  }
}

TEST_CASE("cole inequality and smoothness chain") {
  const auto single = SchedulingInstance::Unrelated({{R(3)}}, Rs({2}));
  const auto c = ColeInequality(single, Schedule{0}, Schedule{0});
  CHECK(c.ok);
  CHECK(c.lhs == 12);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 10; ++t) {
    const auto inst = RandomWeightConditionInstance(rng, 3, 4);
    const auto all = AllSchedules(3, 4);
    for (const auto& x : all) {
      for (std::size_t k = 0; k < all.size(); k += 7) {
        CHECK(ColeInequality(inst, x, all[k]).ok);
        CHECK(ScgSmoothnessChain(inst, x, all[k]).ok);
      }
    }
    const auto g = SchedulingGame(inst);
    CHECK(CheckStronglyScBounded(g.game, g.defaults, inst.weights).ok);
  }
}

TEST_CASE("mft schedule") {
  const auto few = SchedulingInstance::Identical(3, Rs({1, 1}));
  const auto x = MftSchedule(few);
  CHECK(x[0] != x[1]);
  CHECK_THROWS_AS(MftSchedule(SchedulingInstance::Unrelated({{R(1)}}, Rs({1}))), UnsupportedError);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const Environment env = t % 2 ? Environment::kQ : Environment::kP;
    const int m = 1 + t % 3;
    const int n = 1 + t % 5;
    const auto inst = RandomFlowTimeInstance(rng, env, m, n);
    const Rational mft = WeightedSocialCost(inst, MftSchedule(inst));
    CHECK(mft == BruteOptimum(inst));
    if (env == Environment::kP) {
      auto sorted = inst;
      std::sort(sorted.sizes.begin(), sorted.sizes.end());
      sorted = SchedulingInstance::Identical(m, sorted.sizes);
      CHECK(OptimalCostClosedForm(sorted) == mft);
    }
  }
}

TEST_CASE("uniform mixed cost") {
  const auto single = SchedulingInstance::Identical(1, Rs({1, 2, 4}));
  CHECK(UniformMixedCostClosedForm(single) == WeightedSocialCost(single, Schedule{0, 0, 0}));
  for (int m = 2; m <= 5; ++m) {
    const auto unit = SchedulingInstance::Identical(m, std::vector<Rational>(m, R(1)));
    CHECK(UniformMixedCostClosedForm(unit) == R(3 * m - 1, 2));
    CHECK(FullyMixedExpectedCost(unit) == R(3 * m - 1, 2));
  }
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    auto inst = RandomFlowTimeInstance(rng, Environment::kP, 2 + t % 2, 4);
    std::sort(inst.sizes.begin(), inst.sizes.end());
    inst = SchedulingInstance::Identical(inst.num_machines(), inst.sizes);
    const Rational closed = UniformMixedCostClosedForm(inst);
    for (const auto& x : AllSchedules(inst.num_machines(), 4)) CHECK(UniformMixedCostDirect(inst, x) == closed);
  }
  CHECK_THROWS_AS(UniformMixedCostClosedForm(SchedulingInstance::Identical(2, Rs({2, 1}))), PreconditionError);
}

TEST_CASE("fully mixed expected cost agrees with enumeration") {
  for (int m = 2; m <= 4; ++m) {
    const auto unit = SchedulingInstance::Identical(m, std::vector<Rational>(m, R(1)));
    const auto g = SchedulingGame(unit);
    const auto mixed = MixedStrategyProfile::Uniform(std::vector<int>(m, m));
    CHECK(ExpectedSocialCost(g.game, mixed.Product()) == FullyMixedExpectedCost(unit));
    CHECK(IsUniformMixedNash(unit));
    CHECK(IsMixedNash(g.game, mixed));
  }
}

TEST_CASE("identical machines bound") {
  CHECK(IdenticalMachinesRobustBound(1) == 1);
  CHECK(IdenticalMachinesRobustBound(4) == R(11, 8));
  std::mt19937_64 rng(41);
  for (int t = 0; t < 10; ++t) {
    auto inst = RandomFlowTimeInstance(rng, Environment::kP, 2, 4);
    std::sort(inst.sizes.begin(), inst.sizes.end());
    inst = SchedulingInstance::Identical(2, inst.sizes);
    for (const auto& x : AllSchedules(2, 4)) CHECK(RpoaPInequality(inst, x).ok);
    const auto cert = RpoaPCertificate(inst);
    const auto g = SchedulingGame(inst);
    CHECK(CheckSmoothnessBase(g.game, cert).ok);
    CHECK(cert.RobustBound(Orientation::kMinimize) >= 1);
    CHECK(SocialCostLowerBound(inst) <= WeightedSocialCost(inst, MftSchedule(inst)));
  }
}

TEST_CASE("linear weights inequality") {
  CHECK(LinearWeightsInequality(Rs({3})));
  CHECK(LinearWeightsInequality(Rs({2, 2, 2, 2})));
  CHECK_THROWS_AS(LinearWeightsInequality(Rs({2, 1})), PreconditionError);
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> d(0, 20);
  for (int t = 0; t < 1000; ++t) {
    std::vector<Rational> p(1 + t % 7);
    for (auto& v : p) v = d(rng);
    std::sort(p.begin(), p.end());
    CHECK(LinearWeightsInequality(p));
  }
}

TEST_CASE("weight counterexample") {
  CHECK_THROWS_AS(MakeWeightCounterexample(1), ParameterError);
  Rational previous = 0;
  for (int m = 2; m <= 4; ++m) {
    const auto ce = MakeWeightCounterexample(m);
    const auto g = SchedulingGame(ce.instance);
    const auto fr = FriendshipExtension(g.game, ce.alpha);
    CHECK(IsPureNash(fr, ce.x).is_nash);
    CHECK(WeightedSocialCost(ce.instance, ce.x) == m * (m + 1) / 2);
    CHECK(WeightedSocialCost(ce.instance, ce.xstar) == m);
    const Rational ratio = WeightedSocialCost(ce.instance, ce.x) / WeightedSocialCost(ce.instance, ce.xstar);
    CHECK(ratio == R(m + 1, 2));
    CHECK(ratio > previous);
    previous = ratio;
  }
}

TEST_CASE("restricted instance forbids machines") {
  const auto inst = RestrictedInstance(Rs({1, 2}), {{true, false}, {true, true}}, Rs({1, 1}));
  CHECK(inst.p[0][1] > 3);
  CHECK(inst.p[1][1] == 2);
  CHECK(BruteOptimum(inst) == 3);
}

}  // namespace
}  // namespace scg
