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

#include "scg/equilibria.h"

#include <string>
#include <utility>

#include "scg/errors.h"

namespace scg {

OptimumResult SocialOptimum(const FiniteGame& game, std::uint64_t budget) {
  return SocialOptimum(OutcomeTable::Build(game, budget));
}

OptimumResult SocialOptimum(const OutcomeTable& table) {
  const Orientation o = table.game().orientation();
  std::uint64_t best = 0;
  for (std::uint64_t idx = 1; idx < table.size(); ++idx) {
    if (StrictlyBetter(o, table.at(idx).social, table.at(best).social)) best = idx;
  }
  return {table.space().At(best), table.at(best).social};
}

std::vector<Profile> AllOptima(const OutcomeTable& table) {
  const Rational value = SocialOptimum(table).value;
  std::vector<Profile> optima;
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    if (table.at(idx).social == value) optima.push_back(table.space().At(idx));
  }
  return optima;
}

NashCheck IsPureNash(const FiniteGame& game, std::span<const int> profile) {
  game.ValidateProfile(profile);
  const Orientation o = game.orientation();
  const Outcome here = game.evaluator()(profile);
  Profile deviated(profile.begin(), profile.end());
  for (int i = 0; i < game.num_players(); ++i) {
    for (int t = 0; t < game.strategy_count(i); ++t) {
      if (t == profile[i]) continue;
      deviated[i] = t;
      const Outcome there = game.evaluator()(deviated);
      if (StrictlyBetter(o, there.costs[i], here.costs[i])) return {false, i, t};
    }
    deviated[i] = profile[i];
  }
  return {};
}

NashCheck IsPureNash(const OutcomeTable& table, std::uint64_t index) {
  const FiniteGame& game = table.game();
  const Orientation o = game.orientation();
  const ProfileSpace& space = table.space();
  const Outcome& here = table.at(index);
  for (int i = 0; i < game.num_players(); ++i) {
    const int own = space.Digit(index, i);
    for (int t = 0; t < game.strategy_count(i); ++t) {
      if (t == own) continue;
      if (StrictlyBetter(o, table.at(table.Deviate(index, i, t)).costs[i], here.costs[i])) return {false, i, t};
    }
  }
  return {};
}

std::vector<Profile> EnumeratePureNash(const FiniteGame& game, std::uint64_t budget) {
  return EnumeratePureNash(OutcomeTable::Build(game, budget));
}

std::vector<Profile> EnumeratePureNash(const OutcomeTable& table) {
  std::vector<Profile> result;
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    if (IsPureNash(table, idx).is_nash) result.push_back(table.space().At(idx));
  }
  return result;
}

bool IsCoarseEquilibrium(const FiniteGame& game, const FiniteSupportDistribution& sigma) {
  const Orientation o = game.orientation();
  const int n = game.num_players();
  std::vector<Outcome> outcomes;
  outcomes.reserve(sigma.size());
  for (const auto& atom : sigma.support()) outcomes.push_back(game.Evaluate(atom.profile));
  for (int i = 0; i < n; ++i) {
    Rational expected = 0;
    for (std::size_t a = 0; a < sigma.size(); ++a) expected += sigma.support()[a].probability * outcomes[a].costs[i];
    for (int t = 0; t < game.strategy_count(i); ++t) {
      Rational deviation = 0;
      for (const auto& atom : sigma.support()) {
        Profile p = atom.profile;
        p[i] = t;
        deviation += atom.probability * game.evaluator()(p).costs[i];
      }
      if (StrictlyBetter(o, deviation, expected)) return false;
    }
  }
  return true;
}

bool IsMixedNash(const FiniteGame& game, const MixedStrategyProfile& mixed) {
  mixed.Validate(game);
  return IsCoarseEquilibrium(game, mixed.Product());
}

Rational ExpectedSocialCost(const FiniteGame& game, const FiniteSupportDistribution& sigma) {
  Rational total = 0;
  for (const auto& atom : sigma.support()) total += atom.probability * game.Evaluate(atom.profile).social;
  return total;
}

DynamicsResult BestResponseDynamics(const FiniteGame& game, const Profile& start, int max_steps) {
  game.ValidateProfile(start);
  const Orientation o = game.orientation();
  DynamicsResult result{{start}, DynamicsStatus::kConverged, 0};
  Profile current = start;
  while (true) {
    const Outcome here = game.evaluator()(current);
    bool moved = false;
    for (int i = 0; i < game.num_players() && !moved; ++i) {
      int best = -1;
      Rational best_cost;
      Profile trial = current;
      for (int t = 0; t < game.strategy_count(i); ++t) {
        trial[i] = t;
        Rational c = t == current[i] ? here.costs[i] : game.evaluator()(trial).costs[i];
        if (best < 0 || StrictlyBetter(o, c, best_cost)) {
          best = t;
          best_cost = std::move(c);
        }
      }
      if (!StrictlyBetter(o, best_cost, here.costs[i])) best = current[i];
      if (best != current[i]) {
        if (result.steps >= max_steps) {
          result.status = DynamicsStatus::kStepLimit;
          return result;
        }
        current[i] = best;
        ++result.steps;
        result.trajectory.push_back(current);
        moved = true;
      }
    }
    if (!moved) return result;
  }
}

PoaValue EfficiencyRatio(Orientation orientation, const Rational& equilibrium_value, const Rational& optimum_value) {
  const Rational& num = orientation == Orientation::kMinimize ? equilibrium_value : optimum_value;
  const Rational& den = orientation == Orientation::kMinimize ? optimum_value : equilibrium_value;
  if (den == 0) {
    if (num == 0) return {PoaValue::Kind::kFinite, Rational(1)};
    return {PoaValue::Kind::kInfinite, Rational(0)};
  }
  return {PoaValue::Kind::kFinite, num / den};
}

PoaValue MaxPoa(const PoaValue& a, const PoaValue& b) {
  if (a.kind == PoaValue::Kind::kNoEquilibrium) return b;
  if (b.kind == PoaValue::Kind::kNoEquilibrium) return a;
  if (a.kind == PoaValue::Kind::kInfinite) return a;
  if (b.kind == PoaValue::Kind::kInfinite) return b;
  return a.value >= b.value ? a : b;
}

PoaValue PurePoa(const FiniteGame& game, std::uint64_t budget) { return PurePoa(OutcomeTable::Build(game, budget)); }

PoaValue PurePoa(const OutcomeTable& table) { return AnalyzeEquilibria(table).pure_poa; }

EquilibriumReport AnalyzeEquilibria(const OutcomeTable& table) {
  EquilibriumReport report;
  const OptimumResult opt = SocialOptimum(table);
  report.optimum_value = opt.value;
  report.optima = AllOptima(table);
  const Orientation o = table.game().orientation();
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    if (!IsPureNash(table, idx).is_nash) continue;
    report.equilibria.push_back(table.space().At(idx));
    report.equilibrium_costs.push_back(table.at(idx).social);
    report.pure_poa = MaxPoa(report.pure_poa, EfficiencyRatio(o, table.at(idx).social, opt.value));
  }
  return report;
}

PoaSweep SweepPurePoa(const std::function<FiniteGame(int)>& generator, int count, std::uint64_t budget) {
  PoaSweep sweep;
  for (int k = 0; k < count; ++k) {
    const PoaValue v = PurePoa(generator(k), budget);
    ++sweep.instances;
    if (v.kind != PoaValue::Kind::kNoEquilibrium) ++sweep.instances_with_equilibrium;
    sweep.max_ratio = MaxPoa(sweep.max_ratio, v);
  }
  return sweep;
}

}  // namespace scg
