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

// Social optima, pure Nash enumeration, coarse and mixed equilibrium
// verification, best-response dynamics and empirical price of anarchy.
// Ties are always broken lexicographically (lowest player, lowest strategy).

#ifndef SCG_EQUILIBRIA_H_
#define SCG_EQUILIBRIA_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "scg/distribution.h"
#include "scg/game.h"
#include "scg/rational.h"

namespace scg {

struct OptimumResult {
  Profile profile;
  Rational value;
};

// Lexicographically first profile attaining the optimum of the social cost
// (maximum welfare for payoff games).
OptimumResult SocialOptimum(const FiniteGame& game, std::uint64_t budget = kDefaultBudget);
OptimumResult SocialOptimum(const OutcomeTable& table);

// Every optimal profile, in lexicographic order.
std::vector<Profile> AllOptima(const OutcomeTable& table);

struct NashCheck {
  bool is_nash = true;
  // Lexicographically first profitable deviation when is_nash is false.
  std::optional<int> player;
  std::optional<int> deviation;
};

// Works on games of any size: only unilateral deviations are evaluated.
NashCheck IsPureNash(const FiniteGame& game, std::span<const int> profile);
NashCheck IsPureNash(const OutcomeTable& table, std::uint64_t index);

std::vector<Profile> EnumeratePureNash(const FiniteGame& game, std::uint64_t budget = kDefaultBudget);
std::vector<Profile> EnumeratePureNash(const OutcomeTable& table);

bool IsCoarseEquilibrium(const FiniteGame& game, const FiniteSupportDistribution& sigma);

// Coarse check on the product distribution.
bool IsMixedNash(const FiniteGame& game, const MixedStrategyProfile& mixed);

Rational ExpectedSocialCost(const FiniteGame& game, const FiniteSupportDistribution& sigma);

enum class DynamicsStatus { kConverged, kStepLimit };

struct DynamicsResult {
  std::vector<Profile> trajectory;  // starts with the start profile
  DynamicsStatus status;
  int steps = 0;
};

// Each step moves the lowest-index player that has a strictly improving
// deviation to their lowest-index best response.
DynamicsResult BestResponseDynamics(const FiniteGame& game, const Profile& start, int max_steps);

struct PoaValue {
  enum class Kind { kFinite, kInfinite, kNoEquilibrium };
  Kind kind = Kind::kNoEquilibrium;
  Rational value;  // meaningful for kFinite only

  bool finite() const { return kind == Kind::kFinite; }
  // Finite and <= bound.
  bool AtMost(const Rational& bound) const { return kind == Kind::kFinite && value <= bound; }
};

// C(s) / C(s*) when minimizing, Pi(s*) / Pi(s) when maximizing. A zero
// denominator gives kInfinite unless the numerator is zero too (ratio 1).
PoaValue EfficiencyRatio(Orientation orientation, const Rational& equilibrium_value, const Rational& optimum_value);

PoaValue PurePoa(const FiniteGame& game, std::uint64_t budget = kDefaultBudget);
PoaValue PurePoa(const OutcomeTable& table);

// Combine ratios; kInfinite dominates, kNoEquilibrium is neutral.
PoaValue MaxPoa(const PoaValue& a, const PoaValue& b);

struct EquilibriumReport {
  std::vector<Profile> equilibria;
  std::vector<Rational> equilibrium_costs;
  std::vector<Profile> optima;
  Rational optimum_value;
  PoaValue pure_poa;
};

EquilibriumReport AnalyzeEquilibria(const OutcomeTable& table);

struct PoaSweep {
  PoaValue max_ratio;
  int instances = 0;
  int instances_with_equilibrium = 0;
};

// Empirical lower bound on the pure PoA of a class: the maximum observed
// ratio over the generated instances. Never a claim about the supremum.
PoaSweep SweepPurePoa(const std::function<FiniteGame(int)>& generator, int count,
                      std::uint64_t budget = kDefaultBudget);

}  // namespace scg

#endif  // SCG_EQUILIBRIA_H_
