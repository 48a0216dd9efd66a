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

// Atomic congestion games with linear delays a_e x + b_e, the reduction to
// identity delays, the inequalities behind the 17/3 bound and the lower
// bound family that makes it tight.

#ifndef SCG_CONGESTION_H_
#define SCG_CONGESTION_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "scg/equilibria.h"
#include "scg/game.h"
#include "scg/rational.h"

namespace scg {

struct LinearDelay {
  Rational a = 1;
  Rational b = 0;
};

// Resources are 0..num_resources-1; strategies[i][t] lists the resources of
// strategy t of player i.
struct CongestionGame {
  int num_resources = 0;
  std::vector<LinearDelay> delays;
  std::vector<std::vector<std::vector<int>>> strategies;

  int num_players() const { return static_cast<int>(strategies.size()); }
  bool identity() const;

  // Throws ParameterError on negative coefficients, unknown resources or a
  // player without strategies.
  void Validate() const;

  static CongestionGame Identity(int resources, std::vector<std::vector<std::vector<int>>> strategies);
};

// x_e(s); players at kDefault use nothing.
std::vector<int> Loads(const CongestionGame& cg, std::span<const int> profile);

std::vector<Rational> PlayerCosts(const CongestionGame& cg, std::span<const int> profile);

Rational CongestionSocialCost(const CongestionGame& cg, std::span<const int> profile);

// sum_e sum_{k=1..x_e} d_e(k).
Rational RosenthalPotential(const CongestionGame& cg, std::span<const int> profile);

// C = sum_i C_i, defaults use no resource.
GameWithDefaults MakeCongestionGame(const CongestionGame& cg);

struct NormalizedCongestion {
  CongestionGame game;
  Rational scale;  // new costs = scale * old costs
};

// Scales all coefficients to integers, then replaces each resource by
// a_e shared identity copies plus, for every player using it, b_e private
// identity resources.
NormalizedCongestion NormalizeToIdentity(const CongestionGame& cg);

// C_i(s) + sum_{e in s_i} x_e(default_i, s_-i), the social contribution
// under identity delays.
Rational IdentityScgCost(const CongestionGame& cg, std::span<const int> profile, int player);

// sum_i C_i(s*_i, s_-i) <= sum_e x*_e (x_e + 1). Identity delays only.
InequalityCheck ChristodoulouInequality(const CongestionGame& cg, std::span<const int> s,
                                        std::span<const int> sstar);

// sum_i Cbar_i(s*_i, s_-i) <= sum_e x*_e (2 x_e + 1). Identity delays only.
InequalityCheck ScgDeviationInequality(const CongestionGame& cg, std::span<const int> s,
                                       std::span<const int> sstar);

// (2/5) a^3 + (17/5) b^2 >= b (a + 1).
bool BiloInequality(const Rational& a, const Rational& b);

// (2/5) x^2 + (17/5) y^2 >= y (2 x + 1), the per-resource step of the bound.
bool BiloResourceInequality(const Rational& x, const Rational& y);

struct LowerBoundFamily {
  int blocks = 0;  // n; the instance has n + 3 blocks
  CongestionGame game;
  Profile s;      // all zeros: the structural strategies
  Profile sstar;  // all ones: the alternative strategies
  FriendshipMatrix alpha;
};

// Blocks B_0..B_{n+2} of players a_k, b_k, c_k (player 3k, 3k+1, 3k+2).
// Strategy 0 is the structural one: a_k {3k, 3k+1, 3k+2}, b_k
// {3k+2, 3k+3}, c_k {3k+3, 3k+4}. Strategy 1 is {3k+6}, {3k+7}, {3k+8}
// for k <= n and C_i(s) fresh resources in the last two blocks.
LowerBoundFamily MakeLowerBoundFamily(int n);

// C(s) = 17n + 45 and C(s*) = 3n + 34.
Rational FamilyEquilibriumCost(int n);
Rational FamilyAlternativeCost(int n);

// Exact social optimum by dynamic programming over players in index order,
// keeping the loads of resources shared with players not yet decided.
// Efficient when every resource is used by players with nearby indices.
// Throws BudgetError if a layer exceeds max_states distinct load vectors.
OptimumResult CongestionOptimumDp(const CongestionGame& cg, std::uint64_t max_states = 1u << 20);

// Every identity-delay game with 1..max_players players, 1..max_strategies
// distinct nonempty strategies each, over `resources` resources, up to
// permutations of players, of each player's strategies and of resources.
std::vector<CongestionGame> EnumerateSmallIdentityGames(int max_players, int max_strategies, int resources);

CongestionGame RandomIdentityGame(std::mt19937_64& rng, int players, int resources, int strategies);

}  // namespace scg

#endif  // SCG_CONGESTION_H_
