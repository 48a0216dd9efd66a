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

// Valid and basic utility games over a ground set with a submodular value
// function, and coverage (facility location) instances.

#ifndef SCG_UTILITY_GAMES_H_
#define SCG_UTILITY_GAMES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "scg/game.h"
#include "scg/rational.h"
#include "scg/social_contribution.h"

namespace scg {

using Subset = std::uint32_t;

// V over all subsets of {0, ..., ground - 1}, indexed by bitmask.
class SetFunction {
 public:
  SetFunction(int ground, std::vector<Rational> values);
  static SetFunction Cardinality(int ground);
  // Client c has value client_values[c] and is served by the facilities in
  // covers[c]; V(S) is the total value of clients served by S.
  static SetFunction Coverage(int facilities, const std::vector<Subset>& covers,
                              const std::vector<Rational>& client_values);

  int ground() const { return ground_; }
  const Rational& operator()(Subset s) const { return values_[s]; }
  const std::vector<Rational>& values() const { return values_; }

 private:
  int ground_;
  std::vector<Rational> values_;
};

struct SubmodularCheck {
  bool ok = true;
  // V(A + x) - V(A) < V(B + x) - V(B) with A a subset of B, x outside B.
  std::optional<std::array<Subset, 3>> witness;  // A, B, {x}
};

SubmodularCheck CheckSubmodular(const SetFunction& v);

// First pair A subset of B with V(A) > V(B).
std::optional<std::array<Subset, 2>> FindMonotonicityViolation(const SetFunction& v);

enum class PayoffRule {
  kBasic,      // Pi_i = V(U) - V(U without player i's contribution)
  kFairShare,  // Shapley value of the induced cooperative game
};

struct UtilityGame {
  SetFunction v;
  std::vector<std::vector<Subset>> strategies;
  PayoffRule rule = PayoffRule::kBasic;

  int num_players() const { return static_cast<int>(strategies.size()); }
};

// Payoffs and welfare V(union of chosen sets); kDefault chooses nothing.
Outcome EvaluateUtilityGame(const UtilityGame& game, std::span<const int> profile);

// Payoff maximization; defaults choose the empty set.
GameWithDefaults MakeUtilityGame(const UtilityGame& game);

// Checks V submodular and nonnegative, throws PreconditionError otherwise.
UtilityGame BasicUtilityGame(SetFunction v, std::vector<std::vector<Subset>> strategies);

struct ValidUtilityCheck {
  bool ok = true;
  // "submodular", "nonnegative", "welfare", "sum-bounded" or "marginal".
  std::string failed;
  std::optional<Profile> profile;
  std::optional<int> player;
};

// Submodular nonnegative V, Pi(s) = V(union), sum_i Pi_i <= Pi and
// Pi_i(s) >= Pi(s) - Pi(default_i, s_-i), over every profile of `game`.
ValidUtilityCheck CheckValidUtility(const SetFunction& v, const std::vector<std::vector<Subset>>& strategies,
                                    const FiniteGame& game, const DefaultStrategyMap& defaults,
                                    std::uint64_t budget = kDefaultBudget);
ValidUtilityCheck CheckValidUtility(const UtilityGame& game, std::uint64_t budget = kDefaultBudget);

struct UtilityCertificate {
  SmoothnessCertificate cert;
  SmoothnessVerdict verdict;
};

// (lambda, mu) = (1, -1) with sbar = s* on the social contribution game:
// sum_i Pibar_i(s*_i, s_-i) >= Pi(s*) - Pi(s), robust bound 2. Throws
// UnsupportedError unless V is nondecreasing.
UtilityCertificate UtilityPoa2Certificate(const UtilityGame& game, std::uint64_t budget = kDefaultBudget);

// Random coverage instance: `facilities` ground elements, `clients` clients
// with values in [1, 5], every facility serving at least one client, and
// each player choosing among `strategies` distinct nonempty facility sets of
// size at most 2.
UtilityGame RandomCoverageGame(std::mt19937_64& rng, int facilities, int clients, int players, int strategies,
                               PayoffRule rule);

}  // namespace scg

#endif  // SCG_UTILITY_GAMES_H_
