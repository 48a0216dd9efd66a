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

// Social contribution games (SCGs), SC-boundedness, smoothness checkers for
// the base game and its altruistic and friendship extensions, and the exact
// robust price of anarchy optimizer.
//
// Every check here is exhaustive over the profile space and exact. For
// payoff-maximization games every inequality is reversed: a smoothness
// certificate (lambda, mu) then asserts
//   sum_i Pi_i(sbar_i, s_-i) >= lambda Pi(s*) + mu Pi(s)
// and yields the bound (1 - mu) / lambda instead of lambda / (1 - mu).

#ifndef SCG_SOCIAL_CONTRIBUTION_H_
#define SCG_SOCIAL_CONTRIBUTION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scg/distribution.h"
#include "scg/game.h"
#include "scg/rational.h"

namespace scg {

// C(s) - C(default_i, s_-i).
Rational ScgCost(const FiniteGame& game, const DefaultStrategyMap& defaults, int player, std::span<const int> profile);

// Same strategy sets, social cost and weights; player costs replaced by the
// SCG costs. The returned defaults evaluate the SCG on profiles with
// defaults. Throws PreconditionError if some player has no default.
GameWithDefaults CorrespondingScg(const FiniteGame& game, const DefaultStrategyMap& defaults);

struct PlayerProfileWitness {
  int player = 0;
  Profile profile;
};

struct ScBoundedCheck {
  bool ok = true;
  std::optional<PlayerProfileWitness> witness;
};

// C_i(s) <= C(s) - C(default_i, s_-i) for all i, s.
ScBoundedCheck CheckScBounded(const FiniteGame& game, const DefaultStrategyMap& defaults,
                              std::uint64_t budget = kDefaultBudget);

// Equality version: the game is itself an SCG for these defaults.
ScBoundedCheck CheckIsScg(const FiniteGame& game, const DefaultStrategyMap& defaults,
                          std::uint64_t budget = kDefaultBudget);

struct StrongScCheck {
  bool ok = true;
  // 0: social cost not weight-bounded; 1: a non-participant pays something;
  // 2: participation of player lowers the cost of other; 3: the weighted
  // impact on player costs exceeds the impact on the social cost. The lowest
  // violated condition is reported.
  int condition = 0;
  std::optional<int> player;
  std::optional<int> other;
  std::optional<Profile> profile;
};

StrongScCheck CheckStronglyScBounded(const FiniteGame& game, const DefaultStrategyMap& defaults,
                                     const std::vector<Rational>& weights, std::uint64_t budget = kDefaultBudget);

enum class SmoothnessFlavor { kBase, kAltruistic, kFriendship };

const char* FlavorName(SmoothnessFlavor flavor);
SmoothnessFlavor ParseFlavor(const std::string& name);

struct SmoothnessCertificate {
  Rational lambda;
  Rational mu;
  MixedStrategyProfile sbar;  // deviation profile; ignored by the altruistic check
  Profile sstar;              // an optimal profile
  SmoothnessFlavor flavor = SmoothnessFlavor::kBase;

  // lambda / (1 - mu) when minimizing, (1 - mu) / lambda when maximizing.
  Rational RobustBound(Orientation orientation) const;
};

struct SmoothnessVerdict {
  bool ok = true;
  std::optional<Profile> violating;
  // Both sides of the inequality at the violating profile.
  Rational lhs;
  Rational rhs;
  // The optimum used for the deviation (altruistic check).
  std::optional<Profile> optimum;
};

// How the deviation sum of a smoothness inequality is formed.
struct DeviationModel {
  SmoothnessFlavor flavor = SmoothnessFlavor::kBase;
  std::optional<AltruismVector> altruism;
  std::optional<FriendshipMatrix> friendship;
  std::optional<std::vector<Rational>> weights;
};

// Deviation sum at every profile of the table, in index order.
// kBase: sum_i E[C_i(sbar_i, s_-i)].
// kAltruistic: sum_i C_i(s*_i, s_-i) + alpha_i (C_-i(s*_i, s_-i) - C_-i(s)),
//   with sbar the pure optimum s*.
// kFriendship: sum_i w_i E[C_i(sbar_i, s_-i)
//   + sum_{j != i} alpha_ij (C_j(sbar_i, s_-i) - C_j(s))].
std::vector<Rational> DeviationSums(const OutcomeTable& table, const DeviationModel& model,
                                    const MixedStrategyProfile& sbar);

// sum_i C_i(sbar_i, s_-i) <= lambda C(s*) + mu C(s) for all s.
SmoothnessVerdict CheckSmoothnessBase(const FiniteGame& game, const SmoothnessCertificate& cert,
                                      std::uint64_t budget = kDefaultBudget);

// Altruism-model smoothness. Holds if some optimum s* works; cert.sstar is
// tried first, then every other optimum in lexicographic order. Throws
// PreconditionError unless the base game is sum-bounded.
SmoothnessVerdict CheckSmoothnessAltruistic(const FiniteGame& game, const AltruismVector& alpha,
                                            const SmoothnessCertificate& cert, std::uint64_t budget = kDefaultBudget);

// Weighted friendship-model smoothness for the fixed deviation cert.sbar,
// checked against every optimum. Throws PreconditionError unless the social
// cost is weight-bounded for the weights.
SmoothnessVerdict CheckSmoothnessFriendship(const FiniteGame& game, const FriendshipMatrix& alpha,
                                            const std::vector<Rational>& weights,
                                            const SmoothnessCertificate& cert, std::uint64_t budget = kDefaultBudget);

// Table-based variant used by the wrappers above.
SmoothnessVerdict CheckSmoothness(const OutcomeTable& table, const DeviationModel& model,
                                  const SmoothnessCertificate& cert);

struct RobustPoaResult {
  enum class Status { kOk, kInfeasible, kDegenerate };
  Status status = Status::kOk;
  // Infimum of the robust bound over (lambda, mu) satisfying every
  // constraint of the best candidate.
  Rational value;
  // False when the infimum is only approached (mu -> -infinity or mu -> 1);
  // lambda and mu are then unset.
  bool attained = false;
  Rational lambda;
  Rational mu;
  int candidate = -1;
};

// One linear constraint in (lambda, mu) per profile s and candidate sbar,
// lambda C(s*) + mu C(s) >= D(s) (reversed when maximizing). The robust
// bound is minimized exactly: after the substitution tau = 1 / (1 - mu) the
// problem becomes the minimization of a convex piecewise-linear function of
// one variable, whose breakpoints are enumerated from its upper envelope.
// For the altruistic flavor each candidate must be a pure optimum.
RobustPoaResult RobustPoaBound(const FiniteGame& game, const std::vector<MixedStrategyProfile>& candidates,
                               const DeviationModel& model, std::uint64_t budget = kDefaultBudget);
RobustPoaResult RobustPoaBound(const OutcomeTable& table, const std::vector<MixedStrategyProfile>& candidates,
                               const DeviationModel& model);

struct IdentityCheck {
  bool ok = true;
  bool is_scg = false;
  std::optional<int> player;
  std::optional<Profile> profile;
  std::optional<int> deviation;
};

// Verifies C(s) - C_i(s) = C(s_i', s_-i) - C_i(s_i', s_-i) for all i, s, s_i':
// the quantity an altruistic player adds to their own cost does not depend on
// their own strategy, which makes every altruistic extension smooth with the
// same parameters. is_scg reports whether the game is an SCG for defaults.
IdentityCheck CheckAltruismIndependenceIdentity(const FiniteGame& game, const DefaultStrategyMap& defaults,
                                                std::uint64_t budget = kDefaultBudget);

struct TransferResult {
  bool ok = false;
  std::string failure;  // empty on success
  SmoothnessVerdict scg_verdict;
  SmoothnessVerdict extension_verdict;
};

// Altruism reduction: requires SC-boundedness, verifies cert on the SCG (with
// sbar = s*), then re-verifies the same (lambda, mu) on the altruistic
// extension directly.
TransferResult ReductionTransferCheck(const FiniteGame& game, const DefaultStrategyMap& defaults,
                                      const AltruismVector& alpha, const SmoothnessCertificate& cert,
                                      std::uint64_t budget = kDefaultBudget);

// Friendship reduction: requires strong SC-boundedness for the weights.
TransferResult ReductionTransferCheck(const FiniteGame& game, const DefaultStrategyMap& defaults,
                                      const FriendshipMatrix& alpha, const std::vector<Rational>& weights,
                                      const SmoothnessCertificate& cert, std::uint64_t budget = kDefaultBudget);

// E_sigma[C] <= RobustBound(cert) * optimum (reversed when maximizing).
bool CoarseCostWithinBound(const FiniteGame& game, const FiniteSupportDistribution& sigma, const Rational& bound,
                           const Rational& optimum);

}  // namespace scg

#endif  // SCG_SOCIAL_CONTRIBUTION_H_
