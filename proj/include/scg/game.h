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

// Finite strategic games with exact rational costs, the default
// ("does not participate") strategy machinery, and the altruistic and
// friendship extensions.

#ifndef SCG_GAME_H_
#define SCG_GAME_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "scg/rational.h"

namespace scg {

// Sentinel strategy index for the default strategy of a player. It lies
// outside every strategy set; only a DefaultStrategyMap can evaluate it.
inline constexpr int kDefault = -1;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

using Profile = std::vector<int>;

enum class Orientation { kMinimize, kMaximize };

// a is strictly preferred to b (smaller cost or larger payoff).
bool StrictlyBetter(Orientation orientation, const Rational& a, const Rational& b);

// lhs <= rhs when minimizing, lhs >= rhs when maximizing.
bool Bounded(Orientation orientation, const Rational& lhs, const Rational& rhs);

// Per-player costs (payoffs when maximizing) plus the social cost (welfare).
struct Outcome {
  std::vector<Rational> costs;
  Rational social;
};

using Evaluator = std::function<Outcome(std::span<const int> profile)>;

class FiniteGame {
 public:
  FiniteGame(std::vector<int> strategy_counts, Orientation orientation, Evaluator evaluator,
             std::optional<std::vector<Rational>> weights = std::nullopt);

  int num_players() const { return static_cast<int>(counts_.size()); }
  int strategy_count(int player) const { return counts_[player]; }
  const std::vector<int>& strategy_counts() const { return counts_; }
  Orientation orientation() const { return orientation_; }
  bool minimizing() const { return orientation_ == Orientation::kMinimize; }
  const std::optional<std::vector<Rational>>& weights() const { return weights_; }
  // Declared weights, or all ones.
  std::vector<Rational> WeightsOrOnes() const;

  // Saturates at UINT64_MAX.
  std::uint64_t NumProfiles() const;

  // Throws EvaluationError on a wrong length, an out-of-range index, or a
  // kDefault entry.
  void ValidateProfile(std::span<const int> profile) const;

  Outcome Evaluate(std::span<const int> profile) const;
  Rational Cost(int player, std::span<const int> profile) const;
  Rational SocialCost(std::span<const int> profile) const;

  FiniteGame WithEvaluator(Evaluator evaluator) const;
  FiniteGame WithWeights(std::optional<std::vector<Rational>> weights) const;

  // Raw evaluator access for wrappers that have already validated.
  const Evaluator& evaluator() const { return *evaluator_; }

 private:
  std::vector<int> counts_;
  Orientation orientation_;
  std::shared_ptr<const Evaluator> evaluator_;
  std::optional<std::vector<Rational>> weights_;
};

// Which players own a default strategy, plus the evaluator of the extended
// cost function on profiles that may contain kDefault entries. It must agree
// with the game's evaluator on profiles without defaults.
class DefaultStrategyMap {
 public:
  DefaultStrategyMap() = default;
  DefaultStrategyMap(std::vector<bool> registered, Evaluator extended);
  static DefaultStrategyMap None(int num_players);
  static DefaultStrategyMap All(int num_players, Evaluator extended);

  int num_players() const { return static_cast<int>(registered_.size()); }
  bool registered(int player) const { return registered_[player]; }
  bool all_registered() const;

  // Throws EvaluationError if a kDefault entry belongs to an unregistered
  // player.
  Outcome Evaluate(const FiniteGame& game, std::span<const int> profile) const;

 private:
  std::vector<bool> registered_;
  std::shared_ptr<const Evaluator> extended_;
};

struct GameWithDefaults {
  FiniteGame game;
  DefaultStrategyMap defaults;
};

// Costs under the extended cost function; identical to game.Evaluate when
// the profile has no defaults.
Outcome EvaluateWithDefaults(const FiniteGame& game, const DefaultStrategyMap& defaults,
                             std::span<const int> profile);

// Mixed-radix indexing of profiles, player 0 most significant, so index order
// is lexicographic profile order.
class ProfileSpace {
 public:
  explicit ProfileSpace(std::vector<int> radices);
  // Throws BudgetError if the space is larger than budget.
  static ProfileSpace Checked(std::vector<int> radices, std::uint64_t budget);

  std::uint64_t size() const { return size_; }
  int num_players() const { return static_cast<int>(radices_.size()); }
  int radix(int player) const { return radices_[player]; }
  std::uint64_t stride(int player) const { return strides_[player]; }

  std::uint64_t Index(std::span<const int> profile) const;
  Profile At(std::uint64_t index) const;
  int Digit(std::uint64_t index, int player) const {
    return static_cast<int>((index / strides_[player]) % radices_[player]);
  }
  std::uint64_t Replace(std::uint64_t index, int player, int digit) const {
    return index - static_cast<std::uint64_t>(Digit(index, player)) * strides_[player] +
           static_cast<std::uint64_t>(digit) * strides_[player];
  }
  // Lexicographic successor in place; false once the last profile is passed.
  bool Next(Profile& profile) const;

 private:
  std::vector<int> radices_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 1;
};

// Every outcome of a game, materialized once for exhaustive checks.
class OutcomeTable {
 public:
  static OutcomeTable Build(const FiniteGame& game, std::uint64_t budget = kDefaultBudget);

  const FiniteGame& game() const { return *game_; }
  const ProfileSpace& space() const { return space_; }
  std::uint64_t size() const { return space_.size(); }
  const Outcome& at(std::uint64_t index) const { return outcomes_[index]; }
  const Outcome& at(std::span<const int> profile) const { return outcomes_[space_.Index(profile)]; }
  std::uint64_t Deviate(std::uint64_t index, int player, int strategy) const {
    return space_.Replace(index, player, strategy);
  }

 private:
  OutcomeTable(std::shared_ptr<const FiniteGame> game, ProfileSpace space, std::vector<Outcome> outcomes)
      : game_(std::move(game)), space_(std::move(space)), outcomes_(std::move(outcomes)) {}

  std::shared_ptr<const FiniteGame> game_;
  ProfileSpace space_;
  std::vector<Outcome> outcomes_;
};

// Outcomes of (kDefault_i, s_-i) for every player i and base profile s.
class DefaultedTable {
 public:
  static DefaultedTable Build(const FiniteGame& game, const DefaultStrategyMap& defaults,
                              std::uint64_t budget = kDefaultBudget);

  // base_index indexes the game's own profile space; the player's entry is
  // ignored. Throws EvaluationError for a player without a default.
  const Outcome& WithDefault(int player, std::uint64_t base_index) const;

 private:
  explicit DefaultedTable(ProfileSpace space) : space_(std::move(space)) {}

  ProfileSpace space_;
  std::vector<bool> registered_;
  std::vector<std::vector<Outcome>> by_player_;
};

// Alpha parameters of the altruism model. Extended mode admits any rational.
class AltruismVector {
 public:
  explicit AltruismVector(std::vector<Rational> alpha, bool extended = false);
  static AltruismVector Zeros(int n);
  static AltruismVector Uniform(int n, const Rational& value, bool extended = false);

  int size() const { return static_cast<int>(alpha_.size()); }
  const Rational& operator[](int i) const { return alpha_[i]; }
  const std::vector<Rational>& values() const { return alpha_; }
  bool extended() const { return extended_; }

 private:
  std::vector<Rational> alpha_;
  bool extended_;
};

// Affection levels alpha_ij in [0, 1] with alpha_ii = 1.
class FriendshipMatrix {
 public:
  explicit FriendshipMatrix(std::vector<std::vector<Rational>> alpha);
  static FriendshipMatrix Identity(int n);
  static FriendshipMatrix AllOnes(int n);
  // alpha_ij = a_i for every j != i.
  static FriendshipMatrix FromAltruism(const AltruismVector& a);

  int size() const { return static_cast<int>(alpha_.size()); }
  const Rational& operator()(int i, int j) const { return alpha_[i][j]; }
  const std::vector<std::vector<Rational>>& rows() const { return alpha_; }

 private:
  std::vector<std::vector<Rational>> alpha_;
};

// Perceived cost (1 - alpha_i) C_i + alpha_i C; social cost unchanged.
FiniteGame AltruisticExtension(const FiniteGame& game, const AltruismVector& alpha);

// Perceived cost sum_j alpha_ij C_j; social cost unchanged.
FiniteGame FriendshipExtension(const FiniteGame& game, const FriendshipMatrix& alpha);

// First profile where C(s) > sum_i w_i C_i(s) (reversed when maximizing), or
// nullopt. With no weights given, unit weights are used.
std::optional<Profile> FindWeightBoundViolation(const OutcomeTable& table,
                                                const std::vector<Rational>& weights);
std::optional<Profile> FindSumBoundViolation(const OutcomeTable& table);

// Normal-form game from an outcome list in lexicographic profile order. When
// extended_outcomes is given it covers the space where player i has
// counts[i] + 1 strategies and the last one stands for the default.
GameWithDefaults MakeTableGame(std::vector<int> counts, Orientation orientation, std::vector<Outcome> outcomes,
                               std::optional<std::vector<Rational>> weights = std::nullopt,
                               std::optional<std::vector<Outcome>> extended_outcomes = std::nullopt);

Rational Sum(const std::vector<Rational>& values);

// Outcome of checking one exact inequality lhs <= rhs.
struct InequalityCheck {
  bool ok = true;
  Rational lhs;
  Rational rhs;
};

}  // namespace scg

#endif  // SCG_GAME_H_
