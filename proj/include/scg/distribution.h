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

#ifndef SCG_DISTRIBUTION_H_
#define SCG_DISTRIBUTION_H_

#include <optional>
#include <vector>

#include "scg/game.h"
#include "scg/rational.h"

namespace scg {

struct WeightedProfile {
  Profile profile;
  Rational probability;
};

// Distribution over strategy profiles with finitely many atoms. Validated
// on construction: probabilities positive and summing to exactly 1, atoms
// distinct.
class FiniteSupportDistribution {
 public:
  explicit FiniteSupportDistribution(std::vector<WeightedProfile> support);
  static FiniteSupportDistribution PointMass(Profile profile);
  // Uniform over the given distinct profiles.
  static FiniteSupportDistribution Uniform(const std::vector<Profile>& profiles);

  const std::vector<WeightedProfile>& support() const { return support_; }
  std::size_t size() const { return support_.size(); }

 private:
  std::vector<WeightedProfile> support_;
};

struct StrategyWeight {
  int strategy;
  Rational probability;
};

// Independent per-player distributions over own strategies. Used both for
// mixed Nash candidates and for randomized smoothness deviations.
class MixedStrategyProfile {
 public:
  explicit MixedStrategyProfile(std::vector<std::vector<StrategyWeight>> marginals);
  static MixedStrategyProfile Pure(const Profile& profile);
  // Each player uniform over all of their strategies.
  static MixedStrategyProfile Uniform(const std::vector<int>& strategy_counts);

  int num_players() const { return static_cast<int>(marginals_.size()); }
  const std::vector<StrategyWeight>& of(int player) const { return marginals_[player]; }
  bool is_pure() const;
  std::optional<Profile> AsPure() const;
  // Throws EvaluationError if a strategy index is outside the game.
  void Validate(const FiniteGame& game) const;
  // The product distribution; atoms in lexicographic order.
  FiniteSupportDistribution Product() const;

 private:
  std::vector<std::vector<StrategyWeight>> marginals_;
};

}  // namespace scg

#endif  // SCG_DISTRIBUTION_H_
