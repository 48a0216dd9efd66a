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

#include "scg/distribution.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "scg/errors.h"

namespace scg {

FiniteSupportDistribution::FiniteSupportDistribution(std::vector<WeightedProfile> support)
    : support_(std::move(support)) {
  if (support_.empty()) throw ParameterError("distribution has empty support");
  Rational total = 0;
  std::set<Profile> seen;
  for (const auto& atom : support_) {
    if (atom.probability <= 0) throw ParameterError("distribution probabilities must be positive");
    if (!seen.insert(atom.profile).second) throw ParameterError("distribution atoms must be distinct");
    total += atom.probability;
  }
  if (total != 1) throw ParameterError("distribution probabilities sum to " + ToString(total) + ", not 1");
}

FiniteSupportDistribution FiniteSupportDistribution::PointMass(Profile profile) {
  return FiniteSupportDistribution({WeightedProfile{std::move(profile), Rational(1)}});
}

FiniteSupportDistribution FiniteSupportDistribution::Uniform(const std::vector<Profile>& profiles) {
  std::vector<WeightedProfile> atoms;
  const Rational p(1, static_cast<unsigned long>(profiles.size()));
  for (const auto& s : profiles) atoms.push_back({s, p});
  return FiniteSupportDistribution(std::move(atoms));
}

MixedStrategyProfile::MixedStrategyProfile(std::vector<std::vector<StrategyWeight>> marginals)
    : marginals_(std::move(marginals)) {
  for (std::size_t i = 0; i < marginals_.size(); ++i) {
    if (marginals_[i].empty()) throw ParameterError("player " + std::to_string(i) + " has an empty mixture");
    Rational total = 0;
    std::set<int> seen;
    for (const auto& w : marginals_[i]) {
      if (w.probability <= 0) throw ParameterError("mixture probabilities must be positive");
      if (!seen.insert(w.strategy).second) throw ParameterError("mixture strategies must be distinct");
      total += w.probability;
    }
    if (total != 1) throw ParameterError("mixture of player " + std::to_string(i) + " does not sum to 1");
  }
}

MixedStrategyProfile MixedStrategyProfile::Pure(const Profile& profile) {
  std::vector<std::vector<StrategyWeight>> m;
  m.reserve(profile.size());
  for (int s : profile) m.push_back({StrategyWeight{s, Rational(1)}});
  return MixedStrategyProfile(std::move(m));
}

MixedStrategyProfile MixedStrategyProfile::Uniform(const std::vector<int>& strategy_counts) {
  std::vector<std::vector<StrategyWeight>> m;
  for (int k : strategy_counts) {
    std::vector<StrategyWeight> row;
    for (int s = 0; s < k; ++s) row.push_back({s, Rational(1, static_cast<unsigned long>(k))});
    m.push_back(std::move(row));
  }
  return MixedStrategyProfile(std::move(m));
}

bool MixedStrategyProfile::is_pure() const {
  return std::all_of(marginals_.begin(), marginals_.end(), [](const auto& m) { return m.size() == 1; });
}

std::optional<Profile> MixedStrategyProfile::AsPure() const {
  if (!is_pure()) return std::nullopt;
  Profile p;
  for (const auto& m : marginals_) p.push_back(m.front().strategy);
  return p;
}

void MixedStrategyProfile::Validate(const FiniteGame& game) const {
  if (num_players() != game.num_players()) throw EvaluationError("mixed profile length does not match the game");
  for (int i = 0; i < num_players(); ++i) {
    for (const auto& w : marginals_[i]) {
      if (w.strategy < 0 || w.strategy >= game.strategy_count(i)) {
        throw EvaluationError("mixed strategy index out of range for player " + std::to_string(i));
      }
    }
  }
}

FiniteSupportDistribution MixedStrategyProfile::Product() const {
  std::vector<WeightedProfile> atoms{{Profile{}, Rational(1)}};
  for (const auto& marginal : marginals_) {
    std::vector<StrategyWeight> sorted = marginal;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.strategy < b.strategy; });
    std::vector<WeightedProfile> next;
    next.reserve(atoms.size() * sorted.size());
    for (const auto& atom : atoms) {
      for (const auto& w : sorted) {
        Profile p = atom.profile;
        p.push_back(w.strategy);
        next.push_back({std::move(p), atom.probability * w.probability});
      }
    }
    atoms = std::move(next);
  }
  return FiniteSupportDistribution(std::move(atoms));
}

}  // namespace scg
