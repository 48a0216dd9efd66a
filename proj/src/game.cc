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

#include "scg/game.h"

#include <limits>
#include <string>
#include <utility>

#include "scg/errors.h"

namespace scg {

bool StrictlyBetter(Orientation orientation, const Rational& a, const Rational& b) {
  return orientation == Orientation::kMinimize ? a < b : a > b;
}

bool Bounded(Orientation orientation, const Rational& lhs, const Rational& rhs) {
  return orientation == Orientation::kMinimize ? lhs <= rhs : lhs >= rhs;
}

Rational Sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

FiniteGame::FiniteGame(std::vector<int> strategy_counts, Orientation orientation, Evaluator evaluator,
                       std::optional<std::vector<Rational>> weights)
    : counts_(std::move(strategy_counts)),
      orientation_(orientation),
      evaluator_(std::make_shared<const Evaluator>(std::move(evaluator))),
      weights_(std::move(weights)) {
  if (counts_.empty()) throw ParameterError("a game needs at least one player");
  for (int k : counts_) {
    if (k <= 0) throw ParameterError("every strategy set must be nonempty");
  }
  if (weights_) {
    if (weights_->size() != counts_.size()) throw ParameterError("one weight per player required");
    for (const auto& w : *weights_) {
      if (w <= 0) throw ParameterError("player weights must be positive");
    }
  }
}

std::vector<Rational> FiniteGame::WeightsOrOnes() const {
  if (weights_) return *weights_;
  return std::vector<Rational>(counts_.size(), Rational(1));
}

std::uint64_t FiniteGame::NumProfiles() const {
  std::uint64_t total = 1;
  for (int k : counts_) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= static_cast<std::uint64_t>(k);
  }
  return total;
}

void FiniteGame::ValidateProfile(std::span<const int> profile) const {
  if (profile.size() != counts_.size()) {
    throw EvaluationError("profile has " + std::to_string(profile.size()) + " entries, game has " +
                          std::to_string(counts_.size()) + " players");
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] == kDefault) {
      throw EvaluationError("player " + std::to_string(i) + " plays the default strategy outside the game");
    }
    if (profile[i] < 0 || profile[i] >= counts_[i]) {
      throw EvaluationError("strategy " + std::to_string(profile[i]) + " out of range for player " +
                            std::to_string(i));
    }
  }
}

Outcome FiniteGame::Evaluate(std::span<const int> profile) const {
  ValidateProfile(profile);
  return (*evaluator_)(profile);
}

Rational FiniteGame::Cost(int player, std::span<const int> profile) const {
  return Evaluate(profile).costs[player];
}

Rational FiniteGame::SocialCost(std::span<const int> profile) const { return Evaluate(profile).social; }

FiniteGame FiniteGame::WithEvaluator(Evaluator evaluator) const {
  return FiniteGame(counts_, orientation_, std::move(evaluator), weights_);
}

FiniteGame FiniteGame::WithWeights(std::optional<std::vector<Rational>> weights) const {
  return FiniteGame(counts_, orientation_, *evaluator_, std::move(weights));
}

DefaultStrategyMap::DefaultStrategyMap(std::vector<bool> registered, Evaluator extended)
    : registered_(std::move(registered)), extended_(std::make_shared<const Evaluator>(std::move(extended))) {}

DefaultStrategyMap DefaultStrategyMap::None(int num_players) {
  return DefaultStrategyMap(std::vector<bool>(num_players, false), Evaluator{});
}

DefaultStrategyMap DefaultStrategyMap::All(int num_players, Evaluator extended) {
  return DefaultStrategyMap(std::vector<bool>(num_players, true), std::move(extended));
}

bool DefaultStrategyMap::all_registered() const {
  for (bool r : registered_) {
    if (!r) return false;
  }
  return !registered_.empty();
}

Outcome DefaultStrategyMap::Evaluate(const FiniteGame& game, std::span<const int> profile) const {
  if (profile.size() != static_cast<std::size_t>(game.num_players())) {
    throw EvaluationError("profile length does not match the game");
  }
  bool any_default = false;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] == kDefault) {
      if (i >= registered_.size() || !registered_[i] || !extended_ || !*extended_) {
        throw EvaluationError("player " + std::to_string(i) + " has no registered default strategy");
      }
      any_default = true;
    } else if (profile[i] < 0 || profile[i] >= game.strategy_count(static_cast<int>(i))) {
      throw EvaluationError("strategy " + std::to_string(profile[i]) + " out of range for player " +
                            std::to_string(i));
    }
  }
  if (!any_default) return game.evaluator()(profile);
  return (*extended_)(profile);
}

Outcome EvaluateWithDefaults(const FiniteGame& game, const DefaultStrategyMap& defaults,
                             std::span<const int> profile) {
  return defaults.Evaluate(game, profile);
}

ProfileSpace::ProfileSpace(std::vector<int> radices) : radices_(std::move(radices)) {
  strides_.assign(radices_.size(), 1);
  size_ = 1;
  for (int p = static_cast<int>(radices_.size()) - 1; p >= 0; --p) {
    strides_[p] = size_;
    const auto r = static_cast<std::uint64_t>(radices_[p]);
    if (r == 0) throw ParameterError("empty strategy set");
    if (size_ > std::numeric_limits<std::uint64_t>::max() / r) {
      size_ = std::numeric_limits<std::uint64_t>::max();
      return;
    }
    size_ *= r;
  }
}

ProfileSpace ProfileSpace::Checked(std::vector<int> radices, std::uint64_t budget) {
  ProfileSpace space(std::move(radices));
  if (space.size() > budget) {
    throw BudgetError("profile space of size " + std::to_string(space.size()) + " exceeds the budget of " +
                      std::to_string(budget));
  }
  return space;
}

std::uint64_t ProfileSpace::Index(std::span<const int> profile) const {
  std::uint64_t index = 0;
  for (std::size_t p = 0; p < radices_.size(); ++p) {
    index += static_cast<std::uint64_t>(profile[p]) * strides_[p];
  }
  return index;
}

Profile ProfileSpace::At(std::uint64_t index) const {
  Profile profile(radices_.size());
  for (std::size_t p = 0; p < radices_.size(); ++p) {
    profile[p] = static_cast<int>((index / strides_[p]) % radices_[p]);
  }
  return profile;
}

bool ProfileSpace::Next(Profile& profile) const {
  for (int p = static_cast<int>(radices_.size()) - 1; p >= 0; --p) {
    if (++profile[p] < radices_[p]) return true;
    profile[p] = 0;
  }
  return false;
}

OutcomeTable OutcomeTable::Build(const FiniteGame& game, std::uint64_t budget) {
  ProfileSpace space = ProfileSpace::Checked(game.strategy_counts(), budget);
  std::vector<Outcome> outcomes;
  outcomes.reserve(space.size());
  Profile profile(game.num_players(), 0);
  do {
    outcomes.push_back(game.evaluator()(profile));
  } while (space.Next(profile));
  return OutcomeTable(std::make_shared<const FiniteGame>(game), std::move(space), std::move(outcomes));
}

DefaultedTable DefaultedTable::Build(const FiniteGame& game, const DefaultStrategyMap& defaults,
                                     std::uint64_t budget) {
  DefaultedTable table(ProfileSpace::Checked(game.strategy_counts(), budget));
  const int n = game.num_players();
  table.registered_.assign(n, false);
  table.by_player_.resize(n);
  for (int i = 0; i < n; ++i) {
    if (i >= defaults.num_players() || !defaults.registered(i)) continue;
    table.registered_[i] = true;
    const std::uint64_t count = table.space_.size() / static_cast<std::uint64_t>(game.strategy_count(i));
    auto& outcomes = table.by_player_[i];
    outcomes.reserve(count);
    std::vector<int> others = game.strategy_counts();
    others[i] = 1;
    ProfileSpace sub(others);
    Profile profile(n, 0);
    do {
      Profile with_default = profile;
      with_default[i] = kDefault;
      outcomes.push_back(defaults.Evaluate(game, with_default));
    } while (sub.Next(profile));
  }
  return table;
}

const Outcome& DefaultedTable::WithDefault(int player, std::uint64_t base_index) const {
  if (!registered_[player]) {
    throw EvaluationError("player " + std::to_string(player) + " has no registered default strategy");
  }
  const std::uint64_t stride = space_.stride(player);
  const std::uint64_t block = stride * static_cast<std::uint64_t>(space_.radix(player));
  const std::uint64_t compressed = (base_index / block) * stride + base_index % stride;
  return by_player_[player][compressed];
}

AltruismVector::AltruismVector(std::vector<Rational> alpha, bool extended)
    : alpha_(std::move(alpha)), extended_(extended) {
  if (!extended_) {
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
      if (alpha_[i] < 0 || alpha_[i] > 1) {
        throw ParameterError("altruism level of player " + std::to_string(i) + " is " + ToString(alpha_[i]) +
                             ", outside [0, 1]");
      }
    }
  }
}

AltruismVector AltruismVector::Zeros(int n) { return AltruismVector(std::vector<Rational>(n, Rational(0))); }

AltruismVector AltruismVector::Uniform(int n, const Rational& value, bool extended) {
  return AltruismVector(std::vector<Rational>(n, value), extended);
}

FriendshipMatrix::FriendshipMatrix(std::vector<std::vector<Rational>> alpha) : alpha_(std::move(alpha)) {
  const std::size_t n = alpha_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha_[i].size() != n) throw ParameterError("friendship matrix must be square");
    if (alpha_[i][i] != 1) {
      throw ParameterError("friendship matrix diagonal entry " + std::to_string(i) + " is not 1");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (alpha_[i][j] < 0 || alpha_[i][j] > 1) {
        throw ParameterError("friendship entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") outside [0, 1]");
      }
    }
  }
}

FriendshipMatrix FriendshipMatrix::Identity(int n) {
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) a[i][i] = 1;
  return FriendshipMatrix(std::move(a));
}

FriendshipMatrix FriendshipMatrix::AllOnes(int n) {
  return FriendshipMatrix(std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(1))));
}

FriendshipMatrix FriendshipMatrix::FromAltruism(const AltruismVector& a) {
  const int n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = i == j ? Rational(1) : a[i];
  }
  return FriendshipMatrix(std::move(m));
}

FiniteGame AltruisticExtension(const FiniteGame& game, const AltruismVector& alpha) {
  if (alpha.size() != game.num_players()) throw ParameterError("altruism vector length mismatch");
  Evaluator base = game.evaluator();
  std::vector<Rational> a = alpha.values();
  return game.WithEvaluator([base, a](std::span<const int> profile) {
    Outcome out = base(profile);
    for (std::size_t i = 0; i < a.size(); ++i) {
      out.costs[i] = (1 - a[i]) * out.costs[i] + a[i] * out.social;
    }
    return out;
  });
}

FiniteGame FriendshipExtension(const FiniteGame& game, const FriendshipMatrix& alpha) {
  if (alpha.size() != game.num_players()) throw ParameterError("friendship matrix size mismatch");
  Evaluator base = game.evaluator();
  auto rows = alpha.rows();
  return game.WithEvaluator([base, rows](std::span<const int> profile) {
    Outcome out = base(profile);
    const std::size_t n = rows.size();
    std::vector<Rational> perceived(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rows[i][j] != 0) perceived[i] += rows[i][j] * out.costs[j];
      }
    }
    out.costs = std::move(perceived);
    return out;
  });
}

std::optional<Profile> FindWeightBoundViolation(const OutcomeTable& table, const std::vector<Rational>& weights) {
  const Orientation o = table.game().orientation();
  Rational weighted;
  Rational term;
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    const Outcome& out = table.at(idx);
    weighted = 0;
    for (std::size_t i = 0; i < out.costs.size(); ++i) {
      if (weights[i] == 1) {
        weighted += out.costs[i];
      } else {
        term = weights[i] * out.costs[i];
        weighted += term;
      }
    }
    if (!Bounded(o, out.social, weighted)) return table.space().At(idx);
  }
  return std::nullopt;
}

std::optional<Profile> FindSumBoundViolation(const OutcomeTable& table) {
  return FindWeightBoundViolation(table,
                                  std::vector<Rational>(table.game().num_players(), Rational(1)));
}

GameWithDefaults MakeTableGame(std::vector<int> counts, Orientation orientation, std::vector<Outcome> outcomes,
                               std::optional<std::vector<Rational>> weights,
                               std::optional<std::vector<Outcome>> extended_outcomes) {
  ProfileSpace space(counts);
  const std::size_t n = counts.size();
  auto check_rows = [n](const std::vector<Outcome>& rows, std::uint64_t expected, const char* what) {
    if (rows.size() != expected) {
      throw ParameterError(std::string(what) + " table has " + std::to_string(rows.size()) + " rows, expected " +
                           std::to_string(expected));
    }
    for (const auto& row : rows) {
      if (row.costs.size() != n) throw ParameterError(std::string(what) + " row has the wrong number of costs");
    }
  };
  check_rows(outcomes, space.size(), "cost");
  auto table = std::make_shared<const std::vector<Outcome>>(std::move(outcomes));
  Evaluator eval = [table, space](std::span<const int> profile) { return (*table)[space.Index(profile)]; };
  FiniteGame game(counts, orientation, eval, std::move(weights));
  if (!extended_outcomes) return {std::move(game), DefaultStrategyMap::None(static_cast<int>(n))};

  std::vector<int> ext_counts = counts;
  for (int& k : ext_counts) ++k;
  ProfileSpace ext_space(ext_counts);
  check_rows(*extended_outcomes, ext_space.size(), "extended cost");
  auto ext_table = std::make_shared<const std::vector<Outcome>>(std::move(*extended_outcomes));
  // The extended rows restricted to ordinary strategies must reproduce the
  // base table exactly.
  Profile profile(n, 0);
  do {
    const Outcome& a = (*table)[space.Index(profile)];
    const Outcome& b = (*ext_table)[ext_space.Index(profile)];
    if (a.social != b.social || a.costs != b.costs) {
      throw ParameterError("extended table disagrees with the base table on ordinary profiles");
    }
  } while (space.Next(profile));
  Evaluator ext_eval = [ext_table, ext_space, counts](std::span<const int> p) {
    Profile mapped(p.begin(), p.end());
    for (std::size_t i = 0; i < mapped.size(); ++i) {
      if (mapped[i] == kDefault) mapped[i] = counts[i];
    }
    return (*ext_table)[ext_space.Index(mapped)];
  };
  return {std::move(game), DefaultStrategyMap::All(static_cast<int>(n), ext_eval)};
}

}  // namespace scg
