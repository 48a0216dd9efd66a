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

#include "scg/utility_games.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "scg/equilibria.h"
#include "scg/errors.h"

namespace scg {
namespace {

Subset Union(const UtilityGame& game, std::span<const int> profile, int skip = -1) {
  Subset u = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    if (i != skip && profile[i] != kDefault) u |= game.strategies[i][profile[i]];
  }
  return u;
}

}  // namespace

SetFunction::SetFunction(int ground, std::vector<Rational> values) : ground_(ground), values_(std::move(values)) {
  if (ground < 0 || ground > 16) throw ParameterError("ground sets of up to 16 elements are supported");
  if (values_.size() != (std::size_t{1} << ground)) {
    throw ParameterError("set function table needs 2^" + std::to_string(ground) + " entries");
  }
}

SetFunction SetFunction::Cardinality(int ground) {
  std::vector<Rational> values(std::size_t{1} << ground);
  for (std::size_t s = 0; s < values.size(); ++s) values[s] = __builtin_popcount(static_cast<unsigned>(s));
  return SetFunction(ground, std::move(values));
}

SetFunction SetFunction::Coverage(int facilities, const std::vector<Subset>& covers,
                                  const std::vector<Rational>& client_values) {
  if (covers.size() != client_values.size()) throw ParameterError("one cover set per client required");
  std::vector<Rational> values(std::size_t{1} << facilities);
  for (std::size_t s = 0; s < values.size(); ++s) {
    for (std::size_t c = 0; c < covers.size(); ++c) {
      if (covers[c] & s) values[s] += client_values[c];
    }
  }
  return SetFunction(facilities, std::move(values));
}

SubmodularCheck CheckSubmodular(const SetFunction& v) {
  const Subset full = (Subset{1} << v.ground()) - 1;
  for (Subset b = 0; b <= full; ++b) {
    // A ranges over subsets of B.
    for (Subset a = b;; a = (a - 1) & b) {
      for (int x = 0; x < v.ground(); ++x) {
        const Subset bit = Subset{1} << x;
        if (b & bit) continue;
        if (v(a | bit) - v(a) < v(b | bit) - v(b)) return {false, std::array<Subset, 3>{a, b, bit}};
      }
      if (a == 0) break;
    }
  }
  return {};
}

std::optional<std::array<Subset, 2>> FindMonotonicityViolation(const SetFunction& v) {
  const Subset full = (Subset{1} << v.ground()) - 1;
  for (Subset a = 0; a <= full; ++a) {
    for (int x = 0; x < v.ground(); ++x) {
      const Subset bit = Subset{1} << x;
      if (!(a & bit) && v(a) > v(a | bit)) return std::array<Subset, 2>{a, a | bit};
    }
  }
  return std::nullopt;
}

Outcome EvaluateUtilityGame(const UtilityGame& game, std::span<const int> profile) {
  const int n = game.num_players();
  Outcome out;
  out.social = game.v(Union(game, profile));
  out.costs.assign(n, Rational(0));
  switch (game.rule) {
    case PayoffRule::kBasic:
      for (int i = 0; i < n; ++i) {
        if (profile[i] != kDefault) out.costs[i] = out.social - game.v(Union(game, profile, i));
      }
      break;
    case PayoffRule::kFairShare: {
      // Average marginal contribution over all arrival orders.
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      long orders = 0;
      do {
        Subset u = 0;
        for (int i : order) {
          const Subset mine = profile[i] == kDefault ? 0 : game.strategies[i][profile[i]];
          out.costs[i] += game.v(u | mine) - game.v(u);
          u |= mine;
        }
        ++orders;
      } while (std::next_permutation(order.begin(), order.end()));
      for (auto& c : out.costs) c /= orders;
      break;
    }
  }
  return out;
}

GameWithDefaults MakeUtilityGame(const UtilityGame& game) {
  for (const auto& sets : game.strategies) {
    if (sets.empty()) throw ParameterError("every player needs a strategy");
    for (Subset s : sets) {
      if (s >> game.v.ground()) throw ParameterError("strategy outside the ground set");
    }
  }
  auto shared = std::make_shared<const UtilityGame>(game);
  Evaluator eval = [shared](std::span<const int> profile) { return EvaluateUtilityGame(*shared, profile); };
  std::vector<int> counts;
  for (const auto& sets : game.strategies) counts.push_back(static_cast<int>(sets.size()));
  return {FiniteGame(std::move(counts), Orientation::kMaximize, eval),
          DefaultStrategyMap::All(game.num_players(), eval)};
}

UtilityGame BasicUtilityGame(SetFunction v, std::vector<std::vector<Subset>> strategies) {
  if (!CheckSubmodular(v).ok) throw PreconditionError("value function is not submodular");
  for (const auto& x : v.values()) {
    if (x < 0) throw PreconditionError("value function takes negative values");
  }
  return UtilityGame{std::move(v), std::move(strategies), PayoffRule::kBasic};
}

ValidUtilityCheck CheckValidUtility(const SetFunction& v, const std::vector<std::vector<Subset>>& strategies,
                                    const FiniteGame& game, const DefaultStrategyMap& defaults,
                                    std::uint64_t budget) {
  ValidUtilityCheck result;
  auto fail = [&](const char* what) {
    result.ok = false;
    result.failed = what;
    return result;
  };
  if (!CheckSubmodular(v).ok) return fail("submodular");
  for (const auto& x : v.values()) {
    if (x < 0) return fail("nonnegative");
  }
  const OutcomeTable table = OutcomeTable::Build(game, budget);
  const DefaultedTable without = DefaultedTable::Build(game, defaults, budget);
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    const Profile profile = table.space().At(idx);
    const Outcome& out = table.at(idx);
    Subset u = 0;
    for (int i = 0; i < game.num_players(); ++i) u |= strategies[i][profile[i]];
    if (out.social != v(u)) {
      result.profile = profile;
      return fail("welfare");
    }
    if (Sum(out.costs) > out.social) {
      result.profile = profile;
      return fail("sum-bounded");
    }
    for (int i = 0; i < game.num_players(); ++i) {
      if (out.costs[i] < out.social - without.WithDefault(i, idx).social) {
        result.profile = profile;
        result.player = i;
        return fail("marginal");
      }
    }
  }
  return result;
}

ValidUtilityCheck CheckValidUtility(const UtilityGame& game, std::uint64_t budget) {
  const GameWithDefaults g = MakeUtilityGame(game);
  return CheckValidUtility(game.v, game.strategies, g.game, g.defaults, budget);
}

UtilityCertificate UtilityPoa2Certificate(const UtilityGame& game, std::uint64_t budget) {
  if (FindMonotonicityViolation(game.v)) throw UnsupportedError("value function is not nondecreasing");
  const GameWithDefaults g = MakeUtilityGame(game);
  const GameWithDefaults scg = CorrespondingScg(g.game, g.defaults);
  const Profile sstar = SocialOptimum(g.game, budget).profile;
  UtilityCertificate out{SmoothnessCertificate{Rational(1), Rational(-1), MixedStrategyProfile::Pure(sstar), sstar,
                                               SmoothnessFlavor::kBase},
                         {}};
  out.verdict = CheckSmoothnessBase(scg.game, out.cert, budget);
  return out;
}

UtilityGame RandomCoverageGame(std::mt19937_64& rng, int facilities, int clients, int players, int strategies,
                               PayoffRule rule) {
  if (facilities < 1 || facilities > 8) throw ParameterError("between 1 and 8 facilities supported");
  if (clients < 1) throw ParameterError("at least one client required");
  std::uniform_int_distribution<int> facility(0, facilities - 1);
  std::uniform_int_distribution<int> client(0, clients - 1);
  std::uniform_int_distribution<int> value(1, 5);
  std::vector<Subset> covers(clients, 0);
  std::vector<Rational> values(clients);
  for (int c = 0; c < clients; ++c) {
    covers[c] |= Subset{1} << facility(rng);
    if (std::uniform_int_distribution<int>(0, 1)(rng)) covers[c] |= Subset{1} << facility(rng);
    values[c] = value(rng);
  }
  for (int f = 0; f < facilities; ++f) covers[client(rng)] |= Subset{1} << f;
  std::vector<std::vector<Subset>> sets(players);
  for (auto& own : sets) {
    for (int tries = 0; static_cast<int>(own.size()) < strategies && tries < 64; ++tries) {
      Subset s = Subset{1} << facility(rng);
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) s |= Subset{1} << facility(rng);
      if (std::find(own.begin(), own.end(), s) == own.end()) own.push_back(s);
    }
  }
  return UtilityGame{SetFunction::Coverage(facilities, covers, values), std::move(sets), rule};
}

}  // namespace scg
