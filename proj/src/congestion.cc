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

#include "scg/congestion.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "scg/errors.h"

namespace scg {
namespace {

void RequireIdentity(const CongestionGame& cg) {
  if (!cg.identity()) throw PreconditionError("identity delays required");
}

Rational DelayTotal(const LinearDelay& d, int load) {
  // x d(x) = a x^2 + b x.
  return d.a * load * load + d.b * load;
}

}  // namespace

bool CongestionGame::identity() const {
  return std::all_of(delays.begin(), delays.end(), [](const LinearDelay& d) { return d.a == 1 && d.b == 0; });
}

void CongestionGame::Validate() const {
  if (num_resources < 0 || static_cast<int>(delays.size()) != num_resources) {
    throw ParameterError("one delay function per resource required");
  }
  for (const auto& d : delays) {
    if (d.a < 0 || d.b < 0) throw ParameterError("delay coefficients must be nonnegative");
  }
  if (strategies.empty()) throw ParameterError("a congestion game needs at least one player");
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    if (strategies[i].empty()) throw ParameterError("player " + std::to_string(i) + " has no strategy");
    for (const auto& set : strategies[i]) {
      if (set.empty()) throw ParameterError("strategies must use at least one resource");
      for (int e : set) {
        if (e < 0 || e >= num_resources) throw ParameterError("strategy uses an unknown resource");
      }
    }
  }
}

CongestionGame CongestionGame::Identity(int resources, std::vector<std::vector<std::vector<int>>> strategies) {
  CongestionGame cg;
  cg.num_resources = resources;
  cg.delays.assign(resources, LinearDelay{});
  cg.strategies = std::move(strategies);
  cg.Validate();
  return cg;
}

std::vector<int> Loads(const CongestionGame& cg, std::span<const int> profile) {
  std::vector<int> loads(cg.num_resources, 0);
  for (int i = 0; i < cg.num_players(); ++i) {
    if (profile[i] == kDefault) continue;
    for (int e : cg.strategies[i][profile[i]]) ++loads[e];
  }
  return loads;
}

std::vector<Rational> PlayerCosts(const CongestionGame& cg, std::span<const int> profile) {
  const auto loads = Loads(cg, profile);
  std::vector<Rational> costs(cg.num_players(), Rational(0));
  for (int i = 0; i < cg.num_players(); ++i) {
    if (profile[i] == kDefault) continue;
    for (int e : cg.strategies[i][profile[i]]) costs[i] += cg.delays[e].a * loads[e] + cg.delays[e].b;
  }
  return costs;
}

Rational CongestionSocialCost(const CongestionGame& cg, std::span<const int> profile) {
  const auto loads = Loads(cg, profile);
  Rational total = 0;
  for (int e = 0; e < cg.num_resources; ++e) total += DelayTotal(cg.delays[e], loads[e]);
  return total;
}

Rational RosenthalPotential(const CongestionGame& cg, std::span<const int> profile) {
  const auto loads = Loads(cg, profile);
  Rational total = 0;
  for (int e = 0; e < cg.num_resources; ++e) {
    const long x = loads[e];
    // sum_{k=1..x} (a k + b) = a x (x + 1) / 2 + b x.
    total += cg.delays[e].a * Rational(x * (x + 1)) / 2 + cg.delays[e].b * x;
  }
  return total;
}

GameWithDefaults MakeCongestionGame(const CongestionGame& cg) {
  cg.Validate();
  auto shared = std::make_shared<const CongestionGame>(cg);
  Evaluator eval = [shared](std::span<const int> profile) {
    Outcome out;
    out.costs = PlayerCosts(*shared, profile);
    out.social = Sum(out.costs);
    return out;
  };
  std::vector<int> counts;
  for (const auto& s : cg.strategies) counts.push_back(static_cast<int>(s.size()));
  const int n = cg.num_players();
  return {FiniteGame(std::move(counts), Orientation::kMinimize, eval), DefaultStrategyMap::All(n, eval)};
}

NormalizedCongestion NormalizeToIdentity(const CongestionGame& cg) {
  cg.Validate();
  mpz_class scale = 1;
  for (const auto& d : cg.delays) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.a.get_den_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.b.get_den_mpz_t());
  }
  auto to_int = [](const Rational& r) { return static_cast<int>(mpz_class(r.get_num() / r.get_den()).get_si()); };
  NormalizedCongestion out;
  out.scale = Rational(scale);
  int next = 0;
  std::vector<std::vector<int>> shared(cg.num_resources);
  for (int e = 0; e < cg.num_resources; ++e) {
    const int copies = to_int(cg.delays[e].a * out.scale);
    for (int c = 0; c < copies; ++c) shared[e].push_back(next++);
  }
  out.game.strategies.resize(cg.num_players());
  for (int i = 0; i < cg.num_players(); ++i) {
    std::map<int, std::vector<int>> own;
    for (const auto& set : cg.strategies[i]) {
      for (int e : set) {
        if (own.count(e)) continue;
        const int copies = to_int(cg.delays[e].b * out.scale);
        auto& ids = own[e];
        for (int c = 0; c < copies; ++c) ids.push_back(next++);
      }
    }
    for (const auto& set : cg.strategies[i]) {
      std::vector<int> mapped;
      for (int e : set) {
        mapped.insert(mapped.end(), shared[e].begin(), shared[e].end());
        mapped.insert(mapped.end(), own[e].begin(), own[e].end());
      }
      std::sort(mapped.begin(), mapped.end());
      out.game.strategies[i].push_back(std::move(mapped));
    }
  }
  out.game.num_resources = next;
  out.game.delays.assign(next, LinearDelay{});
  return out;
}

Rational IdentityScgCost(const CongestionGame& cg, std::span<const int> profile, int player) {
  RequireIdentity(cg);
  if (profile[player] == kDefault) return 0;
  const auto loads = Loads(cg, profile);
  Rational total = 0;
  for (int e : cg.strategies[player][profile[player]]) total += 2 * loads[e] - 1;
  return total;
}

InequalityCheck ChristodoulouInequality(const CongestionGame& cg, std::span<const int> s,
                                        std::span<const int> sstar) {
  RequireIdentity(cg);
  Profile work(s.begin(), s.end());
  InequalityCheck check;
  for (int i = 0; i < cg.num_players(); ++i) {
    work[i] = sstar[i];
    check.lhs += PlayerCosts(cg, work)[i];
    work[i] = s[i];
  }
  const auto x = Loads(cg, s);
  const auto xs = Loads(cg, sstar);
  for (int e = 0; e < cg.num_resources; ++e) check.rhs += xs[e] * (x[e] + 1);
  check.ok = check.lhs <= check.rhs;
  return check;
}

InequalityCheck ScgDeviationInequality(const CongestionGame& cg, std::span<const int> s,
                                       std::span<const int> sstar) {
  RequireIdentity(cg);
  Profile work(s.begin(), s.end());
  InequalityCheck check;
  for (int i = 0; i < cg.num_players(); ++i) {
    work[i] = sstar[i];
    check.lhs += IdentityScgCost(cg, work, i);
    work[i] = s[i];
  }
  const auto x = Loads(cg, s);
  const auto xs = Loads(cg, sstar);
  for (int e = 0; e < cg.num_resources; ++e) check.rhs += xs[e] * (2 * x[e] + 1);
  check.ok = check.lhs <= check.rhs;
  return check;
}

bool BiloInequality(const Rational& a, const Rational& b) {
  return MakeRational(2, 5) * a * a * a + MakeRational(17, 5) * b * b >= b * (a + 1);
}

bool BiloResourceInequality(const Rational& x, const Rational& y) {
  return MakeRational(2, 5) * x * x + MakeRational(17, 5) * y * y >= y * (2 * x + 1);
}

LowerBoundFamily MakeLowerBoundFamily(int n) {
  if (n < 0) throw ParameterError("the family size must be nonnegative");
  const int blocks = n + 3;
  const int players = 3 * blocks;
  std::vector<std::vector<std::vector<int>>> strategies(players);
  for (int k = 0; k < blocks; ++k) {
    strategies[3 * k].push_back({3 * k, 3 * k + 1, 3 * k + 2});
    strategies[3 * k + 1].push_back({3 * k + 2, 3 * k + 3});
    strategies[3 * k + 2].push_back({3 * k + 3, 3 * k + 4});
  }
  // Costs under s decide how many fresh resources the last blocks get.
  int structural = 3 * (blocks - 1) + 5;
  std::vector<int> loads(structural, 0);
  for (const auto& st : strategies) {
    for (int e : st[0]) ++loads[e];
  }
  int next = structural;
  for (int k = 0; k < blocks; ++k) {
    for (int r = 0; r < 3; ++r) {
      auto& st = strategies[3 * k + r];
      if (k <= n) {
        st.push_back({3 * k + 6 + r});
        continue;
      }
      int cost = 0;
      for (int e : st[0]) cost += loads[e];
      std::vector<int> fresh(cost);
      std::iota(fresh.begin(), fresh.end(), next);
      next += cost;
      st.push_back(std::move(fresh));
    }
  }
  std::vector<std::vector<Rational>> alpha(players, std::vector<Rational>(players, Rational(0)));
  for (int i = 0; i < players; ++i) alpha[i][i] = 1;
  auto a = [](int k) { return 3 * k; };
  auto b = [](int k) { return 3 * k + 1; };
  auto c = [](int k) { return 3 * k + 2; };
  for (int k = 0; k <= n; ++k) {
    alpha[a(k)][b(k + 1)] = 1;
    alpha[a(k)][c(k + 1)] = 1;
    alpha[a(k)][a(k + 2)] = 1;
    alpha[b(k)][c(k + 1)] = 1;
    alpha[b(k)][a(k + 2)] = 1;
    alpha[c(k)][a(k + 2)] = 1;
    alpha[c(k)][b(k + 2)] = 1;
  }
  LowerBoundFamily family{n, CongestionGame::Identity(next, std::move(strategies)), Profile(players, 0),
                          Profile(players, 1), FriendshipMatrix(std::move(alpha))};
  return family;
}

Rational FamilyEquilibriumCost(int n) { return Rational(17 * n + 45); }

Rational FamilyAlternativeCost(int n) { return Rational(3 * n + 34); }

OptimumResult CongestionOptimumDp(const CongestionGame& cg, std::uint64_t max_states) {
  cg.Validate();
  const int n = cg.num_players();
  const int r = cg.num_resources;
  std::vector<int> first(r, n), last(r, -1);
  for (int i = 0; i < n; ++i) {
    for (const auto& set : cg.strategies[i]) {
      for (int e : set) {
        first[e] = std::min(first[e], i);
        last[e] = std::max(last[e], i);
      }
    }
  }
  struct State {
    std::vector<int> loads;  // over the open resources of the layer
    Rational cost;           // total cost of closed resources
    int parent = -1;
    int strategy = -1;
  };
  std::vector<std::vector<State>> layers(n + 1);
  std::vector<std::vector<int>> open(n + 1);
  layers[0].push_back(State{{}, Rational(0), -1, -1});
  std::vector<int> scratch(r, 0);
  for (int t = 0; t < n; ++t) {
    for (int e = 0; e < r; ++e) {
      if (first[e] <= t && last[e] > t) open[t + 1].push_back(e);
    }
    std::map<std::vector<int>, int> index;
    auto& next_layer = layers[t + 1];
    for (int p = 0; p < static_cast<int>(layers[t].size()); ++p) {
      const State& from = layers[t][p];
      for (int st = 0; st < static_cast<int>(cg.strategies[t].size()); ++st) {
        for (std::size_t q = 0; q < open[t].size(); ++q) scratch[open[t][q]] = from.loads[q];
        for (int e : cg.strategies[t][st]) ++scratch[e];
        Rational cost = from.cost;
        for (int e : cg.strategies[t][st]) {
          if (last[e] == t) {
            cost += DelayTotal(cg.delays[e], scratch[e]);
            scratch[e] = -1;  // closed and counted
          }
        }
        for (int e : open[t]) {
          if (last[e] == t && scratch[e] >= 0) cost += DelayTotal(cg.delays[e], scratch[e]);
        }
        std::vector<int> key;
        key.reserve(open[t + 1].size());
        for (int e : open[t + 1]) key.push_back(scratch[e]);
        for (int e : open[t]) scratch[e] = 0;
        for (int e : cg.strategies[t][st]) scratch[e] = 0;
        auto [it, inserted] = index.try_emplace(key, static_cast<int>(next_layer.size()));
        if (inserted) {
          next_layer.push_back(State{std::move(key), std::move(cost), p, st});
          if (next_layer.size() > max_states) throw BudgetError("dynamic program exceeded its state budget");
        } else if (cost < next_layer[it->second].cost) {
          next_layer[it->second].cost = std::move(cost);
          next_layer[it->second].parent = p;
          next_layer[it->second].strategy = st;
        }
      }
    }
  }
  int best = 0;
  for (int k = 1; k < static_cast<int>(layers[n].size()); ++k) {
    if (layers[n][k].cost < layers[n][best].cost) best = k;
  }
  OptimumResult result;
  result.value = layers[n][best].cost;
  result.profile.assign(n, 0);
  for (int t = n, k = best; t > 0; --t) {
    result.profile[t - 1] = layers[t][k].strategy;
    k = layers[t][k].parent;
  }
  return result;
}

std::vector<CongestionGame> EnumerateSmallIdentityGames(int max_players, int max_strategies, int resources) {
  if (resources < 1 || resources > 8) throw ParameterError("between 1 and 8 resources supported");
  const int full = (1 << resources) - 1;
  // Strategy sets as sorted mask lists.
  std::vector<std::vector<int>> options;
  std::vector<int> pick;
  auto grow = [&](auto&& self, int from) -> void {
    if (!pick.empty()) options.push_back(pick);
    if (static_cast<int>(pick.size()) == max_strategies) return;
    for (int mask = from; mask <= full; ++mask) {
      pick.push_back(mask);
      self(self, mask + 1);
      pick.pop_back();
    }
  };
  grow(grow, 1);
  std::sort(options.begin(), options.end());
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(resources);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  auto apply = [](const std::vector<int>& pi, int mask) {
    int out = 0;
    for (std::size_t b = 0; b < pi.size(); ++b) {
      if (mask >> b & 1) out |= 1 << pi[b];
    }
    return out;
  };
  std::vector<CongestionGame> games;
  std::vector<int> tuple;
  auto emit = [&]() {
    std::vector<std::vector<int>> key;
    for (int o : tuple) key.push_back(options[o]);
    for (const auto& pi : perms) {
      std::vector<std::vector<int>> image;
      for (const auto& opt : key) {
        std::vector<int> mapped;
        for (int mask : opt) mapped.push_back(apply(pi, mask));
        std::sort(mapped.begin(), mapped.end());
        image.push_back(std::move(mapped));
      }
      std::sort(image.begin(), image.end());
      if (image < key) return;
    }
    std::vector<std::vector<std::vector<int>>> strategies;
    for (const auto& opt : key) {
      std::vector<std::vector<int>> sets;
      for (int mask : opt) {
        std::vector<int> set;
        for (int e = 0; e < resources; ++e) {
          if (mask >> e & 1) set.push_back(e);
        }
        sets.push_back(std::move(set));
      }
      strategies.push_back(std::move(sets));
    }
    games.push_back(CongestionGame::Identity(resources, std::move(strategies)));
  };
  auto choose = [&](auto&& self, int remaining, int from) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int o = from; o < static_cast<int>(options.size()); ++o) {
      tuple.push_back(o);
      self(self, remaining - 1, o);
      tuple.pop_back();
    }
  };
  for (int players = 1; players <= max_players; ++players) choose(choose, players, 0);
  return games;
}

CongestionGame RandomIdentityGame(std::mt19937_64& rng, int players, int resources, int strategies) {
  std::uniform_int_distribution<int> mask_dist(1, (1 << resources) - 1);
  std::vector<std::vector<std::vector<int>>> sets(players);
  for (int i = 0; i < players; ++i) {
    std::vector<int> masks;
    for (int tries = 0; static_cast<int>(masks.size()) < strategies && tries < 64; ++tries) {
      const int mask = mask_dist(rng);
      if (std::find(masks.begin(), masks.end(), mask) == masks.end()) masks.push_back(mask);
    }
    for (int mask : masks) {
      std::vector<int> set;
      for (int e = 0; e < resources; ++e) {
        if (mask >> e & 1) set.push_back(e);
      }
      sets[i].push_back(std::move(set));
    }
  }
  return CongestionGame::Identity(resources, std::move(sets));
}

}  // namespace scg
