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

#include "scg/social_contribution.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "scg/equilibria.h"
#include "scg/errors.h"

namespace scg {
namespace {

void RequireAllDefaults(const FiniteGame& game, const DefaultStrategyMap& defaults) {
  if (defaults.num_players() != game.num_players()) {
    throw PreconditionError("default map covers " + std::to_string(defaults.num_players()) + " players, game has " +
                            std::to_string(game.num_players()));
  }
  for (int i = 0; i < game.num_players(); ++i) {
    if (!defaults.registered(i)) {
      throw PreconditionError("player " + std::to_string(i) + " has no default strategy");
    }
  }
}

void RequirePositiveWeights(const FiniteGame& game, const std::vector<Rational>& weights) {
  if (static_cast<int>(weights.size()) != game.num_players()) {
    throw ParameterError("one weight per player required");
  }
  for (const auto& w : weights) {
    if (w <= 0) throw ParameterError("player weights must be positive");
  }
}

ScBoundedCheck ScanScBound(const FiniteGame& game, const DefaultStrategyMap& defaults, std::uint64_t budget,
                           bool equality) {
  RequireAllDefaults(game, defaults);
  const OutcomeTable table = OutcomeTable::Build(game, budget);
  const DefaultedTable without = DefaultedTable::Build(game, defaults, budget);
  const Orientation o = game.orientation();
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    const Outcome& out = table.at(idx);
    for (int i = 0; i < game.num_players(); ++i) {
      const Rational contribution = out.social - without.WithDefault(i, idx).social;
      const bool holds = equality ? out.costs[i] == contribution : Bounded(o, out.costs[i], contribution);
      if (!holds) return {false, PlayerProfileWitness{i, table.space().At(idx)}};
    }
  }
  return {};
}

// Pointwise smoothness scan against a fixed optimum value; deviation(idx)
// gives the deviation sum at a profile and is evaluated lazily.
template <typename DeviationFn>
SmoothnessVerdict ScanSmoothness(const OutcomeTable& table, DeviationFn deviation, const Rational& lambda,
                                 const Rational& mu, const Rational& optimum) {
  const Orientation o = table.game().orientation();
  const Rational base = lambda * optimum;
  Rational rhs;
  Rational lhs;
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    rhs = mu * table.at(idx).social;
    rhs += base;
    lhs = deviation(idx);
    if (!Bounded(o, lhs, rhs)) {
      SmoothnessVerdict verdict;
      verdict.ok = false;
      verdict.violating = table.space().At(idx);
      verdict.lhs = std::move(lhs);
      verdict.rhs = std::move(rhs);
      return verdict;
    }
  }
  return {};
}

void ValidateModel(const OutcomeTable& table, const DeviationModel& model) {
  const FiniteGame& game = table.game();
  const int n = game.num_players();
  switch (model.flavor) {
    case SmoothnessFlavor::kBase:
      break;
    case SmoothnessFlavor::kAltruistic:
      if (!model.altruism || model.altruism->size() != n) {
        throw ParameterError("altruistic smoothness needs one altruism level per player");
      }
      if (auto bad = FindSumBoundViolation(table)) {
        throw PreconditionError("social cost is not sum-bounded");
      }
      break;
    case SmoothnessFlavor::kFriendship: {
      if (!model.friendship || model.friendship->size() != n) {
        throw ParameterError("friendship smoothness needs an n x n affection matrix");
      }
      const std::vector<Rational> weights = model.weights ? *model.weights : game.WeightsOrOnes();
      RequirePositiveWeights(game, weights);
      if (auto bad = FindWeightBoundViolation(table, weights)) {
        throw PreconditionError("social cost is not weight-bounded");
      }
      break;
    }
  }
}

void ValidateParameters(const SmoothnessCertificate& cert) {
  if (cert.lambda < 0) throw ParameterError("lambda must be nonnegative");
  if (cert.mu >= 1) throw ParameterError("mu must be below 1");
}

Rational OptimumOrThrow(const OutcomeTable& table, const Profile& sstar, Rational* value) {
  const OptimumResult opt = SocialOptimum(table);
  table.game().ValidateProfile(sstar);
  if (table.at(sstar).social != opt.value) {
    throw PreconditionError("s* has social cost " + ToString(table.at(sstar).social) + ", the optimum is " +
                            ToString(opt.value));
  }
  *value = opt.value;
  return opt.value;
}

struct Line {
  Rational intercept;
  Rational slope;
};

struct EnvelopeMinimum {
  Rational value;
  bool attained = false;
  Rational at;
};

// Minimizes f(t) = max_k (intercept_k + slope_k t) over t > lo, or t >= lo
// when closed. Some line must have a nonnegative slope, so f is bounded
// below. Flat minima are resolved toward `preferred`.
EnvelopeMinimum MinimizeEnvelope(std::vector<Line> lines, const Rational& lo, bool closed,
                                 const Rational& preferred) {
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    return a.intercept < b.intercept;
  });
  std::vector<Line> distinct;
  for (auto& line : lines) {
    if (!distinct.empty() && distinct.back().slope == line.slope) {
      distinct.back() = std::move(line);
    } else {
      distinct.push_back(std::move(line));
    }
  }
  auto cross = [](const Line& a, const Line& b) -> Rational { return (a.intercept - b.intercept) / (b.slope - a.slope); };
  std::vector<Line> hull;
  for (auto& line : distinct) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], line) <= cross(hull[hull.size() - 2], hull.back())) {
      hull.pop_back();
    }
    hull.push_back(std::move(line));
  }
  // Breakpoint k separates hull[k] and hull[k + 1].
  std::vector<Rational> breaks;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) breaks.push_back(cross(hull[k], hull[k + 1]));
  auto right_end_above = [&](std::size_t k) { return k + 1 == hull.size() || breaks[k] > lo; };
  std::size_t first = 0;
  while (!right_end_above(first)) ++first;
  std::size_t k = first;
  while (k < hull.size() && hull[k].slope < 0) ++k;
  if (k == hull.size()) throw std::logic_error("envelope is unbounded below");
  const Rational left = k == first ? lo : breaks[k - 1];
  EnvelopeMinimum result;
  if (hull[k].slope > 0) {
    result.at = left;
    result.value = hull[k].intercept + hull[k].slope * left;
    result.attained = k != first || closed;
    return result;
  }
  result.value = hull[k].intercept;
  result.attained = true;
  Rational t = preferred;
  if (t < left || (t == left && k == first && !closed)) t = left;
  if (k + 1 < hull.size() && t > breaks[k]) t = breaks[k];
  if (t == lo && !closed) {
    t = k + 1 < hull.size() ? Rational((lo + breaks[k]) / 2) : Rational(lo + 1);
  }
  result.at = std::move(t);
  return result;
}

RobustPoaResult RobustForDeviation(const OutcomeTable& table, const std::vector<Rational>& deviation,
                                   const Rational& optimum) {
  RobustPoaResult result;
  if (table.game().minimizing()) {
    // tau = 1 / (1 - mu), lambda' = lambda tau >= (C + tau (D - C)) / C*.
    std::vector<Line> lines{{Rational(0), Rational(0)}};
    lines.reserve(table.size() + 1);
    for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
      const Rational& c = table.at(idx).social;
      lines.push_back({c / optimum, (deviation[idx] - c) / optimum});
    }
    const EnvelopeMinimum m = MinimizeEnvelope(std::move(lines), Rational(0), false, Rational(1));
    result.value = m.value;
    result.attained = m.attained;
    if (m.attained) {
      result.lambda = m.value / m.at;
      result.mu = 1 - 1 / m.at;
    }
    return result;
  }
  // a = 1 / lambda, v = (1 - mu) / lambda: v Pi(s) >= Pi* + a (Pi(s) - D(s)).
  std::vector<Line> lines{{Rational(0), Rational(0)}};
  Rational lo = 0;
  bool closed = false;
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    const Rational& pi = table.at(idx).social;
    if (pi == 0) {
      if (deviation[idx] <= 0) {
        result.status = RobustPoaResult::Status::kInfeasible;
        return result;
      }
      const Rational bound = optimum / deviation[idx];
      if (!closed || bound > lo) lo = bound;
      closed = true;
      continue;
    }
    lines.push_back({optimum / pi, (pi - deviation[idx]) / pi});
  }
  // A flat minimum is resolved toward mu = 0, which is a = v.
  EnvelopeMinimum m = MinimizeEnvelope(lines, lo, closed, Rational(1));
  if (m.attained && m.value > 0) {
    const EnvelopeMinimum again = MinimizeEnvelope(lines, lo, closed, m.value);
    if (again.value == m.value) m = again;
  }
  result.value = m.value;
  result.attained = m.attained && m.value > 0;
  if (result.attained) {
    result.lambda = 1 / m.at;
    result.mu = 1 - m.value / m.at;
  }
  return result;
}

}  // namespace

Rational ScgCost(const FiniteGame& game, const DefaultStrategyMap& defaults, int player,
                 std::span<const int> profile) {
  if (player < 0 || player >= game.num_players()) throw ParameterError("player index out of range");
  if (player >= defaults.num_players() || !defaults.registered(player)) {
    throw PreconditionError("player " + std::to_string(player) + " has no default strategy");
  }
  Profile without(profile.begin(), profile.end());
  without[player] = kDefault;
  return EvaluateWithDefaults(game, defaults, profile).social - EvaluateWithDefaults(game, defaults, without).social;
}

GameWithDefaults CorrespondingScg(const FiniteGame& game, const DefaultStrategyMap& defaults) {
  RequireAllDefaults(game, defaults);
  const int n = game.num_players();
  auto contributions = [game, defaults, n](std::span<const int> profile, Outcome base) {
    Profile work(profile.begin(), profile.end());
    for (int i = 0; i < n; ++i) {
      if (work[i] == kDefault) {
        base.costs[i] = 0;
        continue;
      }
      const int own = work[i];
      work[i] = kDefault;
      base.costs[i] = base.social - defaults.Evaluate(game, work).social;
      work[i] = own;
    }
    return base;
  };
  Evaluator eval = [game, contributions](std::span<const int> profile) {
    return contributions(profile, game.evaluator()(profile));
  };
  Evaluator extended = [game, defaults, contributions](std::span<const int> profile) {
    return contributions(profile, defaults.Evaluate(game, profile));
  };
  return {game.WithEvaluator(std::move(eval)), DefaultStrategyMap::All(n, std::move(extended))};
}

ScBoundedCheck CheckScBounded(const FiniteGame& game, const DefaultStrategyMap& defaults, std::uint64_t budget) {
  return ScanScBound(game, defaults, budget, false);
}

ScBoundedCheck CheckIsScg(const FiniteGame& game, const DefaultStrategyMap& defaults, std::uint64_t budget) {
  return ScanScBound(game, defaults, budget, true);
}

StrongScCheck CheckStronglyScBounded(const FiniteGame& game, const DefaultStrategyMap& defaults,
                                     const std::vector<Rational>& weights, std::uint64_t budget) {
  RequirePositiveWeights(game, weights);
  RequireAllDefaults(game, defaults);
  const OutcomeTable table = OutcomeTable::Build(game, budget);
  const DefaultedTable without = DefaultedTable::Build(game, defaults, budget);
  const Orientation o = game.orientation();
  const int n = game.num_players();
  StrongScCheck result;
  if (auto bad = FindWeightBoundViolation(table, weights)) {
    result.ok = false;
    result.condition = 0;
    result.profile = std::move(bad);
    return result;
  }
  auto fail = [&](int condition, int i, std::optional<int> j, std::uint64_t idx) {
    result.ok = false;
    result.condition = condition;
    result.player = i;
    result.other = j;
    result.profile = table.space().At(idx);
    return result;
  };
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    for (int i = 0; i < n; ++i) {
      if (without.WithDefault(i, idx).costs[i] != 0) return fail(1, i, std::nullopt, idx);
    }
  }
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    const Outcome& out = table.at(idx);
    for (int i = 0; i < n; ++i) {
      const Outcome& off = without.WithDefault(i, idx);
      for (int j = 0; j < n; ++j) {
        if (j != i && !Bounded(o, off.costs[j], out.costs[j])) return fail(2, i, j, idx);
      }
    }
  }
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    const Outcome& out = table.at(idx);
    for (int i = 0; i < n; ++i) {
      const Outcome& off = without.WithDefault(i, idx);
      Rational impact = 0;
      for (int j = 0; j < n; ++j) impact += out.costs[j] - off.costs[j];
      if (!Bounded(o, weights[i] * impact, out.social - off.social)) return fail(3, i, std::nullopt, idx);
    }
  }
  return result;
}

const char* FlavorName(SmoothnessFlavor flavor) {
  switch (flavor) {
    case SmoothnessFlavor::kBase:
      return "base";
    case SmoothnessFlavor::kAltruistic:
      return "altruistic";
    case SmoothnessFlavor::kFriendship:
      return "friendship";
  }
  return "base";
}

SmoothnessFlavor ParseFlavor(const std::string& name) {
  if (name == "base") return SmoothnessFlavor::kBase;
  if (name == "altruistic") return SmoothnessFlavor::kAltruistic;
  if (name == "friendship") return SmoothnessFlavor::kFriendship;
  throw ParseError("unknown smoothness flavor '" + name + "'");
}

Rational SmoothnessCertificate::RobustBound(Orientation orientation) const {
  if (orientation == Orientation::kMinimize) return lambda / (1 - mu);
  if (lambda == 0) throw ParameterError("lambda must be positive for a payoff bound");
  return (1 - mu) / lambda;
}

namespace {

// Deviation sums of one model and deviation profile, one profile at a time.
class DeviationEvaluator {
 public:
  DeviationEvaluator(const OutcomeTable& table, const DeviationModel& model, const MixedStrategyProfile& sbar)
      : table_(table), model_(model), sbar_(&sbar) {
    const FiniteGame& game = table.game();
    if (sbar.num_players() != game.num_players()) {
      throw ParameterError("deviation profile has the wrong number of players");
    }
    sbar.Validate(game);
    if (model.flavor == SmoothnessFlavor::kAltruistic) {
      pure_ = sbar.AsPure();
      if (!pure_) throw ParameterError("altruistic smoothness deviates to a pure optimum");
    }
    weights_ = model.weights ? *model.weights : game.WeightsOrOnes();
  }

  // Altruistic deviation to a pure profile.
  DeviationEvaluator(const OutcomeTable& table, const DeviationModel& model, const Profile& pure)
      : table_(table), model_(model), pure_(pure) {
    if (model.flavor != SmoothnessFlavor::kAltruistic) throw ParameterError("pure deviation needs the altruistic model");
    table.game().ValidateProfile(pure);
  }

  Rational operator()(std::uint64_t idx) const {
    const int n = table_.game().num_players();
    const Outcome& out = table_.at(idx);
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
      switch (model_.flavor) {
        case SmoothnessFlavor::kBase:
          for (const auto& [t, p] : sbar_->of(i)) total += p * table_.at(table_.Deviate(idx, i, t)).costs[i];
          break;
        case SmoothnessFlavor::kAltruistic: {
          const Outcome& dev = table_.at(table_.Deviate(idx, i, (*pure_)[i]));
          const Rational& a = (*model_.altruism)[i];
          total += dev.costs[i];
          if (a != 0) {
            scratch_ = dev.social - dev.costs[i];
            scratch_ -= out.social;
            scratch_ += out.costs[i];
            scratch_ *= a;
            total += scratch_;
          }
          break;
        }
        case SmoothnessFlavor::kFriendship: {
          Rational term = 0;
          for (const auto& [t, p] : sbar_->of(i)) {
            const Outcome& dev = table_.at(table_.Deviate(idx, i, t));
            Rational inner = dev.costs[i];
            for (int j = 0; j < n; ++j) {
              if (j != i) inner += (*model_.friendship)(i, j) * (dev.costs[j] - out.costs[j]);
            }
            term += p * inner;
          }
          total += weights_[i] * term;
          break;
        }
      }
    }
    return total;
  }

 private:
  const OutcomeTable& table_;
  const DeviationModel& model_;
  const MixedStrategyProfile* sbar_ = nullptr;
  std::optional<Profile> pure_;
  std::vector<Rational> weights_;
  mutable Rational scratch_;
};

}  // namespace

std::vector<Rational> DeviationSums(const OutcomeTable& table, const DeviationModel& model,
                                    const MixedStrategyProfile& sbar) {
  const DeviationEvaluator eval(table, model, sbar);
  std::vector<Rational> sums(table.size());
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) sums[idx] = eval(idx);
  return sums;
}

SmoothnessVerdict CheckSmoothness(const OutcomeTable& table, const DeviationModel& model,
                                  const SmoothnessCertificate& cert) {
  if (cert.flavor != model.flavor) {
    throw ParameterError(std::string("certificate flavor is ") + FlavorName(cert.flavor) + ", check expects " +
                         FlavorName(model.flavor));
  }
  ValidateParameters(cert);
  ValidateModel(table, model);
  Rational optimum;
  OptimumOrThrow(table, cert.sstar, &optimum);
  if (model.flavor != SmoothnessFlavor::kAltruistic) {
    return ScanSmoothness(table, DeviationEvaluator(table, model, cert.sbar), cert.lambda, cert.mu, optimum);
  }
  std::vector<Profile> order{cert.sstar};
  for (auto& p : AllOptima(table)) {
    if (p != cert.sstar) order.push_back(std::move(p));
  }
  SmoothnessVerdict first;
  for (std::size_t k = 0; k < order.size(); ++k) {
    SmoothnessVerdict verdict =
        ScanSmoothness(table, DeviationEvaluator(table, model, order[k]), cert.lambda, cert.mu, optimum);
    verdict.optimum = order[k];
    if (verdict.ok) return verdict;
    if (k == 0) first = std::move(verdict);
  }
  return first;
}

SmoothnessVerdict CheckSmoothnessBase(const FiniteGame& game, const SmoothnessCertificate& cert,
                                      std::uint64_t budget) {
  return CheckSmoothness(OutcomeTable::Build(game, budget), DeviationModel{}, cert);
}

SmoothnessVerdict CheckSmoothnessAltruistic(const FiniteGame& game, const AltruismVector& alpha,
                                            const SmoothnessCertificate& cert, std::uint64_t budget) {
  DeviationModel model;
  model.flavor = SmoothnessFlavor::kAltruistic;
  model.altruism = alpha;
  return CheckSmoothness(OutcomeTable::Build(game, budget), model, cert);
}

SmoothnessVerdict CheckSmoothnessFriendship(const FiniteGame& game, const FriendshipMatrix& alpha,
                                            const std::vector<Rational>& weights,
                                            const SmoothnessCertificate& cert, std::uint64_t budget) {
  DeviationModel model;
  model.flavor = SmoothnessFlavor::kFriendship;
  model.friendship = alpha;
  model.weights = weights;
  return CheckSmoothness(OutcomeTable::Build(game, budget), model, cert);
}

RobustPoaResult RobustPoaBound(const FiniteGame& game, const std::vector<MixedStrategyProfile>& candidates,
                               const DeviationModel& model, std::uint64_t budget) {
  return RobustPoaBound(OutcomeTable::Build(game, budget), candidates, model);
}

RobustPoaResult RobustPoaBound(const OutcomeTable& table, const std::vector<MixedStrategyProfile>& candidates,
                               const DeviationModel& model) {
  if (candidates.empty()) throw ParameterError("at least one deviation candidate is required");
  ValidateModel(table, model);
  const OptimumResult opt = SocialOptimum(table);
  RobustPoaResult best;
  if (opt.value == 0) {
    best.status = RobustPoaResult::Status::kDegenerate;
    return best;
  }
  bool have = false;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (model.flavor == SmoothnessFlavor::kAltruistic) {
      auto pure = candidates[k].AsPure();
      if (!pure) throw ParameterError("altruistic candidates must be pure optima");
      table.game().ValidateProfile(*pure);
      if (table.at(*pure).social != opt.value) throw PreconditionError("altruistic candidate is not optimal");
    }
    RobustPoaResult r = RobustForDeviation(table, DeviationSums(table, model, candidates[k]), opt.value);
    r.candidate = static_cast<int>(k);
    if (r.status != RobustPoaResult::Status::kOk) {
      if (!have) best = r;
      continue;
    }
    const bool better = !have || best.status != RobustPoaResult::Status::kOk || r.value < best.value ||
                        (r.value == best.value && r.attained && !best.attained);
    if (better) best = std::move(r);
    have = true;
  }
  return best;
}

IdentityCheck CheckAltruismIndependenceIdentity(const FiniteGame& game, const DefaultStrategyMap& defaults,
                                                std::uint64_t budget) {
  const OutcomeTable table = OutcomeTable::Build(game, budget);
  IdentityCheck result;
  result.is_scg = defaults.num_players() == game.num_players() && defaults.all_registered() &&
                  CheckIsScg(game, defaults, budget).ok;
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    const Outcome& out = table.at(idx);
    for (int i = 0; i < game.num_players(); ++i) {
      const Rational others = out.social - out.costs[i];
      for (int t = 0; t < game.strategy_count(i); ++t) {
        const Outcome& dev = table.at(table.Deviate(idx, i, t));
        if (dev.social - dev.costs[i] != others) {
          result.ok = false;
          result.player = i;
          result.profile = table.space().At(idx);
          result.deviation = t;
          return result;
        }
      }
    }
  }
  return result;
}

TransferResult ReductionTransferCheck(const FiniteGame& game, const DefaultStrategyMap& defaults,
                                      const AltruismVector& alpha, const SmoothnessCertificate& cert,
                                      std::uint64_t budget) {
  TransferResult result;
  if (!CheckScBounded(game, defaults, budget).ok) {
    result.failure = "game is not SC-bounded";
    return result;
  }
  const GameWithDefaults scg = CorrespondingScg(game, defaults);
  SmoothnessCertificate on_scg = cert;
  on_scg.flavor = SmoothnessFlavor::kBase;
  on_scg.sbar = MixedStrategyProfile::Pure(cert.sstar);
  result.scg_verdict = CheckSmoothnessBase(scg.game, on_scg, budget);
  if (!result.scg_verdict.ok) {
    result.failure = "certificate does not hold on the social contribution game";
    return result;
  }
  SmoothnessCertificate on_ext = cert;
  on_ext.flavor = SmoothnessFlavor::kAltruistic;
  try {
    result.extension_verdict = CheckSmoothnessAltruistic(game, alpha, on_ext, budget);
  } catch (const PreconditionError& e) {
    result.failure = e.what();
    return result;
  }
  result.ok = result.extension_verdict.ok;
  if (!result.ok) result.failure = "certificate does not hold on the altruistic extension";
  return result;
}

TransferResult ReductionTransferCheck(const FiniteGame& game, const DefaultStrategyMap& defaults,
                                      const FriendshipMatrix& alpha, const std::vector<Rational>& weights,
                                      const SmoothnessCertificate& cert, std::uint64_t budget) {
  TransferResult result;
  const StrongScCheck strong = CheckStronglyScBounded(game, defaults, weights, budget);
  if (!strong.ok) {
    result.failure = "game is not strongly SC-bounded (condition " + std::to_string(strong.condition) + ")";
    return result;
  }
  const GameWithDefaults scg = CorrespondingScg(game, defaults);
  SmoothnessCertificate on_scg = cert;
  on_scg.flavor = SmoothnessFlavor::kBase;
  result.scg_verdict = CheckSmoothnessBase(scg.game, on_scg, budget);
  if (!result.scg_verdict.ok) {
    result.failure = "certificate does not hold on the social contribution game";
    return result;
  }
  SmoothnessCertificate on_ext = cert;
  on_ext.flavor = SmoothnessFlavor::kFriendship;
  result.extension_verdict = CheckSmoothnessFriendship(game, alpha, weights, on_ext, budget);
  result.ok = result.extension_verdict.ok;
  if (!result.ok) result.failure = "certificate does not hold on the friendship extension";
  return result;
}

bool CoarseCostWithinBound(const FiniteGame& game, const FiniteSupportDistribution& sigma, const Rational& bound,
                           const Rational& optimum) {
  return Bounded(game.orientation(), ExpectedSocialCost(game, sigma), bound * optimum);
}

}  // namespace scg
