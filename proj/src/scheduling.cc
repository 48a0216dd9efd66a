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

#include "scg/scheduling.h"

#include <algorithm>
#include <string>
#include <utility>

#include "scg/errors.h"

namespace scg {
namespace {

void RequireIdentical(const SchedulingInstance& inst, const char* what) {
  if (inst.env != Environment::kP) throw PreconditionError(std::string(what) + " needs identical machines");
}

void RequireUnitWeights(const SchedulingInstance& inst, const char* what) {
  for (const auto& w : inst.weights) {
    if (w != 1) throw PreconditionError(std::string(what) + " needs unit weights");
  }
}

void RequireSortedSizes(const SchedulingInstance& inst, const char* what) {
  if (!std::is_sorted(inst.sizes.begin(), inst.sizes.end())) {
    throw PreconditionError(std::string(what) + " needs sizes in nondecreasing order");
  }
}

Rational SizeSum(const SchedulingInstance& inst) { return Sum(inst.sizes); }

// Jobs per machine, each list in Smith order.
std::vector<std::vector<int>> MachineLists(const SchedulingInstance& inst, std::span<const int> x) {
  const int m = inst.num_machines();
  if (static_cast<int>(x.size()) != inst.num_jobs()) throw EvaluationError("schedule has the wrong number of jobs");
  std::vector<std::vector<int>> lists(m);
  for (int j = 0; j < inst.num_jobs(); ++j) {
    if (x[j] == kDefault) continue;
    if (x[j] < 0 || x[j] >= m) throw EvaluationError("job " + std::to_string(j) + " on a nonexistent machine");
    lists[x[j]].push_back(j);
  }
  for (int i = 0; i < m; ++i) lists[i] = MachineOrder(inst, i, std::move(lists[i]));
  return lists;
}

Rational FromInt(std::mt19937_64& rng, int lo, int hi) {
  return Rational(std::uniform_int_distribution<int>(lo, hi)(rng));
}

}  // namespace

const char* EnvironmentName(Environment env) {
  switch (env) {
    case Environment::kR:
      return "R";
    case Environment::kQ:
      return "Q";
    case Environment::kP:
      return "P";
  }
  return "R";
}

void SchedulingInstance::Validate() const {
  const int m = num_machines();
  const int n = num_jobs();
  if (m < 1) throw ParameterError("at least one machine required");
  for (const auto& row : p) {
    if (static_cast<int>(row.size()) != n) throw ParameterError("processing time matrix must be m x n");
    for (const auto& t : row) {
      if (t <= 0) throw ParameterError("processing times must be positive");
    }
  }
  for (const auto& w : weights) {
    if (w < 0) throw ParameterError("job weights must be nonnegative");
  }
  if (env == Environment::kR) return;
  if (static_cast<int>(sizes.size()) != n || static_cast<int>(speeds.size()) != m) {
    throw ParameterError("related machines need one size per job and one speed per machine");
  }
  for (int i = 0; i < m; ++i) {
    if (speeds[i] <= 0) throw ParameterError("machine speeds must be positive");
    if (env == Environment::kP && speeds[i] != 1) throw ParameterError("identical machines have unit speed");
    for (int j = 0; j < n; ++j) {
      if (p[i][j] != sizes[j] / speeds[i]) throw ParameterError("processing times disagree with sizes and speeds");
    }
  }
}

SchedulingInstance SchedulingInstance::Unrelated(std::vector<std::vector<Rational>> p, std::vector<Rational> weights) {
  SchedulingInstance inst;
  inst.env = Environment::kR;
  inst.p = std::move(p);
  inst.weights = std::move(weights);
  inst.Validate();
  return inst;
}

SchedulingInstance SchedulingInstance::Related(std::vector<Rational> sizes, std::vector<Rational> speeds,
                                               std::vector<Rational> weights) {
  SchedulingInstance inst;
  inst.env = Environment::kQ;
  for (const auto& s : speeds) {
    if (s <= 0) throw ParameterError("machine speeds must be positive");
  }
  inst.p.assign(speeds.size(), {});
  for (std::size_t i = 0; i < speeds.size(); ++i) {
    for (const auto& size : sizes) inst.p[i].push_back(size / speeds[i]);
  }
  inst.sizes = std::move(sizes);
  inst.speeds = std::move(speeds);
  inst.weights = std::move(weights);
  inst.Validate();
  return inst;
}

SchedulingInstance SchedulingInstance::Identical(int machines, std::vector<Rational> sizes,
                                                 std::optional<std::vector<Rational>> weights) {
  if (machines < 1) throw ParameterError("at least one machine required");
  std::vector<Rational> w = weights ? std::move(*weights) : std::vector<Rational>(sizes.size(), Rational(1));
  SchedulingInstance inst =
      Related(std::move(sizes), std::vector<Rational>(machines, Rational(1)), std::move(w));
  inst.env = Environment::kP;
  return inst;
}

bool SmithBefore(const SchedulingInstance& inst, int machine, int j, int k) {
  // rho_ij < rho_ik  <=>  p_ij w_k < p_ik w_j, with w = 0 read as rho = +inf.
  const Rational lhs = inst.p[machine][j] * inst.weights[k];
  const Rational rhs = inst.p[machine][k] * inst.weights[j];
  if (lhs != rhs) return lhs < rhs;
  return j < k;
}

std::vector<int> MachineOrder(const SchedulingInstance& inst, int machine, std::vector<int> jobs) {
  std::sort(jobs.begin(), jobs.end(), [&](int j, int k) { return SmithBefore(inst, machine, j, k); });
  return jobs;
}

std::vector<Rational> CompletionTimes(const SchedulingInstance& inst, std::span<const int> x) {
  std::vector<Rational> completion(inst.num_jobs(), Rational(0));
  const auto lists = MachineLists(inst, x);
  for (int i = 0; i < inst.num_machines(); ++i) {
    Rational t = 0;
    for (int j : lists[i]) {
      t += inst.p[i][j];
      completion[j] = t;
    }
  }
  return completion;
}

Rational WeightedSocialCost(const SchedulingInstance& inst, std::span<const int> x) {
  const auto completion = CompletionTimes(inst, x);
  Rational total = 0;
  for (int j = 0; j < inst.num_jobs(); ++j) total += inst.weights[j] * completion[j];
  return total;
}

WeightConditionCheck CheckWeightCondition(const SchedulingInstance& inst) {
  const int n = inst.num_jobs();
  for (int i = 0; i < inst.num_machines(); ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (j == k || inst.weights[j] <= inst.weights[k]) continue;
        // rho_ij <= rho_ik, with rho = +inf for weight 0.
        const bool not_later = inst.weights[k] == 0 ||
                               inst.p[i][j] * inst.weights[k] <= inst.p[i][k] * inst.weights[j];
        if (not_later) return {false, std::array<int, 3>{i, j, k}};
      }
    }
  }
  return {};
}

GameWithDefaults SchedulingGame(const SchedulingInstance& inst) {
  inst.Validate();
  const int n = inst.num_jobs();
  auto shared = std::make_shared<const SchedulingInstance>(inst);
  Evaluator eval = [shared](std::span<const int> x) {
    Outcome out;
    out.costs = CompletionTimes(*shared, x);
    out.social = 0;
    for (int j = 0; j < shared->num_jobs(); ++j) out.social += shared->weights[j] * out.costs[j];
    return out;
  };
  std::optional<std::vector<Rational>> weights;
  if (std::all_of(inst.weights.begin(), inst.weights.end(), [](const Rational& w) { return w > 0; })) {
    weights = inst.weights;
  }
  FiniteGame game(std::vector<int>(n, inst.num_machines()), Orientation::kMinimize, eval, std::move(weights));
  return {std::move(game), DefaultStrategyMap::All(n, eval)};
}

Rational ScheduledContribution(const SchedulingInstance& inst, std::span<const int> x, int job) {
  const auto completion = CompletionTimes(inst, x);
  Rational total = inst.weights[job] * completion[job];
  const int i = x[job];
  if (i == kDefault) return 0;
  for (int k = 0; k < inst.num_jobs(); ++k) {
    if (k != job && x[k] == i && SmithBefore(inst, i, job, k)) total += inst.weights[k] * inst.p[i][job];
  }
  return total;
}

InequalityCheck ColeInequality(const SchedulingInstance& inst, std::span<const int> x, std::span<const int> xstar) {
  const int n = inst.num_jobs();
  Rational lhs = 0;
  for (int j = 0; j < n; ++j) {
    const int i = xstar[j];
    if (i == kDefault) continue;
    lhs += inst.weights[j] * inst.p[i][j];
    for (int k = 0; k < n; ++k) {
      if (x[k] != i) continue;
      // w_j w_k min(rho_ij, rho_ik) = min(w_k p_ij, w_j p_ik).
      lhs += std::min(Rational(inst.weights[k] * inst.p[i][j]), Rational(inst.weights[j] * inst.p[i][k]));
    }
  }
  InequalityCheck check;
  check.rhs = 2 * WeightedSocialCost(inst, xstar) + WeightedSocialCost(inst, x) / 2;
  check.lhs = std::move(lhs);
  check.ok = check.lhs <= check.rhs;
  return check;
}

InequalityCheck ScgSmoothnessChain(const SchedulingInstance& inst, std::span<const int> x,
                                   std::span<const int> xstar) {
  Rational lhs = 0;
  Schedule work(x.begin(), x.end());
  for (int j = 0; j < inst.num_jobs(); ++j) {
    work[j] = xstar[j];
    lhs += ScheduledContribution(inst, work, j);
    work[j] = x[j];
  }
  InequalityCheck check;
  check.rhs = 2 * WeightedSocialCost(inst, xstar) + WeightedSocialCost(inst, x) / 2;
  check.lhs = std::move(lhs);
  check.ok = check.lhs <= check.rhs;
  return check;
}

Schedule MftSchedule(const SchedulingInstance& inst) {
  if (inst.env == Environment::kR) throw UnsupportedError("MFT needs identical or related machines");
  for (const auto& w : inst.weights) {
    if (w != inst.weights.front()) throw PreconditionError("MFT minimizes unweighted flow time");
  }
  const int n = inst.num_jobs();
  const int m = inst.num_machines();
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j;
  // Longest first; among equal sizes the highest index goes first.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (inst.sizes[a] != inst.sizes[b]) return inst.sizes[a] > inst.sizes[b];
    return a > b;
  });
  std::vector<int> h(m, 0);
  Schedule x(n, 0);
  for (int j : order) {
    int best = 0;
    for (int i = 1; i < m; ++i) {
      if (Rational(h[i] + 1) / inst.speeds[i] < Rational(h[best] + 1) / inst.speeds[best]) best = i;
    }
    x[j] = best;
    ++h[best];
  }
  return x;
}

Rational OptimalCostClosedForm(const SchedulingInstance& inst) {
  RequireIdentical(inst, "optimal cost formula");
  RequireUnitWeights(inst, "optimal cost formula");
  std::vector<Rational> p = inst.sizes;
  std::sort(p.begin(), p.end());
  const long n = static_cast<long>(p.size());
  const long m = inst.num_machines();
  Rational total = 0;
  for (long j = 1; j <= n; ++j) total += p[j - 1] * (1 + (n - j) / m);
  return total;
}

Rational UniformMixedCostClosedForm(const SchedulingInstance& inst) {
  RequireIdentical(inst, "mixed cost formula");
  RequireUnitWeights(inst, "mixed cost formula");
  RequireSortedSizes(inst, "mixed cost formula");
  const long n = inst.num_jobs();
  const long m = inst.num_machines();
  Rational total = 0;
  for (long j = 1; j <= n; ++j) total += inst.sizes[j - 1] * (m + n - j);
  return total / m;
}

Rational UniformMixedCostDirect(const SchedulingInstance& inst, std::span<const int> x) {
  const int m = inst.num_machines();
  Schedule work(x.begin(), x.end());
  Rational total = 0;
  for (int j = 0; j < inst.num_jobs(); ++j) {
    for (int i = 0; i < m; ++i) {
      work[j] = i;
      total += CompletionTimes(inst, work)[j];
    }
    work[j] = x[j];
  }
  return total / m;
}

Rational FullyMixedExpectedCost(const SchedulingInstance& inst) {
  const int m = inst.num_machines();
  const int n = inst.num_jobs();
  Rational total = 0;
  for (int j = 0; j < n; ++j) {
    Rational expected = 0;
    for (int i = 0; i < m; ++i) {
      Rational on_i = inst.p[i][j];
      for (int k = 0; k < n; ++k) {
        if (k != j && SmithBefore(inst, i, k, j)) on_i += inst.p[i][k] / m;
      }
      expected += on_i;
    }
    total += inst.weights[j] * expected / m;
  }
  return total;
}

bool IsUniformMixedNash(const SchedulingInstance& inst) {
  const int m = inst.num_machines();
  const int n = inst.num_jobs();
  for (int j = 0; j < n; ++j) {
    std::optional<Rational> first;
    for (int i = 0; i < m; ++i) {
      Rational on_i = inst.p[i][j];
      for (int k = 0; k < n; ++k) {
        if (k != j && SmithBefore(inst, i, k, j)) on_i += inst.p[i][k] / m;
      }
      if (!first) {
        first = on_i;
      } else if (*first != on_i) {
        return false;
      }
    }
  }
  return true;
}

Rational IdenticalMachinesRobustBound(int machines) {
  if (machines < 1) throw ParameterError("at least one machine required");
  return MakeRational(3, 2) - MakeRational(1, 2 * machines);
}

InequalityCheck RpoaPInequality(const SchedulingInstance& inst, std::span<const int> x) {
  RequireIdentical(inst, "the identical-machines bound");
  RequireUnitWeights(inst, "the identical-machines bound");
  const int m = inst.num_machines();
  InequalityCheck check;
  check.lhs = UniformMixedCostDirect(inst, x);
  check.rhs = WeightedSocialCost(inst, MftSchedule(inst)) + (MakeRational(1, 2) - MakeRational(1, 2 * m)) * SizeSum(inst);
  check.ok = check.lhs <= check.rhs;
  return check;
}

SmoothnessCertificate RpoaPCertificate(const SchedulingInstance& inst) {
  RequireIdentical(inst, "the identical-machines certificate");
  RequireUnitWeights(inst, "the identical-machines certificate");
  const int m = inst.num_machines();
  const Schedule xstar = MftSchedule(inst);
  const Rational optimum = WeightedSocialCost(inst, xstar);
  SmoothnessCertificate cert{
      1 + (MakeRational(1, 2) - MakeRational(1, 2 * m)) * SizeSum(inst) / optimum, Rational(0),
      MixedStrategyProfile::Uniform(std::vector<int>(inst.num_jobs(), m)), xstar, SmoothnessFlavor::kBase};
  return cert;
}

bool LinearWeightsInequality(const std::vector<Rational>& p) {
  if (p.empty()) throw ParameterError("sequence must be nonempty");
  if (!std::is_sorted(p.begin(), p.end())) throw PreconditionError("sequence must be nondecreasing");
  const long m = static_cast<long>(p.size());
  Rational rhs = 0;
  for (long j = 1; j <= m; ++j) rhs += MakeRational(m - j, m) * p[j - 1];
  return (MakeRational(1, 2) - MakeRational(1, 2 * m)) * Sum(p) >= rhs;
}

Rational SocialCostLowerBound(const SchedulingInstance& inst) {
  Rational total = 0;
  for (int j = 0; j < inst.num_jobs(); ++j) {
    Rational best = inst.p[0][j];
    for (int i = 1; i < inst.num_machines(); ++i) best = std::min(best, inst.p[i][j]);
    total += inst.weights[j] * best;
  }
  return total;
}

WeightCounterexample MakeWeightCounterexample(int machines) {
  if (machines < 2) throw ParameterError("the counterexample needs at least two machines");
  const int m = machines;
  const int heavy = m;
  const int n = m + m * (m - 1);
  std::vector<Rational> weights(n, Rational(0));
  for (int j = 0; j < heavy; ++j) weights[j] = 1;
  SchedulingInstance inst = SchedulingInstance::Identical(m, std::vector<Rational>(n, Rational(1)), weights);
  std::vector<std::vector<Rational>> alpha(n, std::vector<Rational>(n, Rational(0)));
  for (int j = 0; j < n; ++j) alpha[j][j] = 1;
  for (int j = 0; j < heavy; ++j) {
    for (int k = heavy; k < n; ++k) alpha[j][k] = 1;
  }
  Schedule x(n, 0);
  Schedule xstar(n, 0);
  for (int j = 0; j < heavy; ++j) xstar[j] = j;
  for (int t = 0; t < n - heavy; ++t) {
    x[heavy + t] = 1 + t % (m - 1);
    xstar[heavy + t] = 1 + t % (m - 1);
  }
  return {std::move(inst), FriendshipMatrix(std::move(alpha)), std::move(x), std::move(xstar)};
}

SchedulingInstance RestrictedInstance(const std::vector<Rational>& sizes,
                                      const std::vector<std::vector<bool>>& allowed, std::vector<Rational> weights) {
  const Rational big = 1 + Sum(sizes);
  std::vector<std::vector<Rational>> p(allowed.size());
  for (std::size_t i = 0; i < allowed.size(); ++i) {
    if (allowed[i].size() != sizes.size()) throw ParameterError("allowed matrix must be m x n");
    for (std::size_t j = 0; j < sizes.size(); ++j) p[i].push_back(allowed[i][j] ? sizes[j] : big);
  }
  return SchedulingInstance::Unrelated(std::move(p), std::move(weights));
}

SchedulingInstance RandomWeightConditionInstance(std::mt19937_64& rng, int machines, int jobs) {
  std::vector<Rational> w(jobs);
  for (auto& wj : w) wj = FromInt(rng, 1, 4);
  std::vector<std::vector<Rational>> p(machines, std::vector<Rational>(jobs));
  for (int i = 0; i < machines; ++i) {
    const int c = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int j = 0; j < jobs; ++j) {
      const Rational rho = c * w[j] + FromInt(rng, 0, c - 1);
      p[i][j] = rho * w[j];
    }
  }
  return SchedulingInstance::Unrelated(std::move(p), std::move(w));
}

SchedulingInstance RandomFlowTimeInstance(std::mt19937_64& rng, Environment env, int machines, int jobs) {
  std::vector<Rational> sizes(jobs);
  for (auto& s : sizes) s = FromInt(rng, 1, 9) / FromInt(rng, 1, 3);
  std::vector<Rational> ones(jobs, Rational(1));
  switch (env) {
    case Environment::kP:
      return SchedulingInstance::Identical(machines, std::move(sizes));
    case Environment::kQ: {
      std::vector<Rational> speeds(machines);
      for (auto& s : speeds) s = FromInt(rng, 1, 3) / FromInt(rng, 1, 2);
      return SchedulingInstance::Related(std::move(sizes), std::move(speeds), std::move(ones));
    }
    case Environment::kR:
      break;
  }
  throw UnsupportedError("flow-time instances are generated for P and Q only");
}

}  // namespace scg
