// Copyright 2026 The Duplicity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>

#include "duplicity/error.h"
#include "duplicity/lp.h"
#include "duplicity/policies.h"

namespace duplicity {
namespace {

// Generator rows straight from the LP carry round-off; entries below this
// are zeroed before renormalizing.
constexpr double kCleanTolerance = 1e-12;

std::vector<double> CleanRow(std::vector<double> row) {
  double sum = 0.0;
  for (double& p : row) {
    if (p < kCleanTolerance) p = 0.0;
    sum += p;
  }
  if (sum <= 0.0) {
    std::fill(row.begin(), row.end(), 0.0);
    row.front() = 1.0;
    return row;
  }
  for (double& p : row) p /= sum;
  return row;
}

// Objective coefficient of sending policy s in state x, per unit of b(x).
double PolicyPayoff(const ModulatedGame& mg, const SecurityPolicy& policy,
                    std::size_t x) {
  double v = 0.0;
  for (std::size_t t = 0; t < mg.num_types(); ++t) {
    v += mg.type_beliefs()[x][t] *
         mg.utilities().defender(x, t, policy.actions[t]);
  }
  return v;
}

}  // namespace

CapacityBounds DesignCapacityBounds(
    const BasicGame& game, const std::vector<Distribution>& type_beliefs,
    const Modulator& mod) {
  const std::size_t n = game.num_states();
  const std::size_t m = game.num_types();
  const std::size_t k = game.num_actions();
  const UtilityTable& vd = game.utility_defender();
  const UtilityTable& vu = game.utility_user();

  CapacityBounds out;
  double drop_out_best = -std::numeric_limits<double>::infinity();
  out.rbar = -std::numeric_limits<double>::infinity();
  out.lower = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < n; ++x) {
    double drop_out = 0.0, best = 0.0, worst = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
      double hi = vd(x, t, 0), lo = vd(x, t, 0);
      for (std::size_t a = 1; a < k; ++a) {
        hi = std::max(hi, vd(x, t, a));
        lo = std::min(lo, vd(x, t, a));
      }
      const double w = type_beliefs.at(x).at(t);
      drop_out += w * vd(x, t, kDropOut);
      best += w * hi;
      worst += w * lo;
    }
    drop_out_best = std::max(drop_out_best, drop_out);
    out.rbar = std::max(out.rbar, best);
    out.lower = std::min(out.lower, worst);
  }
  // cbar(theta, a) = max_x v_U(x,theta,a) - v_U(x,theta,a_DO); a_DO gives 0.
  out.max_cbar = 0.0;
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t a = 1; a < k; ++a) {
      double cbar = -std::numeric_limits<double>::infinity();
      for (std::size_t x = 0; x < n; ++x) {
        cbar = std::max(cbar, vu(x, t, a) - vu(x, t, kDropOut));
      }
      out.max_cbar = std::max(out.max_cbar, cbar);
    }
  }
  out.upper = std::max(drop_out_best, out.rbar + mod.gamma() * out.max_cbar);
  return out;
}

SolveReport OptimalGenerator(const BasicGame& game,
                             const BeliefProfile& beliefs,
                             const Modulator& mod) {
  beliefs.Validate(game);
  const std::size_t n = game.num_states();
  const std::size_t m = game.num_types();
  const std::size_t k = game.num_actions();
  const std::size_t num_policies = PolicyCount(m, k);
  const ModulatedGame mg(game, mod, beliefs.defender);
  const std::vector<SecurityPolicy> policies = EnumeratePolicies(m, k);

  // Variable x * S + s is pi(s|x).
  const std::size_t num_vars = n * num_policies;
  LinearProgram lp;
  lp.objective.assign(num_vars, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t s = 0; s < num_policies; ++s) {
      lp.objective[x * num_policies + s] =
          beliefs.b[x] * PolicyPayoff(mg, policies[s], x);
    }
  }
  const UtilityTable& vu = mg.utilities().user;
  for (std::size_t s = 0; s < num_policies; ++s) {
    for (std::size_t l = 0; l < m; ++l) {
      const std::size_t prescribed = policies[s].actions[l];
      for (std::size_t h = 0; h < k; ++h) {
        if (h == prescribed) continue;
        std::vector<double> row(num_vars, 0.0);
        bool nonzero = false;
        for (std::size_t x = 0; x < n; ++x) {
          const double c =
              (vu(x, l, prescribed) - vu(x, l, h)) * beliefs.user[l][x];
          row[x * num_policies + s] = c;
          nonzero = nonzero || c != 0.0;
        }
        if (nonzero) lp.AddConstraint(std::move(row), Relation::kGreaterEqual, 0);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<double> row(num_vars, 0.0);
    std::fill_n(row.begin() + x * num_policies, num_policies, 1.0);
    lp.AddConstraint(std::move(row), Relation::kEqual, 1.0);
  }

  const LpSolution sol = SolveLp(lp);
  SolveReport report;
  report.status = sol.status;
  report.pivots = sol.pivots;
  report.bounds = DesignCapacityBounds(game, beliefs.defender, mod);
  if (sol.status != LpStatus::kOptimal) return report;

  std::vector<std::vector<double>> rows(n);
  for (std::size_t x = 0; x < n; ++x) {
    rows[x] = CleanRow(std::vector<double>(
        sol.values.begin() + x * num_policies,
        sol.values.begin() + (x + 1) * num_policies));
  }
  report.generator.emplace(std::move(rows));
  report.value = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t s = 0; s < num_policies; ++s) {
      report.value += lp.objective[x * num_policies + s] *
                      report.generator->prob(x, s);
    }
  }
  return report;
}

SolveReport JointBeliefLp(const BasicGame& game,
                          const std::vector<Distribution>& type_beliefs,
                          const Modulator& mod) {
  if (!mod.IsZero()) {
    throw Error(ErrorKind::kPreconditionViolated,
                "the joint belief program needs c(a) = 0 for every action");
  }
  const std::size_t n = game.num_states();
  const std::size_t m = game.num_types();
  const std::size_t k = game.num_actions();
  const std::size_t num_policies = PolicyCount(m, k);
  const ModulatedGame mg(game, mod, type_beliefs);
  const std::vector<SecurityPolicy> policies = EnumeratePolicies(m, k);

  // eta(s,x) at s * N + x, then eta_U(theta,s,x) at
  // S*N + (theta * S + s) * N + x.
  const std::size_t block = num_policies * n;
  const std::size_t num_vars = block * (1 + m);
  auto eta_index = [&](std::size_t s, std::size_t x) { return s * n + x; };
  auto eta_user_index = [&](std::size_t t, std::size_t s, std::size_t x) {
    return block + (t * num_policies + s) * n + x;
  };

  LinearProgram lp;
  lp.objective.assign(num_vars, 0.0);
  for (std::size_t s = 0; s < num_policies; ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      lp.objective[eta_index(s, x)] = PolicyPayoff(mg, policies[s], x);
    }
  }
  const UtilityTable& vu = mg.utilities().user;
  for (std::size_t s = 0; s < num_policies; ++s) {
    for (std::size_t l = 0; l < m; ++l) {
      const std::size_t prescribed = policies[s].actions[l];
      for (std::size_t h = 0; h < k; ++h) {
        if (h == prescribed) continue;
        std::vector<double> row(num_vars, 0.0);
        bool nonzero = false;
        for (std::size_t x = 0; x < n; ++x) {
          const double c = vu(x, l, prescribed) - vu(x, l, h);
          row[eta_user_index(l, s, x)] = c;
          nonzero = nonzero || c != 0.0;
        }
        if (nonzero) lp.AddConstraint(std::move(row), Relation::kGreaterEqual, 0);
      }
    }
  }
  {
    std::vector<double> row(num_vars, 0.0);
    std::fill_n(row.begin(), block, 1.0);
    lp.AddConstraint(std::move(row), Relation::kEqual, 1.0);
  }
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<double> row(num_vars, 0.0);
    std::fill_n(row.begin() + block * (1 + t), block, 1.0);
    lp.AddConstraint(std::move(row), Relation::kEqual, 1.0);
  }

  const LpSolution sol = SolveLp(lp);
  SolveReport report;
  report.status = sol.status;
  report.pivots = sol.pivots;
  report.bounds = DesignCapacityBounds(game, type_beliefs, mod);
  if (sol.status != LpStatus::kOptimal) return report;
  report.value = sol.objective;

  report.eta.assign(num_policies, std::vector<double>(n));
  report.eta_user.assign(
      m, std::vector<std::vector<double>>(num_policies, std::vector<double>(n)));
  BeliefProfile recovered;
  recovered.b.assign(n, 0.0);
  recovered.user.assign(m, Distribution(n, 0.0));
  recovered.defender = type_beliefs;
  for (std::size_t s = 0; s < num_policies; ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      report.eta[s][x] = sol.values[eta_index(s, x)];
      recovered.b[x] += report.eta[s][x];
      for (std::size_t t = 0; t < m; ++t) {
        report.eta_user[t][s][x] = sol.values[eta_user_index(t, s, x)];
        recovered.user[t][x] += report.eta_user[t][s][x];
      }
    }
  }

  double gap = 0.0;
  std::vector<std::vector<double>> rows(n, std::vector<double>(num_policies));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t s = 0; s < num_policies; ++s) {
      if (recovered.b[x] > kTolerance) {
        rows[x][s] = report.eta[s][x] / recovered.b[x];
      }
    }
    for (std::size_t t = 0; t < m; ++t) {
      if (recovered.b[x] <= kTolerance || recovered.user[t][x] <= kTolerance) {
        continue;
      }
      for (std::size_t s = 0; s < num_policies; ++s) {
        gap = std::max(gap, std::fabs(rows[x][s] - report.eta_user[t][s][x] /
                                                       recovered.user[t][x]));
      }
    }
    // States the relaxation gives no mass fall back to the user-side
    // conditional of the first type that has one.
    if (recovered.b[x] <= kTolerance) {
      for (std::size_t t = 0; t < m; ++t) {
        if (recovered.user[t][x] > kTolerance) {
          for (std::size_t s = 0; s < num_policies; ++s) {
            rows[x][s] = report.eta_user[t][s][x] / recovered.user[t][x];
          }
          break;
        }
      }
    }
    rows[x] = CleanRow(std::move(rows[x]));
  }
  report.consistency_gap = gap;
  report.generator.emplace(std::move(rows));
  report.recovered_beliefs = std::move(recovered);
  return report;
}

}  // namespace duplicity
