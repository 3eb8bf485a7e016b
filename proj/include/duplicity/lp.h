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

#ifndef DUPLICITY_LP_H_
#define DUPLICITY_LP_H_

// Dense simplex solver and the generator-design programs built on it.

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "duplicity/model.h"

namespace duplicity {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<double> coefficients;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

// maximize objective . x  subject to the constraints and
// lower[i] <= x[i] <= upper[i]. Empty bound vectors mean [0, +inf).
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t num_variables() const { return objective.size(); }

  void AddConstraint(std::vector<double> coefficients, Relation relation,
                     double rhs) {
    constraints.push_back({std::move(coefficients), relation, rhs});
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;
  double objective = 0.0;
  std::size_t pivots = 0;
};

struct SimplexOptions {
  double feasibility_tolerance = 1e-9;
  double pivot_tolerance = 1e-11;
  // Consecutive degenerate pivots tolerated under the largest-coefficient
  // rule before switching to Bland's rule for the rest of the solve.
  std::size_t degenerate_pivot_limit = 50;
  std::size_t max_pivots = 100000;
};

// Two-phase dense tableau simplex. The result is a basic optimal solution
// and is fully deterministic for a given input. Throws
// Error(kNumericalFailure) if the returned point violates a constraint by
// more than 1e-6, and Error(kInvalidArgument) for malformed programs.
LpSolution SolveLp(const LinearProgram& lp, const SimplexOptions& options = {});

// Feasible-set bounds on the COP value.
struct CapacityBounds {
  double lower = 0.0;  // min_x E_theta min_a v_D
  double upper = 0.0;  // max{max_x E_theta v_D(.,DO), rbar + gamma max cbar}
  double rbar = 0.0;   // max_x E_theta max_a v_D
  double max_cbar = 0.0;
};

CapacityBounds DesignCapacityBounds(
    const BasicGame& game, const std::vector<Distribution>& type_beliefs,
    const Modulator& mod);

struct SolveReport {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  std::optional<Generator> generator;
  std::optional<BeliefProfile> recovered_beliefs;
  std::optional<double> consistency_gap;
  CapacityBounds bounds;
  // eta[s][x] and eta_user[type][s][x] in joint-belief mode.
  std::vector<std::vector<double>> eta;
  std::vector<std::vector<std::vector<double>>> eta_user;
  std::size_t pivots = 0;

  bool WithinBounds(double tol = 1e-6) const {
    return value >= bounds.lower - tol && value <= bounds.upper + tol;
  }
};

// Optimal credible generator for fixed beliefs and modulator: maximizes
//   sum_x b(x) sum_s pi(s|x) sum_theta b_D(theta|x) vhat_D(x,theta,a^theta(s))
// over row-stochastic pi subject to incentive compatibility under b_U.
// Signals are the security policies of EnumeratePolicies.
SolveReport OptimalGenerator(const BasicGame& game,
                             const BeliefProfile& beliefs,
                             const Modulator& mod);

// Joint belief relaxation over eta(s,x) = b(x) pi(s|x) and
// eta_U(theta,s,x) = b_U(x|theta) pi(s|x), each a distribution. The shared
// generator is not enforced; consistency_gap reports by how much the
// recovered conditionals disagree. Requires a zero transfer
// (Error(kPreconditionViolated) otherwise).
SolveReport JointBeliefLp(const BasicGame& game,
                          const std::vector<Distribution>& type_beliefs,
                          const Modulator& mod);

}  // namespace duplicity

#endif  // DUPLICITY_LP_H_
