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

#ifndef DUPLICITY_GEOMETRY_H_
#define DUPLICITY_GEOMETRY_H_

// Belief-simplex geometry. For two states a belief is parameterized by
// p = probability of the first state; for three states beliefs are full
// probability vectors and cells are convex polygons in the simplex.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "duplicity/lp.h"
#include "duplicity/model.h"

namespace duplicity {

// (p, 1 - p)
Distribution BinaryBelief(double p);

struct Segment {
  double slope = 0.0;
  double intercept = 0.0;
  double value_left = 0.0;   // limit at the segment's left breakpoint
  double value_right = 0.0;  // limit at the segment's right breakpoint

  double At(double p) const { return intercept + slope * p; }
};

// Piecewise-linear function on [0, 1] that may jump at its breakpoints.
// At a breakpoint the function takes point_values[i]; the segment limits
// on either side can differ from it.
class PwlFunction {
 public:
  // breakpoints strictly increasing from 0 to 1; one segment per interval
  // and one point value per breakpoint. Throws Error(kInvalidArgument).
  PwlFunction(std::vector<double> breakpoints, std::vector<Segment> segments,
              std::vector<double> point_values);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<double>& point_values() const { return point_values_; }
  std::size_t num_pieces() const { return segments_.size(); }

  double Evaluate(double p) const;
  // Evaluates on many points at once; breakpoint hits use point values.
  std::vector<double> EvaluateMany(const std::vector<double>& points) const;

  double Max() const;
  bool IsContinuous(double tol = kTolerance) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<Segment> segments_;
  std::vector<double> point_values_;
};

// Overt prior utility p -> tilde v_D((p, 1-p)) for a two-state game.
// Throws Error(kUnsupportedDimension) unless N = 2.
PwlFunction PriorUtilityPwl(const BasicGame& game,
                            const std::vector<Distribution>& type_beliefs,
                            const Modulator& mod);

// Least concave majorant over the segment endpoints (point values and both
// one-sided limits).
PwlFunction Concavify(const PwlFunction& f);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

struct Cell {
  std::vector<std::size_t> actions;  // one per type (joint) or one action
  bool empty = true;
  double measure = 0.0;              // length (N = 2) or area (N = 3)
  Interval interval;                 // N = 2
  std::vector<Distribution> vertices;  // N = 3, counter-clockwise
};

struct BeliefPartition {
  std::size_t num_states = 0;
  // type_cells[type][action]: beliefs where the action is a best response.
  std::vector<std::vector<Cell>> type_cells;
  // One cell per security policy, in policy-index order.
  std::vector<Cell> joint_cells;

  std::size_t NonemptyJointCells() const;
};

// Exact best-response partition for N in {2, 3}; Error(kUnsupportedDimension)
// otherwise. Cells use weak inequalities, so neighbours share boundaries.
BeliefPartition ComputeBeliefPartition(const BasicGame& game,
                                       const Modulator& mod);

// Upper bound on enforceable policies; N in {2, 3}.
std::size_t ChiBound(std::size_t num_actions, std::size_t num_types,
                     std::size_t num_states);

struct Region {
  std::vector<Interval> intervals;                 // N = 2, merged
  std::vector<std::vector<Distribution>> polygons;  // N = 3
  bool empty() const { return intervals.empty() && polygons.empty(); }
  double measure = 0.0;
};

// Beliefs at which types l and h best-respond differently.
Region IdentifiableRegion(const BasicGame& game, const Modulator& mod,
                          std::size_t l, std::size_t h);

enum class Alignment { kCompletelyAligned, kCompletelyMisaligned, kNeither };

const char* AlignmentName(Alignment alignment);

struct AlignmentReport {
  double rho_s = 0.0;
  std::vector<double> rho_t;  // per state
  Alignment classification = Alignment::kNeither;
  double residual = 0.0;
  bool degenerate_fit = false;
};

// Least-squares fit vhat_U(x,l,a) = rho_s vhat_U(x,h,a) + rho_t(x).
AlignmentReport ClassifyAlignment(const BasicGame& game, const Modulator& mod,
                                  std::size_t l, std::size_t h);

// Same fit for the defender against one user type:
// vhat_D(x,t,a) = rho_s vhat_U(x,t,a) + rho_t(x).
AlignmentReport ClassifyDefenderAlignment(const BasicGame& game,
                                          const Modulator& mod,
                                          std::size_t type);

// Trust margin of a credible generator over the security-policy space;
// Error(kNotCredible) when it violates incentive compatibility.
double TrustMargin(const BasicGame& game, const BeliefProfile& beliefs,
                   const Modulator& mod, const Generator& gen);

// V_D - tilde v_D via the optimal generator (any N).
double MaxTrustMargin(const BasicGame& game, const BeliefProfile& beliefs,
                      const Modulator& mod);

enum class Manageability { kManageable, kUnmanageable };

Manageability ClassifyManageability(const BasicGame& game,
                                    const BeliefProfile& beliefs,
                                    const Modulator& mod);

struct Manipulation {
  double prior = 0.0;  // probability of the first state
  double value = 0.0;  // attained maximum of tilde v_D
  double supremum = 0.0;
  bool supremum_attained = true;
};

// Global maximizer of the overt prior utility (N = 2); ties go to the
// smallest p.
Manipulation OptimalManipulation(const BasicGame& game,
                                 const std::vector<Distribution>& type_beliefs,
                                 const Modulator& mod);

struct SampledPartition {
  std::vector<Distribution> points;
  std::vector<std::size_t> labels;           // policy index per point
  std::vector<std::size_t> distinct_labels;  // sorted
};

// Seeded uniform samples of the simplex labelled by the joint best-response
// profile.
SampledPartition SamplePartition(const BasicGame& game, const Modulator& mod,
                                 std::size_t samples, std::uint64_t seed);

}  // namespace duplicity

#endif  // DUPLICITY_GEOMETRY_H_
