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

#ifndef DUPLICITY_DESIGN_H_
#define DUPLICITY_DESIGN_H_

// End-to-end mechanism design: modulator search, trust manipulation, and
// the generator under overt or covert beliefs.

#include <cstddef>
#include <vector>

#include "duplicity/geometry.h"
#include "duplicity/lp.h"
#include "duplicity/model.h"

namespace duplicity {

// Candidate transfers for every non-drop-out action; values[a - 1] lists
// the candidates for action a. The drop-out transfer is always zero.
struct ModulatorGrid {
  double gamma = 0.0;
  std::vector<std::vector<double>> values;

  // Same evenly spaced candidates [lo, lo + step, ..., hi] for every
  // substantive action.
  static ModulatorGrid Uniform(std::size_t num_actions, double lo, double hi,
                               double step, double gamma = 0.0);
  // Grid spanning +/- the range of the user utilities with step 0.01.
  static ModulatorGrid Default(const BasicGame& game, double gamma = 0.0);
};

struct ModulatorCandidate {
  std::vector<double> transfer;
  double value = 0.0;
  double manipulated_prior = 0.0;
};

struct ModulatorSearch {
  Modulator best;
  double value = 0.0;
  double manipulated_prior = 0.0;
  std::vector<ModulatorCandidate> log;  // every candidate, search order
};

// Exhaustive search over the grid's Cartesian product; each candidate is
// scored by the maximum of its overt prior utility. Ties keep the
// lexicographically smallest transfer vector. Two states only.
ModulatorSearch DesignModulator(const BasicGame& game,
                                const std::vector<Distribution>& type_beliefs,
                                const ModulatorGrid& grid);

struct GmmDesign {
  Modulator modulator;
  BeliefProfile manipulated_beliefs;
  Generator generator;
  double value = 0.0;
  ModulatorSearch stage_log;
};

// Modulator search, then overt manipulation to the best prior under the
// chosen modulator. The generator is zero-information, so the value is the
// prior utility at the manipulated prior.
GmmDesign DesignGmm(const BasicGame& game,
                    const std::vector<Distribution>& type_beliefs,
                    const ModulatorGrid& grid);

struct EquivalenceReport {
  double max_joint = 0.0;              // max_p V_D(p)
  double max_manipulator_only = 0.0;   // max_p tilde v_D(p)
  double gap = 0.0;
};

EquivalenceReport VerifyEquivalence(
    const BasicGame& game, const std::vector<Distribution>& type_beliefs,
    const Modulator& mod);

// Optimal generator when the user's belief differs from the true state
// distribution.
SolveReport CovertDesign(const BasicGame& game, const Distribution& truth,
                         const std::vector<Distribution>& reported,
                         const std::vector<Distribution>& type_beliefs,
                         const Modulator& mod);

struct ReportedBeliefSearch {
  double reported = 0.0;  // probability of the first state told to users
  double value = 0.0;
  double overt_value = 0.0;  // optimal generator value when reporting truth
};

// Grid search over a common reported belief (N = 2, `points` grid points)
// maximizing the covert optimal-generator value. Ties keep the smallest
// reported probability.
ReportedBeliefSearch BestReportedBelief(
    const BasicGame& game, const Distribution& truth,
    const std::vector<Distribution>& type_beliefs, const Modulator& mod,
    std::size_t points = 101);

}  // namespace duplicity

#endif  // DUPLICITY_DESIGN_H_
