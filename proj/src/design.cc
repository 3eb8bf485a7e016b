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

#include "duplicity/design.h"

#include <algorithm>
#include <cmath>

#include "duplicity/error.h"
#include "duplicity/policies.h"

namespace duplicity {
namespace {

// Grid values are rounded to this many decimals so 0.9 is not stored as
// 0.8999999999999999 after repeated stepping.
double RoundGrid(double v) { return std::round(v * 1e12) / 1e12; }

}  // namespace

ModulatorGrid ModulatorGrid::Uniform(std::size_t num_actions, double lo,
                                     double hi, double step, double gamma) {
  if (!(step > 0.0) || hi < lo) {
    throw Error(ErrorKind::kEmptyGrid, "grid range or step is invalid");
  }
  std::vector<double> values;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step +
                                                         1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) {
    values.push_back(RoundGrid(lo + static_cast<double>(i) * step));
  }
  ModulatorGrid grid;
  grid.gamma = gamma;
  grid.values.assign(num_actions - 1, values);
  return grid;
}

ModulatorGrid ModulatorGrid::Default(const BasicGame& game, double gamma) {
  const auto values = game.utility_user().values();
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = *hi - *lo;
  return Uniform(game.num_actions(), -range, range, 0.01, gamma);
}

ModulatorSearch DesignModulator(const BasicGame& game,
                                const std::vector<Distribution>& type_beliefs,
                                const ModulatorGrid& grid) {
  const std::size_t k = game.num_actions();
  if (grid.values.size() != k - 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "grid needs one candidate list per substantive action");
  }
  for (const auto& v : grid.values) {
    if (v.empty()) {
      throw Error(ErrorKind::kEmptyGrid, "a modulator grid axis is empty");
    }
  }

  // Odometer over the grid in lexicographic order of the sorted axes.
  std::vector<std::vector<double>> axes = grid.values;
  for (auto& axis : axes) {
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  }
  std::vector<std::size_t> digit(k - 1, 0);
  ModulatorSearch search{Modulator::Zero(k), 0.0, 0.0, {}};
  bool have_best = false;
  while (true) {
    std::vector<double> transfer(k, 0.0);
    for (std::size_t a = 1; a < k; ++a) transfer[a] = axes[a - 1][digit[a - 1]];
    const Modulator mod(transfer, grid.gamma);
    const Manipulation manip = OptimalManipulation(game, type_beliefs, mod);
    search.log.push_back({transfer, manip.value, manip.prior});
    if (!have_best || manip.value > search.value + 1e-12) {
      search.best = mod;
      search.value = manip.value;
      search.manipulated_prior = manip.prior;
      have_best = true;
    }
    std::size_t pos = k - 1;
    while (pos > 0) {
      if (++digit[pos - 1] < axes[pos - 1].size()) break;
      digit[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return search;
}

GmmDesign DesignGmm(const BasicGame& game,
                    const std::vector<Distribution>& type_beliefs,
                    const ModulatorGrid& grid) {
  ModulatorSearch search = DesignModulator(game, type_beliefs, grid);
  const Manipulation manip =
      OptimalManipulation(game, type_beliefs, search.best);
  BeliefProfile beliefs =
      BeliefProfile::Overt(BinaryBelief(manip.prior), type_beliefs);
  const ModulatedGame mg(game, search.best, type_beliefs);
  const std::size_t policy = BestResponsePolicy(mg, beliefs.user);
  Generator gen = Generator::ZeroInformation(
      game.num_states(), PolicyCount(game.num_types(), game.num_actions()),
      policy);
  Modulator best = search.best;
  return GmmDesign{std::move(best), std::move(beliefs), std::move(gen),
                   manip.value, std::move(search)};
}

EquivalenceReport VerifyEquivalence(
    const BasicGame& game, const std::vector<Distribution>& type_beliefs,
    const Modulator& mod) {
  const PwlFunction prior = PriorUtilityPwl(game, type_beliefs, mod);
  const PwlFunction closure = Concavify(prior);
  EquivalenceReport report;
  report.max_joint = closure.Max();
  report.max_manipulator_only =
      OptimalManipulation(game, type_beliefs, mod).value;
  report.gap = report.max_joint - report.max_manipulator_only;
  return report;
}

SolveReport CovertDesign(const BasicGame& game, const Distribution& truth,
                         const std::vector<Distribution>& reported,
                         const std::vector<Distribution>& type_beliefs,
                         const Modulator& mod) {
  BeliefProfile beliefs;
  beliefs.b = truth;
  beliefs.user = reported;
  beliefs.defender = type_beliefs;
  return OptimalGenerator(game, beliefs, mod);
}

ReportedBeliefSearch BestReportedBelief(
    const BasicGame& game, const Distribution& truth,
    const std::vector<Distribution>& type_beliefs, const Modulator& mod,
    std::size_t points) {
  if (game.num_states() != 2) {
    throw Error(ErrorKind::kUnsupportedDimension,
                "reported-belief grid search needs two states");
  }
  if (points < 2) throw Error(ErrorKind::kEmptyGrid, "need >= 2 grid points");
  ReportedBeliefSearch out;
  out.overt_value =
      OptimalGenerator(game, BeliefProfile::Overt(truth, type_beliefs), mod)
          .value;
  bool have = false;
  for (std::size_t i = 0; i < points; ++i) {
    const double p = static_cast<double>(i) / static_cast<double>(points - 1);
    const std::vector<Distribution> reported(game.num_types(),
                                             BinaryBelief(p));
    const double v =
        CovertDesign(game, truth, reported, type_beliefs, mod).value;
    if (!have || v > out.value + 1e-12) {
      out.value = v;
      out.reported = p;
      have = true;
    }
  }
  return out;
}

}  // namespace duplicity
