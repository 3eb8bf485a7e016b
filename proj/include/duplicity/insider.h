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

#ifndef DUPLICITY_INSIDER_H_
#define DUPLICITY_INSIDER_H_

// Honeypot configuration against selfish and adversarial insiders: a
// two-state (honeypot, normal server), two-type, two-action (drop out,
// access) game with closed-form decision thresholds, plus the table
// generators behind the case-study figures.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "duplicity/lp.h"
#include "duplicity/model.h"
#include "duplicity/table.h"

namespace duplicity::insider {

inline constexpr std::size_t kHoneypot = 0;
inline constexpr std::size_t kNormal = 1;
inline constexpr std::size_t kSelfish = 0;
inline constexpr std::size_t kAdversarial = 1;
inline constexpr std::size_t kAccess = 1;

struct InsiderParams {
  double r_user = 1.0;
  double r_defender = 1.0;
  double phi_selfish_user = -0.3;      // < 0
  double phi_selfish_defender = -0.3;  // < 0
  double phi_honeypot_user = -1.0;     // < 0
  double phi_honeypot_defender = 1.0;  // > 0
  double phi_normal_user = 0.9;        // > 0
  double phi_normal_defender = -0.9;   // < 0
  double phi0 = 0.0;                   // authentication cost ratio
  double q_selfish = 0.32;
  double q_adversarial = 0.68;
  double p_honeypot_true = 0.5;      // p_D^{0,H}
  double p_honeypot_reported = 0.5;  // p_U^{0,H}

  static InsiderParams Benchmark() { return {}; }

  // Error(kInvalidParams) naming the first violated constraint.
  void Validate() const;
};

struct InsiderInstance {
  BasicGame game;
  BeliefProfile beliefs;
  Modulator modulator;
};

InsiderInstance InsiderGame(const InsiderParams& params);

struct Thresholds {
  double selfish = 0.0;      // t^g(phi0)
  double adversarial = 0.0;  // t^b(phi0)
};

// Each type accesses iff its posterior honeypot probability is below its
// threshold.
Thresholds DecisionThresholds(const InsiderParams& params);
Thresholds DecisionThresholds(const InsiderParams& params, double phi0);

// Selfish share below which the population is destructive on average.
double MotiveThreshold(const InsiderParams& params);
// min(t^b(0), t^g(0)).
double DeterrenceThreshold(const InsiderParams& params);

enum class Figure { kFig5a, kFig5b, kFig6, kFig7a, kFig7b, kFig8a, kFig8b };

std::string_view FigureName(Figure figure);
// Error(kUnknownFigure) for anything but fig5a..fig8b.
Figure ParseFigure(std::string_view name);

struct FigureConfig {
  std::size_t surface_points = 101;  // per axis
  std::size_t curve_points = 201;
  double phi0_min = -1.0;
  double phi0_max = 1.0;
  // Honeypot share used for the utilities-versus-cost curves.
  double fig7_honeypot = 0.2;
};

// Column layouts:
//   fig5a  q_g,p_D,v_tilde
//   fig5b  q_g,p_D,v_tilde,V_D,margin
//   fig6   phi0,t_g,t_b,diff
//   fig7a  phi0,soc,selfish,adversarial,selfish_net,adversarial_net
//   fig7b  same as fig7a, under the optimal generator
//   fig8a  p_D,p_U,v_tilde
//   fig8b  p_D,p_U,V_D
// "selfish"/"adversarial" are outcome utilities before the authentication
// cost; the _net columns subtract it.
Table FigureData(Figure figure, const InsiderParams& params,
                 const FigureConfig& config = {});

struct GainAverages {
  double ratio_of_means = 0.0;    // mean(V_D) / mean(tilde v_D) - 1
  double mean_of_ratios = 0.0;    // mean of (V_D - v)/v over v > 0
  std::size_t excluded_points = 0;  // points with tilde v_D <= 0
  std::size_t points = 0;
};

struct HeadlineStats {
  double near_threshold_ratio = 0.0;  // max V_D / tilde v_D, all selfish
  double near_threshold_prior = 0.0;  // where it is attained
  GainAverages fig5;
  GainAverages fig8;
};

struct HeadlineConfig {
  double ratio_step = 1e-3;
  std::size_t surface_points = 101;
};

HeadlineStats ComputeHeadlineStats(const InsiderParams& params,
                                   const HeadlineConfig& config = {});

// tilde v_D and V_D for one (true, reported) honeypot share.
struct CovertPoint {
  double prior_utility = 0.0;
  double optimal_value = 0.0;
};
CovertPoint EvaluateCovert(const InsiderParams& params, double p_true,
                           double p_reported);

}  // namespace duplicity::insider

#endif  // DUPLICITY_INSIDER_H_
