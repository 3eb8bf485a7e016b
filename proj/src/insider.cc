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

#include "duplicity/insider.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "duplicity/error.h"
#include "duplicity/policies.h"

namespace duplicity::insider {
namespace {

double Clamp01(double v) { return std::max(std::min(v, 1.0), 0.0); }

double GridPoint(std::size_t i, std::size_t count) {
  return count < 2 ? 0.0
                   : static_cast<double>(i) / static_cast<double>(count - 1);
}

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::kInvalidParams, what);
}

InsiderParams WithBeliefs(InsiderParams params, double p_true,
                          double p_reported) {
  params.p_honeypot_true = p_true;
  params.p_honeypot_reported = p_reported;
  return params;
}

InsiderParams WithSelfishShare(InsiderParams params, double q) {
  params.q_selfish = q;
  params.q_adversarial = 1.0 - q;
  return params;
}

struct PriorAndOptimal {
  double prior = 0.0;
  double optimal = 0.0;
};

PriorAndOptimal Solve(const InsiderParams& params) {
  const InsiderInstance inst = InsiderGame(params);
  return {PriorUtility(inst.game, inst.beliefs, inst.modulator),
          OptimalGenerator(inst.game, inst.beliefs, inst.modulator).value};
}

GainAverages Average(const std::vector<PriorAndOptimal>& points) {
  GainAverages out;
  out.points = points.size();
  double sum_prior = 0.0, sum_optimal = 0.0, sum_ratio = 0.0;
  std::size_t ratio_count = 0;
  for (const auto& p : points) {
    sum_prior += p.prior;
    sum_optimal += p.optimal;
    if (p.prior > kTolerance) {
      sum_ratio += (p.optimal - p.prior) / p.prior;
      ++ratio_count;
    } else {
      ++out.excluded_points;
    }
  }
  out.ratio_of_means = sum_optimal / sum_prior - 1.0;
  out.mean_of_ratios =
      ratio_count > 0 ? sum_ratio / static_cast<double>(ratio_count) : 0.0;
  return out;
}

}  // namespace

void InsiderParams::Validate() const {
  Require(std::isfinite(r_user) && r_user > 0.0, "r_U must be positive");
  Require(std::isfinite(r_defender) && r_defender > 0.0,
          "r_D must be positive");
  Require(phi_selfish_user < 0.0, "phi_U^g must be negative");
  Require(phi_selfish_defender < 0.0, "phi_D^g must be negative");
  Require(phi_honeypot_user < 0.0, "phi_U^H must be negative");
  Require(phi_honeypot_defender > 0.0, "phi_D^H must be positive");
  Require(phi_normal_user > 0.0, "phi_U^N must be positive");
  Require(phi_normal_defender < 0.0, "phi_D^N must be negative");
  Require(std::isfinite(phi0), "phi0 must be finite");
  Require(q_selfish >= 0.0 && q_adversarial >= 0.0 &&
              std::fabs(q_selfish + q_adversarial - 1.0) <= 1e-12,
          "q^g + q^b must equal 1");
  Require(p_honeypot_true >= 0.0 && p_honeypot_true <= 1.0,
          "p_D^{0,H} must lie in [0, 1]");
  Require(p_honeypot_reported >= 0.0 && p_honeypot_reported <= 1.0,
          "p_U^{0,H} must lie in [0, 1]");
}

InsiderInstance InsiderGame(const InsiderParams& params) {
  params.Validate();
  UtilityTable vd(2, 2, 2, 0.0);
  UtilityTable vu(2, 2, 2, 0.0);
  const double rd = params.r_defender;
  const double ru = params.r_user;
  vd(kHoneypot, kSelfish, kAccess) = rd * params.phi_selfish_defender;
  vd(kNormal, kSelfish, kAccess) = rd;
  vd(kHoneypot, kAdversarial, kAccess) = rd * params.phi_honeypot_defender;
  vd(kNormal, kAdversarial, kAccess) = rd * params.phi_normal_defender;
  vu(kHoneypot, kSelfish, kAccess) = ru * params.phi_selfish_user;
  vu(kNormal, kSelfish, kAccess) = ru;
  vu(kHoneypot, kAdversarial, kAccess) = ru * params.phi_honeypot_user;
  vu(kNormal, kAdversarial, kAccess) = ru * params.phi_normal_user;

  BasicGame game({"honeypot", "normal"}, {"selfish", "adversarial"},
                 {"DO", "AC"}, std::move(vd), std::move(vu));
  const Distribution types = {params.q_selfish, params.q_adversarial};
  BeliefProfile beliefs = BeliefProfile::Covert(
      {params.p_honeypot_true, 1.0 - params.p_honeypot_true},
      {params.p_honeypot_reported, 1.0 - params.p_honeypot_reported},
      StateIndependentTypes(2, types));
  Modulator mod({0.0, params.r_user * params.phi0}, 0.0);
  return {std::move(game), std::move(beliefs), std::move(mod)};
}

Thresholds DecisionThresholds(const InsiderParams& params) {
  return DecisionThresholds(params, params.phi0);
}

Thresholds DecisionThresholds(const InsiderParams& params, double phi0) {
  return {Clamp01((1.0 - phi0) / (1.0 - params.phi_selfish_user)),
          Clamp01((params.phi_normal_user - phi0) /
                  (params.phi_normal_user - params.phi_honeypot_user))};
}

double MotiveThreshold(const InsiderParams& params) {
  const double numerator =
      params.phi_normal_defender - params.phi_honeypot_defender;
  const double denominator = params.phi_selfish_defender - 1.0 + numerator;
  if (denominator == 0.0) {
    throw Error(ErrorKind::kDegenerateDenominator,
                "motive threshold denominator is zero");
  }
  return numerator / denominator;
}

double DeterrenceThreshold(const InsiderParams& params) {
  const Thresholds t = DecisionThresholds(params, 0.0);
  return std::min(t.adversarial, t.selfish);
}

std::string_view FigureName(Figure figure) {
  switch (figure) {
    case Figure::kFig5a: return "fig5a";
    case Figure::kFig5b: return "fig5b";
    case Figure::kFig6: return "fig6";
    case Figure::kFig7a: return "fig7a";
    case Figure::kFig7b: return "fig7b";
    case Figure::kFig8a: return "fig8a";
    case Figure::kFig8b: return "fig8b";
  }
  return "unknown";
}

Figure ParseFigure(std::string_view name) {
  for (Figure f : {Figure::kFig5a, Figure::kFig5b, Figure::kFig6,
                   Figure::kFig7a, Figure::kFig7b, Figure::kFig8a,
                   Figure::kFig8b}) {
    if (FigureName(f) == name) return f;
  }
  throw Error(ErrorKind::kUnknownFigure,
              "unknown figure '" + std::string(name) + "'");
}

CovertPoint EvaluateCovert(const InsiderParams& params, double p_true,
                           double p_reported) {
  const PriorAndOptimal r = Solve(WithBeliefs(params, p_true, p_reported));
  return {r.prior, r.optimal};
}

Table FigureData(Figure figure, const InsiderParams& params,
                 const FigureConfig& config) {
  params.Validate();
  Table table;
  const std::size_t n2 = config.surface_points;
  switch (figure) {
    case Figure::kFig5a:
    case Figure::kFig5b: {
      const bool with_generator = figure == Figure::kFig5b;
      table.columns = with_generator
                          ? std::vector<std::string>{"q_g", "p_D", "v_tilde",
                                                     "V_D", "margin"}
                          : std::vector<std::string>{"q_g", "p_D", "v_tilde"};
      for (std::size_t i = 0; i < n2; ++i) {
        const double q = GridPoint(i, n2);
        for (std::size_t j = 0; j < n2; ++j) {
          const double p = GridPoint(j, n2);
          const InsiderParams point =
              WithBeliefs(WithSelfishShare(params, q), p, p);
          if (!with_generator) {
            const InsiderInstance inst = InsiderGame(point);
            table.AddRow(
                {q, p, PriorUtility(inst.game, inst.beliefs, inst.modulator)});
          } else {
            const PriorAndOptimal r = Solve(point);
            table.AddRow({q, p, r.prior, r.optimal, r.optimal - r.prior});
          }
        }
      }
      break;
    }
    case Figure::kFig6: {
      table.columns = {"phi0", "t_g", "t_b", "diff"};
      for (std::size_t i = 0; i < config.curve_points; ++i) {
        const double phi0 =
            config.phi0_min +
            (config.phi0_max - config.phi0_min) * GridPoint(i, config.curve_points);
        const Thresholds t = DecisionThresholds(params, phi0);
        table.AddRow({phi0, t.selfish, t.adversarial, t.selfish - t.adversarial});
      }
      break;
    }
    case Figure::kFig7a:
    case Figure::kFig7b: {
      table.columns = {"phi0",        "soc",        "selfish", "adversarial",
                       "selfish_net", "adversarial_net"};
      for (std::size_t i = 0; i < config.curve_points; ++i) {
        InsiderParams point = WithBeliefs(params, config.fig7_honeypot,
                                          config.fig7_honeypot);
        point.phi0 =
            config.phi0_min +
            (config.phi0_max - config.phi0_min) * GridPoint(i, config.curve_points);
        const InsiderInstance inst = InsiderGame(point);
        std::optional<Generator> gen;
        if (figure == Figure::kFig7b) {
          gen = OptimalGenerator(inst.game, inst.beliefs, inst.modulator)
                    .generator;
        } else {
          const ModulatedGame mg(inst.game, inst.modulator,
                                 inst.beliefs.defender);
          gen = Generator::ZeroInformation(
              2, PolicyCount(2, 2), BestResponsePolicy(mg, inst.beliefs.user));
        }
        const GeneratorEvaluation eval =
            EvaluateGenerator(inst.game, inst.beliefs, inst.modulator, *gen);
        const double selfish_net = eval.user_values[kSelfish];
        const double adversarial_net = eval.user_values[kAdversarial];
        // Per-capita utilities: the evaluation weights each type by b_D.
        table.AddRow({point.phi0, eval.defender_value,
                      selfish_net + eval.user_transfers[kSelfish],
                      adversarial_net + eval.user_transfers[kAdversarial],
                      selfish_net, adversarial_net});
      }
      break;
    }
    case Figure::kFig8a:
    case Figure::kFig8b: {
      const bool with_generator = figure == Figure::kFig8b;
      table.columns = {"p_D", "p_U", with_generator ? "V_D" : "v_tilde"};
      for (std::size_t i = 0; i < n2; ++i) {
        const double p_true = GridPoint(i, n2);
        for (std::size_t j = 0; j < n2; ++j) {
          const double p_reported = GridPoint(j, n2);
          const InsiderInstance inst =
              InsiderGame(WithBeliefs(params, p_true, p_reported));
          const double v =
              with_generator
                  ? OptimalGenerator(inst.game, inst.beliefs, inst.modulator)
                        .value
                  : PriorUtility(inst.game, inst.beliefs, inst.modulator);
          table.AddRow({p_true, p_reported, v});
        }
      }
      break;
    }
  }
  return table;
}

HeadlineStats ComputeHeadlineStats(const InsiderParams& params,
                                   const HeadlineConfig& config) {
  params.Validate();
  HeadlineStats stats;

  const InsiderParams selfish = WithSelfishShare(params, 1.0);
  const auto steps =
      static_cast<std::size_t>(std::llround(1.0 / config.ratio_step));
  for (std::size_t i = 0; i <= steps; ++i) {
    const double p = static_cast<double>(i) * config.ratio_step;
    const PriorAndOptimal r = Solve(WithBeliefs(selfish, p, p));
    if (r.prior <= kTolerance) continue;
    const double ratio = r.optimal / r.prior;
    if (ratio > stats.near_threshold_ratio) {
      stats.near_threshold_ratio = ratio;
      stats.near_threshold_prior = p;
    }
  }

  const std::size_t n2 = config.surface_points;
  std::vector<PriorAndOptimal> fig5, fig8;
  for (std::size_t i = 0; i < n2; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      const double a = GridPoint(i, n2);
      const double b = GridPoint(j, n2);
      fig5.push_back(Solve(WithBeliefs(WithSelfishShare(params, a), b, b)));
      fig8.push_back(Solve(WithBeliefs(params, a, b)));
    }
  }
  stats.fig5 = Average(fig5);
  stats.fig8 = Average(fig8);
  return stats;
}

}  // namespace duplicity::insider
