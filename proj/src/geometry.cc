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

#include "duplicity/geometry.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "duplicity/error.h"
#include "duplicity/kernels.h"
#include "duplicity/policies.h"

namespace duplicity {
namespace {

// Breakpoints closer than this are merged, and a query this close to a
// breakpoint takes the breakpoint's value.
constexpr double kBreakpointTolerance = 1e-12;

void RequireBinary(const BasicGame& game) {
  if (game.num_states() != 2) {
    throw Error(ErrorKind::kUnsupportedDimension,
                "this operation needs exactly two states, got " +
                    std::to_string(game.num_states()));
  }
}

// Index of the segment whose closed interval contains p.
std::size_t SegmentIndex(const std::vector<double>& breakpoints, double p) {
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), p);
  std::size_t i = it == breakpoints.begin()
                      ? 0
                      : static_cast<std::size_t>(it - breakpoints.begin()) - 1;
  return std::min(i, breakpoints.size() - 2);
}

// Points p in (0, 1) where one type's best response can change.
void AddTypeBreakpoints(const ModulatedGame& mg, std::size_t t,
                        std::vector<double>& out) {
  const UtilityTable& u = mg.utilities().user;
  const UtilityTable& d = mg.utilities().defender;
  const std::size_t k = mg.num_actions();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      // g(p) = g0 + p (g1 - g0) is the user's advantage of a over b.
      const double g1 = u(0, t, a) - u(0, t, b);
      const double g0 = u(1, t, a) - u(1, t, b);
      double crossing;
      if (std::fabs(g1 - g0) > kTolerance * 1e-3) {
        crossing = g0 / (g0 - g1);
      } else if (std::fabs(g0) <= kTolerance) {
        // The user is indifferent everywhere; the defender's preference
        // between the two can still flip.
        const double h1 = mg.type_beliefs()[0][t] * (d(0, t, a) - d(0, t, b));
        const double h0 = mg.type_beliefs()[1][t] * (d(1, t, a) - d(1, t, b));
        if (h1 == h0) continue;
        crossing = h0 / (h0 - h1);
      } else {
        continue;
      }
      if (!(crossing > 0.0 && crossing < 1.0)) continue;
      // Only crossings on the upper envelope change the best response.
      const Distribution belief = BinaryBelief(crossing);
      double best = mg.UserValue(belief, t, 0);
      for (std::size_t c = 1; c < k; ++c) {
        best = std::max(best, mg.UserValue(belief, t, c));
      }
      if (mg.UserValue(belief, t, a) >= best - kTolerance &&
          mg.UserValue(belief, t, b) >= best - kTolerance) {
        out.push_back(crossing);
      }
    }
  }
}

}  // namespace

Distribution BinaryBelief(double p) { return {p, 1.0 - p}; }

PwlFunction::PwlFunction(std::vector<double> breakpoints,
                         std::vector<Segment> segments,
                         std::vector<double> point_values)
    : breakpoints_(std::move(breakpoints)),
      segments_(std::move(segments)),
      point_values_(std::move(point_values)) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != 0.0 ||
      breakpoints_.back() != 1.0) {
    throw Error(ErrorKind::kInvalidArgument,
                "breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] > breakpoints_[i - 1])) {
      throw Error(ErrorKind::kInvalidArgument,
                  "breakpoints must be strictly increasing");
    }
  }
  if (segments_.size() + 1 != breakpoints_.size() ||
      point_values_.size() != breakpoints_.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "need one segment per interval and one value per breakpoint");
  }
}

double PwlFunction::Evaluate(double p) const {
  const std::size_t i = SegmentIndex(breakpoints_, p);
  if (std::fabs(p - breakpoints_[i]) <= kBreakpointTolerance) {
    return point_values_[i];
  }
  if (std::fabs(p - breakpoints_[i + 1]) <= kBreakpointTolerance) {
    return point_values_[i + 1];
  }
  return segments_[i].At(p);
}

std::vector<double> PwlFunction::EvaluateMany(
    const std::vector<double>& points) const {
  std::vector<double> out(points.size());
  std::size_t start = 0;
  while (start < points.size()) {
    // Runs of consecutive points on one segment go through the SIMD kernel.
    const std::size_t seg = SegmentIndex(breakpoints_, points[start]);
    std::size_t end = start + 1;
    while (end < points.size() &&
           SegmentIndex(breakpoints_, points[end]) == seg) {
      ++end;
    }
    kernels::AffineMap(
        segments_[seg].intercept, segments_[seg].slope,
        std::span<const double>(points).subspan(start, end - start),
        std::span<double>(out).subspan(start, end - start));
    start = end;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t seg = SegmentIndex(breakpoints_, points[i]);
    for (std::size_t b : {seg, seg + 1}) {
      if (std::fabs(points[i] - breakpoints_[b]) <= kBreakpointTolerance) {
        out[i] = point_values_[b];
      }
    }
  }
  return out;
}

double PwlFunction::Max() const {
  double best = point_values_.front();
  for (double v : point_values_) best = std::max(best, v);
  for (const Segment& s : segments_) {
    best = std::max({best, s.value_left, s.value_right});
  }
  return best;
}

bool PwlFunction::IsContinuous(double tol) const {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (std::fabs(segments_[i].value_left - point_values_[i]) > tol ||
        std::fabs(segments_[i].value_right - point_values_[i + 1]) > tol) {
      return false;
    }
  }
  return true;
}

PwlFunction PriorUtilityPwl(const BasicGame& game,
                            const std::vector<Distribution>& type_beliefs,
                            const Modulator& mod) {
  RequireBinary(game);
  const ModulatedGame mg(game, mod, type_beliefs);

  std::vector<double> candidates;
  for (std::size_t t = 0; t < game.num_types(); ++t) {
    AddTypeBreakpoints(mg, t, candidates);
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<double> breakpoints = {0.0};
  for (double c : candidates) {
    if (c - breakpoints.back() > kBreakpointTolerance &&
        1.0 - c > kBreakpointTolerance) {
      breakpoints.push_back(c);
    }
  }
  breakpoints.push_back(1.0);

  const Distribution at_zero = BinaryBelief(0.0);
  const Distribution at_one = BinaryBelief(1.0);
  std::vector<Segment> segments;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const Distribution mid =
        BinaryBelief(0.5 * (breakpoints[i] + breakpoints[i + 1]));
    Segment seg;
    double at_first_state = 0.0;
    for (std::size_t t = 0; t < game.num_types(); ++t) {
      const std::size_t a = mg.BestResponse(mid, t);
      seg.intercept += mg.DefenderValue(at_zero, t, a);
      at_first_state += mg.DefenderValue(at_one, t, a);
    }
    seg.slope = at_first_state - seg.intercept;
    seg.value_left = seg.At(breakpoints[i]);
    seg.value_right = seg.At(breakpoints[i + 1]);
    segments.push_back(seg);
  }
  std::vector<double> point_values;
  for (double p : breakpoints) {
    point_values.push_back(mg.DefenderUtilityAt(BinaryBelief(p)));
  }
  return PwlFunction(std::move(breakpoints), std::move(segments),
                     std::move(point_values));
}

PwlFunction Concavify(const PwlFunction& f) {
  std::vector<std::pair<double, double>> points;
  const auto& bp = f.breakpoints();
  for (std::size_t i = 0; i < bp.size(); ++i) {
    points.emplace_back(bp[i], f.point_values()[i]);
  }
  for (std::size_t i = 0; i < f.segments().size(); ++i) {
    points.emplace_back(bp[i], f.segments()[i].value_left);
    points.emplace_back(bp[i + 1], f.segments()[i].value_right);
  }
  std::sort(points.begin(), points.end());
  // Highest value per abscissa.
  std::vector<std::pair<double, double>> tops;
  for (const auto& pt : points) {
    if (!tops.empty() && tops.back().first == pt.first) {
      tops.back().second = std::max(tops.back().second, pt.second);
    } else {
      tops.push_back(pt);
    }
  }
  // Upper hull, left to right: keep only clockwise turns.
  std::vector<std::pair<double, double>> hull;
  for (const auto& pt : tops) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const double cross = (b.first - a.first) * (pt.second - a.second) -
                           (b.second - a.second) * (pt.first - a.first);
      if (cross < 0.0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }

  std::vector<double> breakpoints;
  std::vector<double> values;
  for (const auto& [x, y] : hull) {
    breakpoints.push_back(x);
    values.push_back(y);
  }
  std::vector<Segment> segments;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    Segment seg;
    seg.slope = (values[i + 1] - values[i]) / (breakpoints[i + 1] -
                                               breakpoints[i]);
    seg.intercept = values[i] - seg.slope * breakpoints[i];
    seg.value_left = values[i];
    seg.value_right = values[i + 1];
    segments.push_back(seg);
  }
  return PwlFunction(std::move(breakpoints), std::move(segments),
                     std::move(values));
}

const char* AlignmentName(Alignment alignment) {
  switch (alignment) {
    case Alignment::kCompletelyAligned:
      return "completely-aligned";
    case Alignment::kCompletelyMisaligned:
      return "completely-misaligned";
    case Alignment::kNeither:
      return "neither";
  }
  return "unknown";
}

namespace {

// Fits target(x,a) = rho_s * source(x,a) + rho_t(x) by least squares.
AlignmentReport FitAlignment(std::size_t n, std::size_t k,
                             const auto& target, const auto& source) {
  AlignmentReport report;
  report.rho_t.assign(n, 0.0);
  std::vector<double> target_mean(n, 0.0), source_mean(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < k; ++a) {
      target_mean[x] += target(x, a) / static_cast<double>(k);
      source_mean[x] += source(x, a) / static_cast<double>(k);
    }
  }
  double cross = 0.0, var = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < k; ++a) {
      const double dz = source(x, a) - source_mean[x];
      cross += (target(x, a) - target_mean[x]) * dz;
      var += dz * dz;
    }
  }
  report.degenerate_fit = var <= 1e-18;
  report.rho_s = report.degenerate_fit ? 0.0 : cross / var;
  for (std::size_t x = 0; x < n; ++x) {
    report.rho_t[x] = target_mean[x] - report.rho_s * source_mean[x];
    for (std::size_t a = 0; a < k; ++a) {
      report.residual = std::max(
          report.residual, std::fabs(target(x, a) - report.rho_s * source(x, a) -
                                     report.rho_t[x]));
    }
  }
  if (!report.degenerate_fit && report.residual <= kTolerance) {
    report.classification = report.rho_s >= 0.0
                                ? Alignment::kCompletelyAligned
                                : Alignment::kCompletelyMisaligned;
  }
  return report;
}

}  // namespace

AlignmentReport ClassifyAlignment(const BasicGame& game, const Modulator& mod,
                                  std::size_t l, std::size_t h) {
  const ModulatedUtilities u = Modulate(game, mod);
  AlignmentReport report = FitAlignment(
      game.num_states(), game.num_actions(),
      [&](std::size_t x, std::size_t a) { return u.user(x, l, a); },
      [&](std::size_t x, std::size_t a) { return u.user(x, h, a); });
  if (report.degenerate_fit && game.num_states() <= 3) {
    // Type h is indifferent in every state; fall back to asking whether
    // the two types can ever be told apart.
    report.classification = IdentifiableRegion(game, mod, l, h).empty()
                                ? Alignment::kCompletelyAligned
                                : Alignment::kNeither;
  }
  return report;
}

AlignmentReport ClassifyDefenderAlignment(const BasicGame& game,
                                          const Modulator& mod,
                                          std::size_t type) {
  const ModulatedUtilities u = Modulate(game, mod);
  return FitAlignment(
      game.num_states(), game.num_actions(),
      [&](std::size_t x, std::size_t a) { return u.defender(x, type, a); },
      [&](std::size_t x, std::size_t a) { return u.user(x, type, a); });
}

double TrustMargin(const BasicGame& game, const BeliefProfile& beliefs,
                   const Modulator& mod, const Generator& gen) {
  const auto violations =
      CheckIncentiveCompatibility(gen, game, beliefs, mod);
  if (!violations.empty()) {
    throw Error(ErrorKind::kNotCredible,
                "generator violates incentive compatibility at policy " +
                    std::to_string(violations.front().policy));
  }
  return ExpectedPosteriorUtility(game, beliefs, mod, gen) -
         PriorUtility(game, beliefs, mod);
}

double MaxTrustMargin(const BasicGame& game, const BeliefProfile& beliefs,
                      const Modulator& mod) {
  const SolveReport report = OptimalGenerator(game, beliefs, mod);
  return report.value - PriorUtility(game, beliefs, mod);
}

Manageability ClassifyManageability(const BasicGame& game,
                                    const BeliefProfile& beliefs,
                                    const Modulator& mod) {
  return MaxTrustMargin(game, beliefs, mod) > kTolerance
             ? Manageability::kManageable
             : Manageability::kUnmanageable;
}

Manipulation OptimalManipulation(const BasicGame& game,
                                 const std::vector<Distribution>& type_beliefs,
                                 const Modulator& mod) {
  const PwlFunction f = PriorUtilityPwl(game, type_beliefs, mod);
  Manipulation best;
  best.prior = 0.0;
  best.value = f.point_values().front();
  for (std::size_t i = 1; i < f.breakpoints().size(); ++i) {
    if (f.point_values()[i] > best.value + kBreakpointTolerance) {
      best.prior = f.breakpoints()[i];
      best.value = f.point_values()[i];
    }
  }
  best.supremum = f.Max();
  best.supremum_attained = best.supremum <= best.value + kTolerance;
  return best;
}

}  // namespace duplicity
