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
#include <array>
#include <cmath>
#include <set>

#include "duplicity/error.h"
#include "duplicity/geometry.h"
#include "duplicity/kernels.h"
#include "duplicity/policies.h"

namespace duplicity {
namespace {

constexpr double kMeasureTolerance = 1e-12;

using Point2 = std::array<double, 2>;  // (p1, p2); p3 = 1 - p1 - p2

// Half-plane {p : coef . p + constant >= 0}, in the first one or two
// belief coordinates.
struct HalfSpace {
  double coef[2] = {0.0, 0.0};
  double constant = 0.0;

  double Eval(const Point2& p) const {
    return coef[0] * p[0] + coef[1] * p[1] + constant;
  }
};

void RequireExactDimension(std::size_t n) {
  if (n != 2 && n != 3) {
    throw Error(ErrorKind::kUnsupportedDimension,
                "exact belief geometry supports 2 or 3 states, got " +
                    std::to_string(n));
  }
}

// Constraints making action a at least as good as every other action for
// type t: sum_x p(x) [u(x,t,a) - u(x,t,b)] >= 0 with the last coordinate
// eliminated.
std::vector<HalfSpace> ActionConstraints(const UtilityTable& u,
                                         std::size_t t, std::size_t a) {
  const std::size_t n = u.num_states();
  std::vector<HalfSpace> out;
  for (std::size_t b = 0; b < u.num_actions(); ++b) {
    if (b == a) continue;
    const double last = u(n - 1, t, a) - u(n - 1, t, b);
    HalfSpace h;
    for (std::size_t x = 0; x + 1 < n; ++x) {
      h.coef[x] = (u(x, t, a) - u(x, t, b)) - last;
    }
    h.constant = last;
    out.push_back(h);
  }
  return out;
}

Interval ClipInterval(Interval iv, const std::vector<HalfSpace>& constraints) {
  for (const HalfSpace& h : constraints) {
    const double slope = h.coef[0];
    if (std::fabs(slope) <= 1e-15) {
      if (h.constant < -kMeasureTolerance) return {1.0, 0.0};
      continue;
    }
    const double root = -h.constant / slope;
    if (slope > 0.0) {
      iv.lo = std::max(iv.lo, root);
    } else {
      iv.hi = std::min(iv.hi, root);
    }
  }
  return iv;
}

std::vector<Point2> ClipPolygon(std::vector<Point2> poly,
                                const std::vector<HalfSpace>& constraints) {
  for (const HalfSpace& h : constraints) {
    if (poly.empty()) break;
    std::vector<Point2> next;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point2& p = poly[i];
      const Point2& q = poly[(i + 1) % poly.size()];
      const double fp = h.Eval(p);
      const double fq = h.Eval(q);
      const bool p_in = fp >= -kMeasureTolerance;
      const bool q_in = fq >= -kMeasureTolerance;
      if (p_in) next.push_back(p);
      if (p_in != q_in) {
        const double s = fp / (fp - fq);
        next.push_back({p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])});
      }
    }
    poly = std::move(next);
  }
  return poly;
}

double PolygonArea(const std::vector<Point2>& poly) {
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % poly.size()];
    twice += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * std::fabs(twice);
}

Cell MakeCell(std::size_t num_states, std::vector<std::size_t> actions,
              const std::vector<HalfSpace>& constraints) {
  Cell cell;
  cell.actions = std::move(actions);
  if (num_states == 2) {
    cell.interval = ClipInterval({0.0, 1.0}, constraints);
    cell.measure = std::max(0.0, cell.interval.length());
  } else {
    // Counter-clockwise in (p1, p2).
    std::vector<Point2> poly = ClipPolygon(
        {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, constraints);
    cell.measure = poly.size() >= 3 ? PolygonArea(poly) : 0.0;
    for (const Point2& p : poly) {
      cell.vertices.push_back({p[0], p[1], std::max(0.0, 1.0 - p[0] - p[1])});
    }
  }
  cell.empty = cell.measure <= kMeasureTolerance;
  return cell;
}

// Uniform draw from the simplex via normalized exponentials; the bit
// manipulation keeps the stream identical across standard libraries.
class SimplexSampler {
 public:
  explicit SimplexSampler(std::uint64_t seed) : state_(seed) {}

  Distribution Draw(std::size_t n) {
    Distribution p(n);
    double total = 0.0;
    for (double& v : p) {
      v = -std::log(1.0 - Uniform());
      total += v;
    }
    for (double& v : p) v /= total;
    return p;
  }

 private:
  // splitmix64
  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  std::uint64_t state_;
};

}  // namespace

std::size_t BeliefPartition::NonemptyJointCells() const {
  return static_cast<std::size_t>(
      std::count_if(joint_cells.begin(), joint_cells.end(),
                    [](const Cell& c) { return !c.empty; }));
}

BeliefPartition ComputeBeliefPartition(const BasicGame& game,
                                       const Modulator& mod) {
  const std::size_t n = game.num_states();
  RequireExactDimension(n);
  const std::size_t m = game.num_types();
  const std::size_t k = game.num_actions();
  const ModulatedUtilities u = Modulate(game, mod);

  std::vector<std::vector<std::vector<HalfSpace>>> constraints(m);
  BeliefPartition out;
  out.num_states = n;
  out.type_cells.resize(m);
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t a = 0; a < k; ++a) {
      constraints[t].push_back(ActionConstraints(u.user, t, a));
      out.type_cells[t].push_back(MakeCell(n, {a}, constraints[t][a]));
    }
  }
  const std::size_t num_policies = PolicyCount(m, k);
  for (std::size_t s = 0; s < num_policies; ++s) {
    const SecurityPolicy policy = PolicyAt(s, m, k);
    std::vector<HalfSpace> all;
    for (std::size_t t = 0; t < m; ++t) {
      const auto& c = constraints[t][policy.actions[t]];
      all.insert(all.end(), c.begin(), c.end());
    }
    out.joint_cells.push_back(MakeCell(n, policy.actions, all));
  }
  return out;
}

std::size_t ChiBound(std::size_t num_actions, std::size_t num_types,
                     std::size_t num_states) {
  const std::size_t lines =
      num_types * num_actions * (num_actions - 1) / 2;
  switch (num_states) {
    case 2:
      return lines + 1;
    case 3:
      return lines * (lines + 1) / 2;
    default:
      throw Error(ErrorKind::kUnsupportedDimension,
                  "closed-form bound only for 2 or 3 states");
  }
}

Region IdentifiableRegion(const BasicGame& game, const Modulator& mod,
                          std::size_t l, std::size_t h) {
  const std::size_t n = game.num_states();
  RequireExactDimension(n);
  if (l == h || l >= game.num_types() || h >= game.num_types()) {
    throw Error(ErrorKind::kInvalidArgument,
                "identifiability needs two distinct valid types");
  }
  const std::size_t k = game.num_actions();
  const ModulatedUtilities u = Modulate(game, mod);
  Region region;
  std::vector<Interval> pieces;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      std::vector<HalfSpace> c = ActionConstraints(u.user, l, i);
      const auto ch = ActionConstraints(u.user, h, j);
      c.insert(c.end(), ch.begin(), ch.end());
      Cell cell = MakeCell(n, {i, j}, c);
      if (cell.empty) continue;
      region.measure += cell.measure;
      if (n == 2) {
        pieces.push_back(cell.interval);
      } else {
        region.polygons.push_back(std::move(cell.vertices));
      }
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const Interval& iv : pieces) {
    if (!region.intervals.empty() &&
        iv.lo <= region.intervals.back().hi + kMeasureTolerance) {
      region.intervals.back().hi = std::max(region.intervals.back().hi, iv.hi);
    } else {
      region.intervals.push_back(iv);
    }
  }
  return region;
}

SampledPartition SamplePartition(const BasicGame& game, const Modulator& mod,
                                 std::size_t samples, std::uint64_t seed) {
  const std::size_t n = game.num_states();
  const std::size_t m = game.num_types();
  const std::size_t k = game.num_actions();
  if (n < 2) {
    throw Error(ErrorKind::kUnsupportedDimension,
                "sampling the simplex needs at least two states");
  }
  const ModulatedGame mg(
      game, mod,
      StateIndependentTypes(n, Distribution(m, 1.0 / static_cast<double>(m))));
  const UtilityTable& u = mg.utilities().user;

  SampledPartition out;
  SimplexSampler sampler(seed);
  out.points.reserve(samples);
  // Column-major copy so the per-action values accumulate with Axpy.
  std::vector<std::vector<double>> coords(n, std::vector<double>(samples));
  for (std::size_t i = 0; i < samples; ++i) {
    out.points.push_back(sampler.Draw(n));
    for (std::size_t x = 0; x < n; ++x) coords[x][i] = out.points[i][x];
  }

  std::vector<std::vector<std::size_t>> actions(
      m, std::vector<std::size_t>(samples));
  std::vector<std::vector<double>> values(k, std::vector<double>(samples));
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t a = 0; a < k; ++a) {
      std::fill(values[a].begin(), values[a].end(), 0.0);
      for (std::size_t x = 0; x < n; ++x) {
        kernels::Axpy(u(x, t, a), coords[x], values[a]);
      }
    }
    for (std::size_t i = 0; i < samples; ++i) {
      std::size_t best = 0;
      for (std::size_t a = 1; a < k; ++a) {
        if (values[a][i] > values[best][i]) best = a;
      }
      bool tied = false;
      for (std::size_t a = 0; a < k; ++a) {
        if (a != best && values[a][i] >= values[best][i] - kTolerance) {
          tied = true;
        }
      }
      actions[t][i] = tied ? mg.BestResponse(out.points[i], t) : best;
    }
  }
  std::set<std::size_t> distinct;
  out.labels.resize(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    SecurityPolicy policy{std::vector<std::size_t>(m)};
    for (std::size_t t = 0; t < m; ++t) policy.actions[t] = actions[t][i];
    out.labels[i] = PolicyIndex(policy, k);
    distinct.insert(out.labels[i]);
  }
  out.distinct_labels.assign(distinct.begin(), distinct.end());
  return out;
}

}  // namespace duplicity
