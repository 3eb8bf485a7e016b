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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any selected criterion fails.
//
//   acceptance                 run everything
//   acceptance 2 3 golden      run a subset
//   acceptance --write-golden DIR
//                              regenerate the reference CSVs

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "duplicity/csv.h"
#include "duplicity/design.h"
#include "duplicity/error.h"
#include "duplicity/geometry.h"
#include "duplicity/insider.h"
#include "duplicity/lp.h"
#include "duplicity/policies.h"
#include "support/oracles.h"
#include "support/random_games.h"

namespace duplicity::acceptance {
namespace {

using Clock = std::chrono::steady_clock;
using insider::Figure;
using insider::InsiderParams;
using testing::GameFactory;

constexpr double kTg = 10.0 / 13.0;
constexpr double kTb = 9.0 / 19.0;
constexpr double kMotive = 0.59375;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

insider::InsiderInstance Insider(double p_true, double p_reported,
                                 double q = 0.32, double phi0 = 0.0) {
  InsiderParams params;
  params.q_selfish = q;
  params.q_adversarial = 1.0 - q;
  params.p_honeypot_true = p_true;
  params.p_honeypot_reported = p_reported;
  params.phi0 = phi0;
  return insider::InsiderGame(params);
}

// ---------------------------------------------------------------------------

Outcome Thresholds() {
  Outcome out;
  const InsiderParams params = InsiderParams::Benchmark();
  const auto start = Clock::now();
  const auto t = insider::DecisionThresholds(params, 0.0);
  const double motive = insider::MotiveThreshold(params);
  const double deterrence = insider::DeterrenceThreshold(params);
  const double elapsed = Seconds(start);
  out.Require(std::fabs(t.selfish - kTg) <= 1e-12, "t_g");
  out.Require(std::fabs(t.adversarial - kTb) <= 1e-12, "t_b");
  out.Require(std::fabs(motive - kMotive) <= 1e-12, "motive");
  out.Require(std::fabs(deterrence - kTb) <= 1e-12, "deterrence");
  out.Require(elapsed < 1e-3, "runtime");
  out.detail << "t_g=" << t.selfish << " t_b=" << t.adversarial
             << " motive=" << motive << " deterrence=" << deterrence << " ("
             << elapsed * 1e3 << " ms)";
  return out;
}

// Random two-state games shared by the closure/LP and bound criteria.
struct ClosureSweep {
  double max_gap = 0.0;
  std::size_t solves = 0;
  std::size_t bound_violations = 0;
  double worst_bound_excess = 0.0;
  double seconds = 0.0;
  std::string first_bad;
};

const ClosureSweep& RunClosureSweep() {
  static std::optional<ClosureSweep> cached;
  if (cached) return *cached;
  ClosureSweep sweep;
  const auto start = Clock::now();
  GameFactory f(20260101);
  for (int g = 0; g < 200; ++g) {
    const std::size_t m = f.Index(1, 3), k = f.Index(2, 3);
    const BasicGame game = f.Game(2, m, k);
    const auto types = f.TypeBeliefs(2, m);
    // gamma = 0: the transfer reshapes user incentives only, which keeps
    // the capacity bounds valid for a fixed modulator.
    const Modulator mod = f.Transfer(k, 0.0);
    const PwlFunction closure = Concavify(PriorUtilityPwl(game, types, mod));
    for (int i = 0; i <= 10; ++i) {
      const double p = i / 10.0;
      const SolveReport r = OptimalGenerator(
          game, BeliefProfile::Overt(BinaryBelief(p), types), mod);
      ++sweep.solves;
      const double gap = std::fabs(closure.Evaluate(p) - r.value);
      if (gap > sweep.max_gap) sweep.max_gap = gap;
      if (gap > 1e-6 && sweep.first_bad.empty()) {
        sweep.first_bad = "game " + std::to_string(g) + " p=" +
                          std::to_string(p);
      }
      const double excess = std::max(r.bounds.lower - r.value,
                                     r.value - r.bounds.upper);
      sweep.worst_bound_excess = std::max(sweep.worst_bound_excess, excess);
      if (!r.WithinBounds(1e-6)) ++sweep.bound_violations;
    }
  }
  sweep.seconds = Seconds(start);
  cached = sweep;
  return *cached;
}

Outcome ClosureEquivalence() {
  Outcome out;
  const ClosureSweep& s = RunClosureSweep();
  out.Require(s.max_gap <= 1e-6, "gap " + s.first_bad);
  out.Require(s.seconds < 30.0, "runtime");
  out.detail << s.solves << " solves, max |closure - LP| = " << s.max_gap
             << " (" << s.seconds << " s)";
  return out;
}

Outcome BoundContainment() {
  Outcome out;
  const ClosureSweep& s = RunClosureSweep();
  out.Require(s.bound_violations == 0, "bounds");
  const auto inst = Insider(0.5, 0.5);
  const CapacityBounds b =
      DesignCapacityBounds(inst.game, inst.beliefs.defender, inst.modulator);
  out.Require(std::fabs(b.lower + 0.612) <= 1e-9, "benchmark lower");
  out.Require(std::fabs(b.upper - 0.68) <= 1e-9, "benchmark upper");
  out.detail << s.bound_violations << "/" << s.solves
             << " outside bounds (worst excess " << s.worst_bound_excess
             << "); benchmark (" << b.lower << ", " << b.upper << ")";
  return out;
}

// Priors: 11 points on the segment (N = 2) or the step-1/4 lattice (N = 3).
std::vector<Distribution> GridPriors(std::size_t n) {
  std::vector<Distribution> priors;
  if (n == 2) {
    for (int i = 0; i <= 10; ++i) priors.push_back(BinaryBelief(i / 10.0));
  } else {
    for (int i = 0; i <= 4; ++i) {
      for (int j = 0; i + j <= 4; ++j) {
        priors.push_back({i / 4.0, j / 4.0, (4 - i - j) / 4.0});
      }
    }
  }
  return priors;
}

bool Interior(const Distribution& d) {
  for (double v : d) {
    if (v <= 0.0) return false;
  }
  return true;
}

// Some type has no action that is a best response in every state.
bool SomeTypeLacksDominantAction(const BasicGame& game) {
  const UtilityTable& vu = game.utility_user();
  for (std::size_t t = 0; t < game.num_types(); ++t) {
    bool dominant_exists = false;
    for (std::size_t a = 0; a < game.num_actions() && !dominant_exists; ++a) {
      bool best_everywhere = true;
      for (std::size_t x = 0; x < game.num_states(); ++x) {
        for (std::size_t b = 0; b < game.num_actions(); ++b) {
          if (vu(x, t, b) > vu(x, t, a) + 1e-9) best_everywhere = false;
        }
      }
      dominant_exists = best_everywhere;
    }
    if (!dominant_exists) return true;
  }
  return false;
}

Outcome Dichotomy() {
  Outcome out;
  const auto start = Clock::now();
  GameFactory f(4242);
  std::size_t misaligned = 0, aligned = 0, margin_checks = 0;
  double worst_flat = 0.0, worst_full_gap = 0.0;
  double smallest_interior_margin = 1e300;
  for (int g = 0; g < 100; ++g) {
    const std::size_t n = f.Index(2, 3), m = f.Index(1, 2), k = f.Index(2, 3);
    const double rho_s = g % 2 == 0 ? (g % 10 == 0 ? 0.0 : f.Uniform(-2, -0.1))
                                    : f.Uniform(0.1, 2.0);
    UtilityTable vu = f.Table(n, m, k);
    UtilityTable vd(n, m, k);
    std::vector<double> rho_t(n);
    for (double& r : rho_t) r = f.Uniform(-1, 1);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t t = 0; t < m; ++t)
        for (std::size_t a = 0; a < k; ++a)
          vd(x, t, a) = rho_s * vu(x, t, a) + rho_t[x];
    const BasicGame game(GameFactory::Names("x", n), GameFactory::Names("t", m),
                         GameFactory::ActionNames(k), vd, vu);
    // Type beliefs independent of the state.
    const auto types = StateIndependentTypes(n, f.Simplex(m));
    const Modulator mod = Modulator::Zero(k);
    const bool no_dominant = SomeTypeLacksDominantAction(game);
    std::vector<std::size_t> signals(n);
    for (std::size_t x = 0; x < n; ++x) signals[x] = x;
    const Generator full = Generator::FullInformation(n, signals);

    (rho_s <= 0.0 ? misaligned : aligned)++;
    for (const Distribution& prior : GridPriors(n)) {
      const BeliefProfile beliefs = BeliefProfile::Overt(prior, types);
      const SolveReport r = OptimalGenerator(game, beliefs, mod);
      const double margin = r.value - PriorUtility(game, beliefs, mod);
      if (rho_s <= 0.0) {
        worst_flat = std::max(worst_flat, margin);
        out.Require(margin <= 1e-9, "misaligned margin, game " +
                                        std::to_string(g));
      } else {
        const double full_value =
            ExpectedPosteriorUtility(game, beliefs, mod, full);
        worst_full_gap = std::max(worst_full_gap,
                                  std::fabs(full_value - r.value));
        out.Require(std::fabs(full_value - r.value) <= 1e-9,
                    "full information, game " + std::to_string(g));
        if (Interior(prior) && no_dominant) {
          ++margin_checks;
          smallest_interior_margin = std::min(smallest_interior_margin, margin);
          out.Require(margin > 1e-9, "interior margin, game " +
                                         std::to_string(g));
        }
      }
    }
  }
  const double seconds = Seconds(start);
  out.Require(seconds < 60.0, "runtime");
  out.detail << misaligned << " misaligned games (max margin " << worst_flat
             << "), " << aligned << " aligned (max |full - V_D| "
             << worst_full_gap << ", min interior margin "
             << smallest_interior_margin << " over " << margin_checks
             << " priors) (" << seconds << " s)";
  return out;
}

Outcome EquivalenceSeparation() {
  Outcome out;
  GameFactory f(777);
  double worst_gap = -1e300;
  double worst_assembly = 0.0;
  for (int g = 0; g < 100; ++g) {
    const std::size_t m = f.Index(1, 3), k = f.Index(2, 3);
    const BasicGame game = f.Game(2, m, k);
    const auto types = f.TypeBeliefs(2, m);
    const double gamma = f.Uniform(0.0, 1.0);
    const EquivalenceReport eq =
        VerifyEquivalence(game, types, f.Transfer(k, gamma));
    worst_gap = std::max(worst_gap, eq.gap);
    out.Require(eq.gap <= 1e-9, "equivalence gap, game " + std::to_string(g));

    const ModulatorGrid grid = ModulatorGrid::Uniform(k, -0.5, 0.5, 0.25, gamma);
    const ModulatorSearch search = DesignModulator(game, types, grid);
    const GmmDesign gmm = DesignGmm(game, types, grid);
    out.Require(gmm.value == search.value,
                "GMM value differs from modulator search, game " +
                    std::to_string(g));
    out.Require(CheckIncentiveCompatibility(gmm.generator, game,
                                            gmm.manipulated_beliefs,
                                            gmm.modulator)
                    .empty(),
                "GMM generator not credible");
    const double assembled = ExpectedPosteriorUtility(
        game, gmm.manipulated_beliefs, gmm.modulator, gmm.generator);
    worst_assembly = std::max(worst_assembly, std::fabs(assembled - gmm.value));
    out.Require(std::fabs(assembled - gmm.value) <= 1e-9, "assembled value");
  }
  out.detail << "max (max V_D - max v_tilde) = " << worst_gap
             << "; design_gmm == design_modulator on all 100; max assembled "
                "deviation "
             << worst_assembly;
  return out;
}

Outcome FlatRegion() {
  Outcome out;
  const auto start = Clock::now();
  const Table t = insider::FigureData(Figure::kFig5b,
                                      InsiderParams::Benchmark());
  double inside_max = -1e300, outside_max = -1e300;
  for (const auto& row : t.rows) {
    const double q = row[0], p = row[1], margin = row[4];
    if (q <= kMotive && p <= kTb) {
      inside_max = std::max(inside_max, margin);
    } else {
      outside_max = std::max(outside_max, margin);
    }
  }
  const double seconds = Seconds(start);
  out.Require(inside_max <= 1e-9, "flat region margin");
  out.Require(outside_max > 1e-6, "no positive margin outside");
  out.Require(seconds < 120.0, "runtime");
  out.detail << t.rows.size() << " points; max margin inside " << inside_max
             << ", outside " << outside_max << " (" << seconds << " s)";
  return out;
}

const insider::HeadlineStats& Headline() {
  static std::optional<insider::HeadlineStats> stats;
  if (!stats) stats = insider::ComputeHeadlineStats(InsiderParams::Benchmark());
  return *stats;
}

Outcome NearThreshold() {
  Outcome out;
  const auto& s = Headline();
  out.Require(s.near_threshold_ratio >= 114.0, "ratio");
  out.Require(s.near_threshold_prior >= 0.7677 && s.near_threshold_prior < kTg,
              "prior window");
  out.detail << "max V_D/v_tilde = " << s.near_threshold_ratio << " at p = "
             << s.near_threshold_prior;
  return out;
}

void DescribeAverages(std::ostringstream& os, const char* name,
                      const insider::GainAverages& g) {
  os << name << ": ratio-of-means " << g.ratio_of_means << ", mean-of-ratios "
     << g.mean_of_ratios << " (" << g.excluded_points << "/" << g.points
     << " excluded)";
}

Outcome HeadlineReproduction() {
  Outcome out;
  const auto& s = Headline();
  auto near = [](const insider::GainAverages& g, double target) {
    return std::fabs(g.ratio_of_means - target) <= 0.05 ||
           std::fabs(g.mean_of_ratios - target) <= 0.05;
  };
  out.Require(near(s.fig5, 0.356), "fig5 average not within 0.05 of 0.356");
  out.Require(near(s.fig8, 0.593), "fig8 average not within 0.05 of 0.593");
  DescribeAverages(out.detail, "fig5", s.fig5);
  out.detail << "; ";
  DescribeAverages(out.detail, "fig8", s.fig8);
  return out;
}

Outcome HeadlineHard() {
  Outcome out;
  const auto& s = Headline();
  out.Require(s.fig5.ratio_of_means > 0 && s.fig5.mean_of_ratios > 0 &&
                  s.fig8.ratio_of_means > 0 && s.fig8.mean_of_ratios > 0,
              "averages not positive");
  const Table t = insider::FigureData(Figure::kFig8b,
                                      InsiderParams::Benchmark());
  double global = -1e300, global_pd = 0, global_pu = 0;
  bool window_hits = false;
  for (const auto& row : t.rows) {
    if (row[2] > global) {
      global = row[2];
      global_pd = row[0];
      global_pu = row[1];
    }
  }
  for (const auto& row : t.rows) {
    if (row[0] == 0.0 && row[1] > kTb && row[1] < kTg &&
        std::fabs(row[2] - 0.32) <= 1e-9 && std::fabs(row[2] - global) <= 1e-9) {
      window_hits = true;
    }
  }
  double row_max = -1e300;
  for (const auto& row : t.rows) {
    if (row[0] == 0.0) row_max = std::max(row_max, row[2]);
  }
  out.Require(std::fabs(global - 0.32) <= 1e-9 && window_hits,
              "fig8 maximum is not 0.32 at p_D = 0");
  out.detail << "fig8 V_D global max " << global << " at (p_D=" << global_pd
             << ", p_U=" << global_pu << "); max on p_D=0 is " << row_max;
  return out;
}

Outcome Exclusion() {
  Outcome out;
  const std::size_t dropout_access =
      PolicyIndex(SecurityPolicy{{0, 1}}, 2);  // selfish DO, adversarial AC
  double worst = 0.0;
  std::size_t solves = 0, nonempty = 0;
  for (int i = 0; i < 1000; ++i) {
    const double phi0 = -1.0 + 2.0 * i / 999.0;
    const auto inst = Insider(0.5, 0.5, 0.32, phi0);
    const BeliefPartition part =
        ComputeBeliefPartition(inst.game, inst.modulator);
    if (!part.joint_cells[dropout_access].empty) ++nonempty;
    for (int j = 0; j <= 10; ++j) {
      const double p = j / 10.0;
      const auto at = Insider(p, p, 0.32, phi0);
      const SolveReport r = OptimalGenerator(at.game, at.beliefs, at.modulator);
      ++solves;
      for (std::size_t x = 0; x < 2; ++x) {
        worst = std::max(worst, r.generator->prob(x, dropout_access));
      }
    }
  }
  out.Require(nonempty == 0, "cell not empty");
  out.Require(worst <= 1e-9, "policy enforced");
  out.detail << "1000 phi0 values, " << solves
             << " LP solves; max probability of {DO, AC} " << worst
             << "; nonempty cells " << nonempty;
  return out;
}

Outcome Plausibility() {
  Outcome out;
  GameFactory f(1010);
  std::size_t equal_true = 0, unequal_false = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = f.Index(2, 4);
    const bool equal = i % 2 == 0;
    const Distribution b = f.Simplex(n);
    const Distribution bu = equal ? b : f.Simplex(n);
    const std::vector<Distribution> types(n, Distribution{1.0});
    const BeliefProfile beliefs = BeliefProfile::Covert(b, bu, types);
    const Generator gen = f.RandomGenerator(n, f.Index(2, 5));
    const ExpectedPosterior e = ExpectedPosteriorBelief(beliefs, gen, 0);
    double sum = 0.0;
    bool nonneg = true;
    for (double v : e.belief) {
      sum += v;
      nonneg = nonneg && v >= 0.0;
    }
    out.Require(nonneg && std::fabs(sum - 1.0) <= 1e-9, "invalid b^e_U");
    out.Require(e.plausible == equal, "flag mismatch at triple " +
                                          std::to_string(i));
    if (equal && e.plausible) ++equal_true;
    if (!equal && !e.plausible) ++unequal_false;
  }
  out.detail << equal_true << "/50 equal pairs plausible, " << unequal_false
             << "/50 unequal pairs implausible";
  return out;
}

Outcome BruteForce() {
  Outcome out;
  GameFactory f(1111);
  double worst_oracle = 0.0, worst_excess = -1e300;
  std::size_t games = 0, generators = 0, credible = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t m = 1; m <= 2; ++m) {
      for (int rep = 0; rep < 8; ++rep) {
        const std::size_t k = 2;
        const BasicGame game = f.Game(n, m, k);
        const auto types = f.TypeBeliefs(n, m);
        const Modulator mod = f.Transfer(k, f.Uniform(0.0, 1.0));
        const BeliefProfile overt = BeliefProfile::Overt(f.Simplex(n), types);
        BeliefProfile covert = overt;
        for (auto& row : covert.user) row = f.Simplex(n);
        const double best = OptimalGenerator(game, overt, mod).value;
        ++games;

        const std::size_t signals = PolicyCount(m, k);
        const auto rows = testing::LatticeRows(signals, 4);
        std::vector<std::size_t> idx(n, 0);
        while (true) {
          std::vector<std::vector<double>> pi;
          for (std::size_t x = 0; x < n; ++x) pi.push_back(rows[idx[x]]);
          const Generator gen(pi);
          ++generators;
          for (const BeliefProfile* beliefs : {&overt, static_cast<const BeliefProfile*>(&covert)}) {
            const double got =
                ExpectedPosteriorUtility(game, *beliefs, mod, gen);
            const double want =
                testing::OracleGeneratorValue(game, mod, *beliefs, gen);
            worst_oracle = std::max(worst_oracle, std::fabs(got - want));
          }
          if (CheckIncentiveCompatibility(gen, game, overt, mod).empty()) {
            ++credible;
            const double value =
                ExpectedPosteriorUtility(game, overt, mod, gen);
            worst_excess = std::max(worst_excess, value - best);
          }
          std::size_t pos = 0;
          while (pos < n && ++idx[pos] == rows.size()) idx[pos++] = 0;
          if (pos == n) break;
        }
      }
    }
  }
  out.Require(worst_oracle <= 1e-12, "oracle mismatch");
  out.Require(worst_excess <= 1e-9, "lattice generator beats the LP");
  out.detail << games << " games, " << generators
             << " lattice generators; max |library - enumeration| "
             << worst_oracle << "; " << credible
             << " credible, max (value - LP) " << worst_excess;
  return out;
}

// ---------------------------------------------------------------------------

const std::vector<Figure> kFigures = {Figure::kFig5a, Figure::kFig5b,
                                      Figure::kFig6,  Figure::kFig7a,
                                      Figure::kFig7b, Figure::kFig8a,
                                      Figure::kFig8b};

std::filesystem::path GoldenDir() {
  return std::filesystem::path(DUPLICITY_TEST_DIR) / "golden";
}

Outcome Golden() {
  Outcome out;
  double worst = 0.0;
  for (Figure fig : kFigures) {
    const std::string name(insider::FigureName(fig));
    const auto path = GoldenDir() / (name + ".csv");
    if (!std::filesystem::exists(path)) {
      out.Require(false, "missing " + path.string());
      continue;
    }
    const Table want = ReadCsv(path);
    const Table got = insider::FigureData(fig, InsiderParams::Benchmark());
    out.Require(want.columns == got.columns, name + " columns");
    out.Require(want.rows.size() == got.rows.size(), name + " row count");
    if (want.columns != got.columns || want.rows.size() != got.rows.size()) {
      continue;
    }
    double fig_worst = 0.0;
    for (std::size_t r = 0; r < got.rows.size(); ++r) {
      for (std::size_t c = 0; c < got.columns.size(); ++c) {
        fig_worst = std::max(fig_worst,
                             std::fabs(got.rows[r][c] - want.rows[r][c]));
      }
    }
    out.Require(fig_worst <= 1e-6, name + " values");
    worst = std::max(worst, fig_worst);
  }
  out.detail << kFigures.size() << " figures, max deviation " << worst;
  return out;
}

int WriteGolden(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (Figure fig : kFigures) {
    const auto path = dir / (std::string(insider::FigureName(fig)) + ".csv");
    WriteCsv(insider::FigureData(fig, InsiderParams::Benchmark()), path);
    std::printf("wrote %s\n", path.string().c_str());
  }
  return 0;
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> all = {
      {"1", "threshold closed forms", Thresholds},
      {"2", "concave closure equals LP on random games", ClosureEquivalence},
      {"3", "capacity bound containment", BoundContainment},
      {"4", "alignment dichotomy", Dichotomy},
      {"5", "equivalence and separation", EquivalenceSeparation},
      {"6", "flat region of the trust margin", FlatRegion},
      {"7", "near-threshold ratio", NearThreshold},
      {"8", "headline averages (hard)", HeadlineHard},
      {"8-reproduction", "headline averages (reproduction)",
       HeadlineReproduction},
      {"9", "dropout/access policy exclusion", Exclusion},
      {"10", "expected posterior plausibility", Plausibility},
      {"11", "brute-force equivalence", BruteForce},
      {"golden", "figure CSVs against references", Golden},
  };
  return all;
}

}  // namespace
}  // namespace duplicity::acceptance

int main(int argc, char** argv) {
  using namespace duplicity::acceptance;
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.size() == 2 && args[0] == "--write-golden") {
    return WriteGolden(args[1]);
  }
  const std::set<std::string> wanted(args.begin(), args.end());
  int failures = 0;
  for (const Criterion& c : Criteria()) {
    if (!wanted.empty() && !wanted.contains(c.id)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::printf("%s criterion %s: %s | %s\n", o.pass ? "PASS" : "FAIL",
                c.id.c_str(), c.title.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
