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

// Command-line front end: every solver operation over JSON game specs,
// plus the insider case-study tables. Output is CSV.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "duplicity/csv.h"
#include "duplicity/design.h"
#include "duplicity/error.h"
#include "duplicity/game_spec.h"
#include "duplicity/geometry.h"
#include "duplicity/insider.h"
#include "duplicity/lp.h"
#include "duplicity/policies.h"

namespace {

using namespace duplicity;

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct Globals {
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out_dir;
};

// Writes `table` to <out_dir>/<name>.csv, or stdout when no directory is
// configured.
void Emit(const Globals& g, const std::string& name, const Table& table) {
  if (g.out_dir.empty()) {
    std::cout << FormatCsv(table);
    return;
  }
  std::filesystem::create_directories(g.out_dir);
  const auto path = std::filesystem::path(g.out_dir) / (name + ".csv");
  WriteCsv(table, path);
  std::cerr << "wrote " << path.string() << "\n";
}

// Successive tables on stdout are separated by a blank line.
void EmitAll(const Globals& g,
             const std::vector<std::pair<std::string, Table>>& tables) {
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i > 0 && g.out_dir.empty()) std::cout << "\n";
    Emit(g, tables[i].first, tables[i].second);
  }
}

Table GeneratorTable(const Generator& gen) {
  Table t;
  t.columns = {"state", "signal", "prob"};
  for (std::size_t x = 0; x < gen.num_states(); ++x) {
    for (std::size_t s = 0; s < gen.num_signals(); ++s) {
      if (gen.prob(x, s) > 0.0) {
        t.AddRow({static_cast<double>(x), static_cast<double>(s),
                  gen.prob(x, s)});
      }
    }
  }
  return t;
}

int Solve(const Globals& g, const std::string& path, bool covert) {
  const GameSpec spec = ParseGameSpec(path);
  const BeliefProfile beliefs =
      covert ? spec.beliefs
             : BeliefProfile::Overt(spec.beliefs.b, spec.beliefs.defender);
  const SolveReport report = OptimalGenerator(spec.game, beliefs,
                                              spec.modulator);
  if (report.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kNumericalFailure,
                std::string("LP ended ") +
                    std::string(LpStatusName(report.status)));
  }
  const double prior = PriorUtility(spec.game, beliefs, spec.modulator);
  Table summary;
  summary.columns = {"value", "prior_utility", "margin", "manageable",
                     "lower_bound", "upper_bound"};
  summary.AddRow({report.value, prior, report.value - prior,
                  report.value - prior > g.tol ? 1.0 : 0.0,
                  report.bounds.lower, report.bounds.upper});
  EmitAll(g, {{"solve_summary", summary},
              {"solve_generator", GeneratorTable(*report.generator)}});
  return 0;
}

int ConcavifyCmd(const Globals& g, const std::string& path,
                 std::size_t samples) {
  const GameSpec spec = ParseGameSpec(path);
  const PwlFunction prior =
      PriorUtilityPwl(spec.game, spec.beliefs.defender, spec.modulator);
  const PwlFunction closure = Concavify(prior);
  if (samples < 2) throw Error(ErrorKind::kEmptyGrid, "need >= 2 samples");
  std::vector<double> points;
  for (std::size_t i = 0; i < samples; ++i) {
    points.push_back(static_cast<double>(i) /
                     static_cast<double>(samples - 1));
  }
  const auto tilde = prior.EvaluateMany(points);
  const auto hull = closure.EvaluateMany(points);
  Table curve;
  curve.columns = {"p", "v_tilde", "V_D"};
  for (std::size_t i = 0; i < points.size(); ++i) {
    curve.AddRow({points[i], tilde[i], hull[i]});
  }
  Table pieces;
  pieces.columns = {"breakpoint", "v_tilde", "V_D"};
  for (std::size_t i = 0; i < prior.breakpoints().size(); ++i) {
    const double p = prior.breakpoints()[i];
    pieces.AddRow({p, prior.point_values()[i], closure.Evaluate(p)});
  }
  EmitAll(g, {{"concavify_curve", curve}, {"concavify_breakpoints", pieces}});
  return 0;
}

int Partition(const Globals& g, const std::string& path, std::size_t samples) {
  const GameSpec spec = ParseGameSpec(path);
  const std::size_t m = spec.game.num_types();
  const std::size_t k = spec.game.num_actions();
  const std::size_t n = spec.game.num_states();
  const BeliefPartition part = ComputeBeliefPartition(spec.game,
                                                      spec.modulator);
  Table cells;
  cells.columns = {"policy"};
  for (const auto& type : spec.game.types()) cells.columns.push_back("a_" + type);
  cells.columns.insert(cells.columns.end(), {"empty", "measure"});
  if (n == 2) cells.columns.insert(cells.columns.end(), {"lo", "hi"});
  for (std::size_t i = 0; i < part.joint_cells.size(); ++i) {
    const Cell& cell = part.joint_cells[i];
    std::vector<double> row = {static_cast<double>(i)};
    for (std::size_t a : cell.actions) row.push_back(static_cast<double>(a));
    row.push_back(cell.empty ? 1.0 : 0.0);
    row.push_back(cell.measure);
    if (n == 2) {
      row.push_back(cell.empty ? 0.0 : cell.interval.lo);
      row.push_back(cell.empty ? 0.0 : cell.interval.hi);
    }
    cells.AddRow(std::move(row));
  }
  Table summary;
  summary.columns = {"nonempty_cells", "chi_bound", "sampled_labels"};
  const SampledPartition sampled =
      SamplePartition(spec.game, spec.modulator, samples, g.seed);
  summary.AddRow({static_cast<double>(part.NonemptyJointCells()),
                  static_cast<double>(ChiBound(k, m, n)),
                  static_cast<double>(sampled.distinct_labels.size())});
  EmitAll(g, {{"partition_cells", cells}, {"partition_summary", summary}});
  return 0;
}

// "lo:hi:step"
ModulatorGrid ParseGrid(const std::string& text, std::size_t num_actions,
                        double gamma) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !in.eof()) {
    throw Error(ErrorKind::kInvalidArgument,
                "--c-grid expects lo:hi:step, got '" + text + "'");
  }
  return ModulatorGrid::Uniform(num_actions, lo, hi, step, gamma);
}

int Design(const Globals& g, const std::string& path,
           const std::string& grid_text) {
  const GameSpec spec = ParseGameSpec(path);
  const ModulatorGrid grid = ParseGrid(grid_text, spec.game.num_actions(),
                                       spec.modulator.gamma());
  const GmmDesign design = DesignGmm(spec.game, spec.beliefs.defender, grid);
  Table summary;
  summary.columns = {"value", "manipulated_prior"};
  for (std::size_t a = 1; a < spec.game.num_actions(); ++a) {
    summary.columns.push_back("c_" + spec.game.actions()[a]);
  }
  std::vector<double> row = {design.value, design.manipulated_beliefs.b[0]};
  for (std::size_t a = 1; a < spec.game.num_actions(); ++a) {
    row.push_back(design.modulator.transfer(a));
  }
  summary.AddRow(std::move(row));
  Table log;
  log.columns = {summary.columns.begin() + 2, summary.columns.end()};
  log.columns.insert(log.columns.end(), {"value", "manipulated_prior"});
  for (const auto& cand : design.stage_log.log) {
    std::vector<double> r(cand.transfer.begin() + 1, cand.transfer.end());
    r.push_back(cand.value);
    r.push_back(cand.manipulated_prior);
    log.AddRow(std::move(r));
  }
  EmitAll(g, {{"design_summary", summary}, {"design_log", log}});
  return 0;
}

int Bounds(const Globals& g, const std::string& path) {
  const GameSpec spec = ParseGameSpec(path);
  const CapacityBounds b =
      DesignCapacityBounds(spec.game, spec.beliefs.defender, spec.modulator);
  Table t;
  t.columns = {"lower", "upper", "rbar", "max_cbar"};
  t.AddRow({b.lower, b.upper, b.rbar, b.max_cbar});
  Emit(g, "bounds", t);
  return 0;
}

insider::InsiderParams BenchmarkParams() {
  const GameSpec spec = ParseGameSpec(BundledDataPath("benchmark_insider.json"));
  return spec.insider.value_or(insider::InsiderParams::Benchmark());
}

int CaseStudy(const Globals& g, const std::string& figure_name,
              std::size_t grid, const std::optional<double>& honeypot) {
  const insider::Figure figure = insider::ParseFigure(figure_name);
  insider::FigureConfig config;
  config.surface_points = grid;
  if (honeypot) config.fig7_honeypot = *honeypot;
  Emit(g, std::string(insider::FigureName(figure)),
       insider::FigureData(figure, BenchmarkParams(), config));
  return 0;
}

int Stats(const Globals& g, std::size_t grid) {
  insider::HeadlineConfig config;
  config.surface_points = grid;
  const insider::HeadlineStats s =
      insider::ComputeHeadlineStats(BenchmarkParams(), config);
  Table t;
  t.columns = {"near_threshold_ratio",    "near_threshold_prior",
               "fig5_ratio_of_means",     "fig5_mean_of_ratios",
               "fig5_excluded",           "fig8_ratio_of_means",
               "fig8_mean_of_ratios",     "fig8_excluded"};
  t.AddRow({s.near_threshold_ratio, s.near_threshold_prior,
            s.fig5.ratio_of_means, s.fig5.mean_of_ratios,
            static_cast<double>(s.fig5.excluded_points),
            s.fig8.ratio_of_means, s.fig8.mean_of_ratios,
            static_cast<double>(s.fig8.excluded_points)});
  Emit(g, "stats", t);
  return 0;
}

int ExitCodeFor(ErrorKind kind) {
  return kind == ErrorKind::kNumericalFailure ? kExitNumerical
                                              : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Duplicity game solver: generators, modulators, manipulators"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();
  Globals g;
  if (const char* env = std::getenv("DUPLICITY_OUT_DIR")) g.out_dir = env;
  app.add_option("--tol", g.tol, "Margin tolerance for classifications")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for sampled partitions");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv"}));

  std::string spec_path;
  bool covert = false;
  std::size_t samples = 101;
  std::string c_grid;
  std::string figure;
  std::size_t grid = 101;
  std::string out_dir;
  std::optional<double> honeypot;

  auto* solve = app.add_subcommand("solve", "Optimal credible generator");
  solve->add_option("spec", spec_path, "Game spec (JSON)")->required();
  solve->add_flag("--covert", covert, "Use the spec's b_U instead of b");

  auto* concavify =
      app.add_subcommand("concavify", "Prior utility and its concave closure");
  concavify->add_option("spec", spec_path)->required();
  concavify->add_option("--samples", samples, "Evaluation points");

  auto* partition = app.add_subcommand("partition", "Best-response partition");
  partition->add_option("spec", spec_path)->required();
  partition->add_option("--samples", samples, "Sampled points (uses --seed)");

  auto* design = app.add_subcommand("design", "Modulator grid search + GMM");
  design->add_option("spec", spec_path)->required();
  design->add_option("--c-grid", c_grid, "Transfer grid lo:hi:step")
      ->required();

  auto* case_study = app.add_subcommand("case-study", "Insider figure tables");
  case_study->add_option("--figure", figure, "fig5a|fig5b|fig6|fig7a|fig7b|"
                                             "fig8a|fig8b")
      ->required();
  case_study->add_option("--grid", grid, "Points per surface axis");
  case_study->add_option("--out", out_dir, "Output directory");
  case_study->add_option("--honeypot", honeypot,
                         "Honeypot share for fig7 (default 0.2)");

  auto* bounds = app.add_subcommand("bounds", "Design capacity bounds");
  bounds->add_option("spec", spec_path)->required();

  auto* stats = app.add_subcommand("stats", "Headline statistics");
  stats->add_option("--grid", grid, "Points per surface axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }
  if (!out_dir.empty()) g.out_dir = out_dir;

  try {
    if (*solve) return Solve(g, spec_path, covert);
    if (*concavify) return ConcavifyCmd(g, spec_path, samples);
    if (*partition) return Partition(g, spec_path, samples);
    if (*design) return Design(g, spec_path, c_grid);
    if (*case_study) return CaseStudy(g, figure, grid, honeypot);
    if (*bounds) return Bounds(g, spec_path);
    if (*stats) return Stats(g, grid);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
