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
#include <cmath>
#include <limits>
#include <span>
#include <string>

#include "duplicity/error.h"
#include "duplicity/kernels.h"
#include "duplicity/lp.h"

namespace duplicity {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// How an original variable is expressed through nonnegative columns:
// x = offset + sign * y[plus] (- y[minus] when split).
struct VariableMap {
  double offset = 0.0;
  double sign = 1.0;
  std::size_t plus = 0;
  std::ptrdiff_t minus = -1;
};

struct StandardRow {
  std::vector<double> coefficients;  // over structural columns
  Relation relation;
  double rhs;
};

// Row-major tableau; the last row holds reduced costs and the last column
// the basic values. Reduced costs are stored as d_j = c_j - c_B B^-1 A_j
// (a column enters while d_j > 0) and the objective-row rhs holds -z.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), width_(cols + 1),
        data_((rows + 1) * width_, 0.0), basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * width_ + c]; }
  double at(std::size_t r, std::size_t c) const {
    return data_[r * width_ + c];
  }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double& cost(std::size_t c) { return at(rows_, c); }
  std::span<double> row(std::size_t r) {
    return {data_.data() + r * width_, width_};
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void Pivot(std::size_t r, std::size_t c) {
    std::span<double> pivot_row = row(r);
    kernels::Scale(1.0 / at(r, c), pivot_row);
    at(r, c) = 1.0;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const double factor = at(i, c);
      if (factor == 0.0) continue;
      kernels::Axpy(-factor, pivot_row, row(i));
      at(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  // Drops row r (a redundant equality whose artificial cannot leave).
  void RemoveRow(std::size_t r) {
    data_.erase(data_.begin() + r * width_, data_.begin() + (r + 1) * width_);
    basis_.erase(basis_.begin() + r);
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t width_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

enum class PhaseResult { kOptimal, kUnbounded };

PhaseResult RunSimplex(Tableau& t, std::size_t allowed_cols,
                       const SimplexOptions& opt, std::size_t& pivots) {
  bool bland = false;
  std::size_t degenerate_run = 0;
  while (true) {
    std::size_t enter = allowed_cols;
    double best = opt.feasibility_tolerance;
    for (std::size_t j = 0; j < allowed_cols; ++j) {
      const double d = t.cost(j);
      if (d > best) {
        enter = j;
        if (bland) break;
        best = d;
      }
    }
    if (enter == allowed_cols) return PhaseResult::kOptimal;

    std::size_t leave = t.rows();
    double best_ratio = kInf;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      const double a = t.at(i, enter);
      if (a <= opt.pivot_tolerance) continue;
      const double ratio = std::max(t.rhs(i), 0.0) / a;
      // Ratio ties go to the lowest basic column index (Bland).
      if (leave == t.rows() || ratio < best_ratio - 1e-12) {
        leave = i;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + 1e-12 &&
                 t.basis()[i] < t.basis()[leave]) {
        leave = i;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    if (leave == t.rows()) return PhaseResult::kUnbounded;

    if (best_ratio <= 1e-12) {
      if (++degenerate_run >= opt.degenerate_pivot_limit) bland = true;
    } else {
      degenerate_run = 0;
    }
    t.Pivot(leave, enter);
    if (++pivots > opt.max_pivots) {
      throw Error(ErrorKind::kNumericalFailure, "simplex pivot limit reached");
    }
  }
}

}  // namespace

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

LpSolution SolveLp(const LinearProgram& lp, const SimplexOptions& opt) {
  const std::size_t n = lp.num_variables();
  std::vector<double> lower = lp.lower.empty() ? std::vector<double>(n, 0.0)
                                               : lp.lower;
  std::vector<double> upper = lp.upper.empty() ? std::vector<double>(n, kInf)
                                               : lp.upper;
  if (lower.size() != n || upper.size() != n) {
    throw Error(ErrorKind::kInvalidArgument, "bound vectors have wrong size");
  }
  for (double c : lp.objective) {
    if (!std::isfinite(c)) {
      throw Error(ErrorKind::kInvalidArgument, "objective is not finite");
    }
  }
  for (const auto& con : lp.constraints) {
    if (con.coefficients.size() != n) {
      throw Error(ErrorKind::kInvalidArgument,
                  "constraint width differs from the variable count");
    }
    for (double c : con.coefficients) {
      if (!std::isfinite(c)) {
        throw Error(ErrorKind::kInvalidArgument, "constraint is not finite");
      }
    }
    if (!std::isfinite(con.rhs)) {
      throw Error(ErrorKind::kInvalidArgument, "rhs is not finite");
    }
  }

  LpSolution solution;
  for (std::size_t i = 0; i < n; ++i) {
    if (lower[i] > upper[i]) return solution;  // infeasible bounds
  }

  // Map every variable onto nonnegative structural columns.
  std::vector<VariableMap> maps(n);
  std::size_t structural = 0;
  std::vector<StandardRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    VariableMap& m = maps[i];
    if (std::isfinite(lower[i])) {
      m = {lower[i], 1.0, structural++, -1};
    } else if (std::isfinite(upper[i])) {
      m = {upper[i], -1.0, structural++, -1};
    } else {
      m = {0.0, 1.0, structural, static_cast<std::ptrdiff_t>(structural + 1)};
      structural += 2;
    }
  }
  auto expand = [&](const std::vector<double>& coeffs, double& constant) {
    std::vector<double> out(structural, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double c = coeffs[i];
      if (c == 0.0) continue;
      constant += c * maps[i].offset;
      out[maps[i].plus] += maps[i].sign * c;
      if (maps[i].minus >= 0) out[maps[i].minus] -= c;
    }
    return out;
  };
  for (const auto& con : lp.constraints) {
    double constant = 0.0;
    std::vector<double> coeffs = expand(con.coefficients, constant);
    rows.push_back({std::move(coeffs), con.relation, con.rhs - constant});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isfinite(lower[i]) && std::isfinite(upper[i])) {
      std::vector<double> coeffs(structural, 0.0);
      coeffs[maps[i].plus] = 1.0;
      rows.push_back({std::move(coeffs), Relation::kLessEqual,
                      upper[i] - lower[i]});
    }
  }
  double objective_constant = 0.0;
  const std::vector<double> costs = expand(lp.objective, objective_constant);

  // Nonnegative right-hand sides.
  for (StandardRow& r : rows) {
    if (r.rhs < 0.0) {
      r.rhs = -r.rhs;
      for (double& c : r.coefficients) c = -c;
      if (r.relation == Relation::kLessEqual) {
        r.relation = Relation::kGreaterEqual;
      } else if (r.relation == Relation::kGreaterEqual) {
        r.relation = Relation::kLessEqual;
      }
    }
  }

  // Columns: structural | slack/surplus | artificial.
  std::size_t num_slack = 0;
  std::size_t num_artificial = 0;
  for (const StandardRow& r : rows) {
    if (r.relation != Relation::kEqual) ++num_slack;
    if (r.relation != Relation::kLessEqual) ++num_artificial;
  }
  const std::size_t real_cols = structural + num_slack;
  Tableau t(rows.size(), real_cols + num_artificial);
  std::size_t next_slack = structural;
  std::size_t next_artificial = real_cols;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const StandardRow& r = rows[i];
    std::copy(r.coefficients.begin(), r.coefficients.end(), t.row(i).begin());
    t.rhs(i) = r.rhs;
    switch (r.relation) {
      case Relation::kLessEqual:
        t.at(i, next_slack) = 1.0;
        t.basis()[i] = next_slack++;
        break;
      case Relation::kGreaterEqual:
        t.at(i, next_slack++) = -1.0;
        t.at(i, next_artificial) = 1.0;
        t.basis()[i] = next_artificial++;
        break;
      case Relation::kEqual:
        t.at(i, next_artificial) = 1.0;
        t.basis()[i] = next_artificial++;
        break;
    }
  }

  // Phase one: maximize -sum(artificials).
  if (num_artificial > 0) {
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (t.basis()[i] < real_cols) continue;
      kernels::Axpy(1.0, t.row(i), t.row(t.rows()));
    }
    for (std::size_t j = real_cols; j < t.cols(); ++j) t.cost(j) = 0.0;
    RunSimplex(t, t.cols(), opt, solution.pivots);
    if (t.rhs(t.rows()) > 1e-7) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basis()[i] < real_cols) {
        ++i;
        continue;
      }
      std::size_t col = real_cols;
      for (std::size_t j = 0; j < real_cols; ++j) {
        if (std::fabs(t.at(i, j)) > 1e-9) {
          col = j;
          break;
        }
      }
      if (col == real_cols) {
        t.RemoveRow(i);
      } else {
        t.Pivot(i, col);
        ++solution.pivots;
        ++i;
      }
    }
  }

  // Phase two reduced costs.
  for (std::size_t j = 0; j <= t.cols(); ++j) t.cost(j) = 0.0;
  for (std::size_t j = 0; j < structural; ++j) t.cost(j) = costs[j];
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const std::size_t b = t.basis()[i];
    const double cb = b < structural ? costs[b] : 0.0;
    if (cb != 0.0) kernels::Axpy(-cb, t.row(i), t.row(t.rows()));
  }
  if (RunSimplex(t, real_cols, opt, solution.pivots) ==
      PhaseResult::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  std::vector<double> y(t.cols(), 0.0);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    y[t.basis()[i]] = std::max(t.rhs(i), 0.0);
  }
  solution.values.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const VariableMap& m = maps[i];
    double v = m.offset + m.sign * y[m.plus];
    if (m.minus >= 0) v -= y[m.minus];
    solution.values[i] = std::clamp(v, lower[i], upper[i]);
  }
  solution.objective = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    solution.objective += lp.objective[i] * solution.values[i];
  }

  double residual = 0.0;
  for (const auto& con : lp.constraints) {
    double lhs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      lhs += con.coefficients[i] * solution.values[i];
    }
    const double diff = lhs - con.rhs;
    switch (con.relation) {
      case Relation::kLessEqual:
        residual = std::max(residual, diff);
        break;
      case Relation::kGreaterEqual:
        residual = std::max(residual, -diff);
        break;
      case Relation::kEqual:
        residual = std::max(residual, std::fabs(diff));
        break;
    }
  }
  if (residual > 1e-6) {
    throw Error(ErrorKind::kNumericalFailure,
                "constraint residual " + std::to_string(residual) +
                    " after simplex");
  }
  solution.status = LpStatus::kOptimal;
  return solution;
}

}  // namespace duplicity
