#include "hetpref/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hetpref {

namespace {

constexpr double kTol = 1e-9;

// Dense tableau with the objective in the last row and the rhs in the last
// column. basis[i] is the column basic in row i.
struct Tableau {
  std::size_t m = 0;      // constraint rows
  std::size_t ncols = 0;  // columns excluding rhs
  std::vector<std::vector<double>> t;
  std::vector<std::size_t> basis;

  double& at(std::size_t r, std::size_t c) { return t[r][c]; }
  double& rhs(std::size_t r) { return t[r][ncols]; }
  std::vector<double>& obj() { return t[m]; }

  void pivot(std::size_t r, std::size_t c) {
    double inv = 1.0 / t[r][c];
    for (auto& v : t[r]) v *= inv;
    t[r][c] = 1.0;  // cut rounding residue
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r) continue;
      double factor = t[i][c];
      if (factor == 0.0) continue;
      for (std::size_t jj = 0; jj <= ncols; ++jj) t[i][jj] -= factor * t[r][jj];
      t[i][c] = 0.0;
    }
    basis[r] = c;
  }

  // Bland's rule: entering = lowest-index column with a negative reduced
  // cost, leaving = min-ratio row with the lowest basic column index.
  // Returns false at optimum; throws Unbounded below via sentinel.
  enum class StepResult { optimal, pivoted, unbounded };

  StepResult step(const std::vector<bool>& allowed) {
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (allowed[j] && t[m][j] < -kTol) {
        enter = j;
        break;
      }
    }
    if (enter == ncols) return StepResult::optimal;
    std::size_t leave = m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] > kTol) {
        double ratio = rhs(i) / t[i][enter];
        if (ratio < best_ratio - kTol ||
            (ratio < best_ratio + kTol && (leave == m || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave == m) return StepResult::unbounded;
    pivot(leave, enter);
    return StepResult::pivoted;
  }

  StepResult run(const std::vector<bool>& allowed) {
    while (true) {
      StepResult r = step(allowed);
      if (r != StepResult::pivoted) return r;
    }
  }
};

}  // namespace

void LPProblem::validate() const {
  std::size_t n = objective.size();
  if (rows.size() != senses.size() || rows.size() != rhs.size()) {
    throw std::invalid_argument("lp: rows/senses/rhs size mismatch");
  }
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("lp: row width mismatch");
  }
  if (!lower_bounds.empty() && lower_bounds.size() != n) {
    throw std::invalid_argument("lp: lower bound size mismatch");
  }
  auto finite = [](double v) { return std::isfinite(v); };
  for (double v : objective) {
    if (!finite(v)) throw std::invalid_argument("lp: non-finite objective");
  }
  for (double v : rhs) {
    if (!finite(v)) throw std::invalid_argument("lp: non-finite rhs");
  }
  for (const auto& row : rows) {
    for (double v : row) {
      if (!finite(v)) throw std::invalid_argument("lp: non-finite coefficient");
    }
  }
  for (double v : lower_bounds) {
    if (!finite(v)) throw std::invalid_argument("lp: non-finite lower bound");
  }
}

LPSolution simplex_solve(const LPProblem& problem) {
  problem.validate();
  std::size_t n = problem.num_vars();
  std::size_t m = problem.rows.size();
  std::vector<double> lb = problem.lower_bounds;
  if (lb.empty()) lb.assign(n, 0.0);

  // Shift x = lb + x', x' >= 0, and normalize every row to nonnegative rhs.
  std::vector<std::vector<double>> rows = problem.rows;
  std::vector<RowSense> senses = problem.senses;
  std::vector<double> rhs(m);
  double objective_shift = 0.0;
  for (std::size_t j = 0; j < n; ++j) objective_shift += problem.objective[j] * lb[j];
  for (std::size_t i = 0; i < m; ++i) {
    double b = problem.rhs[i];
    for (std::size_t j = 0; j < n; ++j) b -= rows[i][j] * lb[j];
    if (b < 0.0) {
      b = -b;
      for (auto& v : rows[i]) v = -v;
      if (senses[i] == RowSense::le) {
        senses[i] = RowSense::ge;
      } else if (senses[i] == RowSense::ge) {
        senses[i] = RowSense::le;
      }
    }
    rhs[i] = b;
  }

  std::size_t num_slack = 0;
  std::size_t num_artificial = 0;
  for (RowSense s : senses) {
    if (s != RowSense::eq) ++num_slack;
    if (s != RowSense::le) ++num_artificial;
  }

  Tableau tab;
  tab.m = m;
  tab.ncols = n + num_slack + num_artificial;
  tab.t.assign(m + 1, std::vector<double>(tab.ncols + 1, 0.0));
  tab.basis.assign(m, 0);

  std::size_t slack_base = n;
  std::size_t artificial_base = n + num_slack;
  std::size_t slack_at = 0;
  std::size_t artificial_at = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = rows[i][j];
    tab.rhs(i) = rhs[i];
    if (senses[i] == RowSense::le) {
      std::size_t col = slack_base + slack_at++;
      tab.at(i, col) = 1.0;
      tab.basis[i] = col;
    } else if (senses[i] == RowSense::ge) {
      tab.at(i, slack_base + slack_at++) = -1.0;
      std::size_t col = artificial_base + artificial_at++;
      tab.at(i, col) = 1.0;
      tab.basis[i] = col;
    } else {
      std::size_t col = artificial_base + artificial_at++;
      tab.at(i, col) = 1.0;
      tab.basis[i] = col;
    }
  }

  LPSolution solution;

  if (num_artificial > 0) {
    // Phase 1: minimize the artificial sum.
    for (std::size_t j = 0; j < tab.ncols; ++j) {
      tab.obj()[j] = (j >= artificial_base) ? 1.0 : 0.0;
    }
    tab.obj()[tab.ncols] = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis[i] >= artificial_base) {
        for (std::size_t j = 0; j <= tab.ncols; ++j) tab.obj()[j] -= tab.t[i][j];
      }
    }
    std::vector<bool> allowed(tab.ncols, true);
    tab.run(allowed);  // phase 1 is always bounded below by 0
    double phase1 = -tab.obj()[tab.ncols];
    if (phase1 > 1e-7) {
      solution.status = LPStatus::infeasible;
      return solution;
    }
    // Drive leftover artificials out of the basis where a pivot exists.
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis[i] < artificial_base) continue;
      for (std::size_t j = 0; j < artificial_base; ++j) {
        if (std::abs(tab.t[i][j]) > kTol) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2 objective over structural and slack columns only.
  for (std::size_t j = 0; j <= tab.ncols; ++j) {
    tab.obj()[j] = (j < n) ? problem.objective[j] : 0.0;
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t b = tab.basis[i];
    if (b < n && problem.objective[b] != 0.0) {
      double c = problem.objective[b];
      for (std::size_t j = 0; j <= tab.ncols; ++j) tab.obj()[j] -= c * tab.t[i][j];
    }
  }
  std::vector<bool> allowed(tab.ncols, true);
  for (std::size_t j = artificial_base; j < tab.ncols; ++j) allowed[j] = false;
  if (tab.run(allowed) == Tableau::StepResult::unbounded) {
    solution.status = LPStatus::unbounded;
    return solution;
  }

  solution.status = LPStatus::optimal;
  solution.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) solution.x[tab.basis[i]] = tab.rhs(i);
  }
  solution.objective = objective_shift;
  for (std::size_t j = 0; j < n; ++j) {
    solution.x[j] += lb[j];
    solution.objective += problem.objective[j] * (solution.x[j] - lb[j]);
  }
  return solution;
}

}  // namespace hetpref
