#pragma once

#include <vector>

namespace hetpref {

enum class RowSense { le, ge, eq };

// Dense linear program: minimize objective . x subject to the rows and
// per-variable lower bounds (empty lower_bounds means all zero).
struct LPProblem {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<RowSense> senses;
  std::vector<double> rhs;
  std::vector<double> lower_bounds;

  std::size_t num_vars() const { return objective.size(); }
  void validate() const;
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  std::vector<double> x;
  double objective = 0.0;
};

// Two-phase primal simplex on a dense tableau with Bland's anti-cycling rule.
// Returns infeasible/unbounded statuses instead of throwing.
LPSolution simplex_solve(const LPProblem& problem);

}  // namespace hetpref
