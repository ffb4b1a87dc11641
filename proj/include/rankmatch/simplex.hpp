#pragma once

#include <string>
#include <vector>

namespace rankmatch {

enum class Relation { Eq, Ge, Le };

struct LpRow {
  std::vector<double> coeffs;
  Relation rel = Relation::Ge;
  double rhs = 0.0;
  std::string name;
};

// Minimization LP with nonnegative variables.
struct LpModel {
  int var_count = 0;
  std::vector<double> objective;
  std::vector<LpRow> rows;
  std::vector<std::string> var_names;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  double objective = 0.0;
  std::vector<double> x;
  std::vector<double> duals;  // one per row, signed for the original row

  // Self-check diagnostics computed from the model, not the tableau.
  double max_primal_residual = 0.0;
  double max_dual_residual = 0.0;
  double strong_duality_gap = 0.0;
  long iterations = 0;
};

// Dense two-phase tableau simplex.  Deterministic: Dantzig entering with a
// least-index tie break, switching to Bland's least-index rule whenever the
// objective stalls (which also guarantees termination).  No external
// dependencies; intended for the small dense models this project builds.
LpSolution solve_simplex(const LpModel& model, double feas_tol = 1e-9,
                         double opt_tol = 1e-9);

}  // namespace rankmatch
