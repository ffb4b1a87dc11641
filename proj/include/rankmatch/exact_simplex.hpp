#pragma once

#include <vector>

#include "rankmatch/bigint.hpp"

namespace rankmatch {

// Minimization LP in the shape  min c.x  s.t.  A x >= b, x >= 0  with
// integer data and c >= 0 (callers split equalities into two inequalities
// and scale rational coefficients to integers).
struct ExactGeLp {
  int var_count = 0;
  std::vector<BigInt> objective;
  std::vector<std::vector<BigInt>> rows;
  std::vector<BigInt> rhs;
};

struct ExactLpResult {
  BigRational objective;
  std::vector<BigRational> x;
};

// Exact dual simplex over a fraction-free integer tableau: the all-slack
// basis is dual feasible because c >= 0, every pivot keeps the tableau
// integral (divisions by the previous pivot are exact), and Bland-style
// least-index selection guarantees termination.  Used as an arithmetic
// oracle against the floating-point solver; throws if the program is
// infeasible.
ExactLpResult solve_exact_ge_lp(const ExactGeLp& lp);

}  // namespace rankmatch
