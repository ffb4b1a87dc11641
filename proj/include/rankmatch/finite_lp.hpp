#pragma once

#include <span>
#include <string>
#include <vector>

#include "rankmatch/exact_simplex.hpp"
#include "rankmatch/simplex.hpp"

namespace rankmatch {

// The factor-revealing LP for a run on n nodes, in the variables
// x_1..x_n (x_t = probability that the rank-t node is matched):
//
//   min (1/n) sum_t x_t
//   s.t. x_1 = 1                                          (eq1)
//        x_{t-1} - x_t >= 0                     t in 2..n (mono_t)
//        (1-(t-1)/n) x_t + (2/n) sum_{i<t} x_i >= 1       (evol_t)
//        x_n + (3/2n) sum_t x_t >= 1                      (bound)
//        x_t >= 0.
//
// Rejects n < 2.
LpModel build_ranking_lp(int n);

// Same model with exact integer data (each row scaled by a positive
// constant), equality split into a pair of inequalities, objective sum_t x_t
// (divide the optimum by n).
ExactGeLp build_ranking_lp_exact(int n);

struct ExactRankingLp {
  BigRational value;                 // optimal (1/n) sum x_t
  std::vector<BigRational> x;
};

// Exact-arithmetic oracle solve.  Cheap through n of a few dozen and still
// tolerable at n = 200 (tens of seconds).
ExactRankingLp solve_ranking_lp_exact(int n);

// CPLEX LP-format text for cross-checking with third-party solvers.
// Columns are x1..xn; rows eq1, mono_t, evol_t, bound.
std::string to_lp_format(const LpModel& model);

struct LpSeriesEntry {
  int n;
  double value;
  double running_min;
};

// Solves the family for each size, tracking the running minimum.
std::vector<LpSeriesEntry> lp_value_series(std::span<const int> sizes);

// The closed-form optimum of the continuous relaxation, 2(5-sqrt(7))/9; every
// finite optimum must sit at or above it.
double continuous_lower_bound();

}  // namespace rankmatch
