#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankmatch/piecewise.hpp"

namespace rankmatch {

// Data of the continuous program family
//
//   min  p(z) = int_0^1 A z
//   s.t. z(0) = K
//        z' <= 0
//        B(t) z(t) + int_0^t D(t,l) z(l) dl >= C(t)
//        z(1) + int_0^1 F z >= L
//        z >= 0
//
// and its dual
//
//   max  d(w,y,g) = int_0^1 C w + L g - K y(0)
//   s.t. B(t) w(t) + int_t^1 D(l,t) w(l) dl + F(t) g + y'(t) <= A(t)
//        g - y(1) <= 0
//        w, y, g >= 0.
struct ContinuousLpSpec {
  double K = 1.0;
  double L = 1.0;
  std::function<double(double)> A, B, C, F;
  std::function<double(double, double)> D;  // D(theta, lambda), nonnegative
  // Set when D is a constant; lets the checkers reuse prefix integrals
  // instead of per-sample kernel quadrature (same Simpson rule either way).
  std::optional<double> D_const;
  // Interior kinks of A, B, C, F; quadrature segments split here.
  std::vector<double> breakpoints;
};

// The specialization the finite family relaxes to:
// K = L = 1, A = 1, B(t) = 1 - t, C = 1, D = 2, F = 3/2.
ContinuousLpSpec lp_infinity_spec();

using PrimalFunction = PiecewiseFunction;

struct DualTriple {
  PiecewiseFunction w;
  PiecewiseFunction y;
  double gamma = 0.0;
};

// Closed-form optimal pair.  mu = (5 - sqrt 7)/3, the root of
// 3 mu^2 - 10 mu + 6 = 0 inside (0,1);
//   z = 1-t on [0,mu], 1-mu after;
//   w = 2(1-mu)^2 / ((5-3mu)(1-t)^3) on [0,mu], 0 after;
//   y = 0 on [0,mu], 2(t-mu)/(5-3mu) after;
//   gamma = 2(1-mu)/(5-3mu).
struct ClosedFormSolution {
  double mu;
  PrimalFunction z;
  DualTriple dual;
};

ClosedFormSolution closed_form();

// 2(5 - sqrt 7)/9, the common optimal value of the closed-form pair.
double lp_infinity_optimal_value();

// Step embedding of a finite solution: z(0) = x_1, z = x_t on
// ((t-1)/n, t/n].  Requires x_1 = 1, nonincreasing, nonnegative (each within
// 1e-12); throws naming the violated condition.
PrimalFunction embed_step(std::span<const double> x);

struct FamilyResult {
  std::string family;
  double max_violation = 0.0;
  double at_theta = 0.0;
  bool pass = true;
};

struct ConstraintReport {
  std::vector<FamilyResult> families;
  int grid = 0;
  double tol = 0.0;
  bool pass = true;

  const FamilyResult& family(const std::string& name) const;
  std::string csv() const;  // family,max_violation,at_theta,pass
};

// Samples the primal constraints at grid+1 uniform points plus every
// breakpoint; integrals use composite Simpson split at breakpoints.
// Families: initial, monotone, row, boundary, nonneg.
ConstraintReport check_primal_feasibility(const ContinuousLpSpec& spec,
                                          const PrimalFunction& z, int grid,
                                          double tol);

// Families: row, terminal, nonneg.
ConstraintReport check_dual_feasibility(const ContinuousLpSpec& spec,
                                        const DualTriple& dual, int grid,
                                        double tol);

double primal_objective(const ContinuousLpSpec& spec, const PrimalFunction& z,
                        int grid);
double dual_objective(const ContinuousLpSpec& spec, const DualTriple& dual,
                      int grid);

// p(z) - d(w,y,gamma); both sides are verified feasible first (tolerance
// 1e-7) and an infeasible input is rejected.
double duality_gap(const ContinuousLpSpec& spec, const PrimalFunction& z,
                   const DualTriple& dual, int grid);

// The five joint-optimality products:
//   monotone_times_y         z'(t) y(t)
//   row_slack_times_w        [B z + int D z - C](t) w(t)
//   boundary_slack_times_gamma [z(1) + int F z - L] gamma
//   dual_row_slack_times_z   [B w + int D w + F gamma + y' - A](t) z(t)
//   terminal_slack_times_z1  [gamma - y(1)] z(1)
// Derivative terms skip a 1e-12 window around declared breakpoints.
ConstraintReport check_complementary_slackness(const ContinuousLpSpec& spec,
                                               const PrimalFunction& z,
                                               const DualTriple& dual,
                                               int grid, double tol);

}  // namespace rankmatch
