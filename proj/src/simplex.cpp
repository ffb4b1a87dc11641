#include "rankmatch/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rankmatch {

namespace {

// Compensated accumulation for the reported objective and residuals.
double kahan_dot(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double term = a[i] * b[i];
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

constexpr long kStallLimit = 64;

struct Tableau {
  int rows = 0;
  int cols = 0;  // excluding rhs
  std::vector<double> data;  // (rows + 1) x (cols + 1); last row = costs
  std::vector<int> basis;    // basic column per row

  double* row(int i) { return data.data() + static_cast<std::size_t>(i) * (cols + 1); }
  const double* row(int i) const {
    return data.data() + static_cast<std::size_t>(i) * (cols + 1);
  }
  double* cost() { return row(rows); }

  void pivot(int pr, int pc) {
    double* prow = row(pr);
    const double inv = 1.0 / prow[pc];
    for (int j = 0; j <= cols; ++j) prow[j] *= inv;
    prow[pc] = 1.0;
    for (int i = 0; i <= rows; ++i) {
      if (i == pr) continue;
      double* r = row(i);
      const double f = r[pc];
      if (f == 0.0) continue;
      for (int j = 0; j <= cols; ++j) r[j] -= f * prow[j];
      r[pc] = 0.0;
    }
    basis[pr] = pc;
  }
};

}  // namespace

LpSolution solve_simplex(const LpModel& model, double feas_tol,
                         double opt_tol) {
  const int nv = model.var_count;
  const int m = static_cast<int>(model.rows.size());
  if (static_cast<int>(model.objective.size()) != nv)
    throw std::invalid_argument("solve_simplex: objective size mismatch");
  for (const LpRow& r : model.rows)
    if (static_cast<int>(r.coeffs.size()) != nv)
      throw std::invalid_argument("solve_simplex: row size mismatch");

  // Normalize rows to nonnegative rhs, note original orientation.
  std::vector<char> flipped(m, 0);
  std::vector<Relation> rel(m);
  std::vector<double> rhs(m);
  for (int i = 0; i < m; ++i) {
    rel[i] = model.rows[i].rel;
    rhs[i] = model.rows[i].rhs;
    if (rhs[i] < 0.0 || (rhs[i] == 0.0 && rel[i] == Relation::Ge)) {
      // Flip so that Ge rows with zero rhs become Le and start slack-basic.
      flipped[i] = 1;
      rhs[i] = -rhs[i];
      if (rel[i] == Relation::Ge)
        rel[i] = Relation::Le;
      else if (rel[i] == Relation::Le)
        rel[i] = Relation::Ge;
    }
  }

  // Column layout: structural, then slack/surplus, then artificials.
  int slack_cols = 0, artificial_cols = 0;
  for (int i = 0; i < m; ++i) {
    if (rel[i] != Relation::Eq) ++slack_cols;
    if (rel[i] == Relation::Eq || rel[i] == Relation::Ge) ++artificial_cols;
  }

  Tableau t;
  t.rows = m;
  t.cols = nv + slack_cols + artificial_cols;
  t.data.assign(static_cast<std::size_t>(m + 1) * (t.cols + 1), 0.0);
  t.basis.assign(m, -1);
  const int first_artificial = nv + slack_cols;

  int next_slack = nv, next_artificial = first_artificial;
  std::vector<int> slack_col_of(m, -1), artificial_col_of(m, -1);
  // init_col_of[i]: the column that starts as the i-th identity column; its
  // tableau contents after pivoting are the i-th column of the basis inverse.
  std::vector<int> init_col_of(m, -1);
  for (int i = 0; i < m; ++i) {
    double* r = t.row(i);
    const double sgn = flipped[i] ? -1.0 : 1.0;
    for (int j = 0; j < nv; ++j) r[j] = sgn * model.rows[i].coeffs[j];
    r[t.cols] = rhs[i];
    if (rel[i] != Relation::Eq) {
      slack_col_of[i] = next_slack++;
      r[slack_col_of[i]] = rel[i] == Relation::Le ? 1.0 : -1.0;
    }
    if (rel[i] == Relation::Eq || rel[i] == Relation::Ge) {
      artificial_col_of[i] = next_artificial++;
      r[artificial_col_of[i]] = 1.0;
      t.basis[i] = artificial_col_of[i];
      init_col_of[i] = artificial_col_of[i];
    } else {
      t.basis[i] = slack_col_of[i];
      init_col_of[i] = slack_col_of[i];
    }
  }

  LpSolution sol;
  long iterations = 0;

  auto run_phase = [&](bool restrict_artificials) -> LpStatus {
    long stall = 0;
    double last_obj = t.cost()[t.cols];
    const int limit = restrict_artificials ? first_artificial : t.cols;
    for (;;) {
      if (iterations > 200000l * (m + 1))
        throw std::runtime_error("solve_simplex: iteration limit exceeded");
      const bool bland = stall > kStallLimit;
      int enter = -1;
      double best = -opt_tol;
      for (int j = 0; j < limit; ++j) {
        const double rc = t.cost()[j];
        if (rc < best) {
          enter = j;
          if (bland) break;
          best = rc;
        } else if (bland && rc < -opt_tol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      int leave = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m; ++i) {
        const double a = t.row(i)[enter];
        if (a <= feas_tol) continue;
        const double ratio = t.row(i)[t.cols] / a;
        if (leave < 0 || ratio < best_ratio - 1e-12 ||
            (ratio <= best_ratio + 1e-12 && t.basis[i] < t.basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;

      t.pivot(leave, enter);
      ++iterations;
      const double obj = t.cost()[t.cols];
      stall = obj < last_obj - 1e-12 ? 0 : stall + 1;
      last_obj = obj;
    }
  };

  // Phase 1: minimize the artificial total.
  {
    double* c = t.cost();
    for (int j = first_artificial; j < t.cols; ++j) c[j] = 1.0;
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < first_artificial) continue;
      const double* r = t.row(i);
      for (int j = 0; j <= t.cols; ++j) c[j] -= r[j];
    }
    const LpStatus st = run_phase(false);
    if (st == LpStatus::Unbounded)
      throw std::logic_error("solve_simplex: phase 1 unbounded");
    const double infeasibility = -t.cost()[t.cols];
    if (infeasibility > 1e-7) {
      sol.status = LpStatus::Infeasible;
      sol.iterations = iterations;
      return sol;
    }
  }

  // Drive leftover artificials out of the basis where a pivot exists;
  // rows that offer none are redundant and keep a zero-valued artificial.
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < first_artificial) continue;
    for (int j = 0; j < first_artificial; ++j) {
      if (std::abs(t.row(i)[j]) > 1e-8) {
        t.pivot(i, j);
        ++iterations;
        break;
      }
    }
  }

  // Phase 2: original objective, artificial columns barred from entering.
  {
    double* c = t.cost();
    std::fill(c, c + t.cols + 1, 0.0);
    for (int j = 0; j < nv; ++j) c[j] = model.objective[j];
    for (int i = 0; i < m; ++i) {
      const int b = t.basis[i];
      const double cb = b < nv ? model.objective[b] : 0.0;
      if (cb == 0.0) continue;
      const double* r = t.row(i);
      for (int j = 0; j <= t.cols; ++j) c[j] -= cb * r[j];
    }
    const LpStatus st = run_phase(true);
    if (st == LpStatus::Unbounded) {
      sol.status = LpStatus::Unbounded;
      sol.iterations = iterations;
      return sol;
    }
  }

  // Extract the primal point.
  sol.x.assign(nv, 0.0);
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < nv) sol.x[t.basis[i]] = t.row(i)[t.cols];
  sol.objective = kahan_dot(sol.x, model.objective);
  sol.iterations = iterations;

  // Duals: y^T = c_B^T B^{-1}; the initial identity columns hold B^{-1}.
  sol.duals.assign(m, 0.0);
  for (int i = 0; i < m; ++i) {
    double y = 0.0;
    for (int k = 0; k < m; ++k) {
      const int b = t.basis[k];
      const double cb = b < nv ? model.objective[b] : 0.0;
      if (cb != 0.0) y += cb * t.row(k)[init_col_of[i]];
    }
    sol.duals[i] = flipped[i] ? -y : y;
  }

  // Residual diagnostics against the original model.
  for (int i = 0; i < m; ++i) {
    const double lhs = kahan_dot(model.rows[i].coeffs, sol.x);
    const double d = lhs - model.rows[i].rhs;
    double viol = 0.0;
    switch (model.rows[i].rel) {
      case Relation::Eq: viol = std::abs(d); break;
      case Relation::Ge: viol = std::max(0.0, -d); break;
      case Relation::Le: viol = std::max(0.0, d); break;
    }
    sol.max_primal_residual = std::max(sol.max_primal_residual, viol);
    // Dual sign conditions for a minimization problem.
    if (model.rows[i].rel == Relation::Ge)
      sol.max_dual_residual =
          std::max(sol.max_dual_residual, std::max(0.0, -sol.duals[i]));
    if (model.rows[i].rel == Relation::Le)
      sol.max_dual_residual =
          std::max(sol.max_dual_residual, std::max(0.0, sol.duals[i]));
  }
  double dual_obj = 0.0;
  for (int i = 0; i < m; ++i) dual_obj += sol.duals[i] * model.rows[i].rhs;
  for (int j = 0; j < nv; ++j) {
    double aty = 0.0;
    for (int i = 0; i < m; ++i) aty += sol.duals[i] * model.rows[i].coeffs[j];
    sol.max_dual_residual =
        std::max(sol.max_dual_residual, aty - model.objective[j]);
  }
  sol.strong_duality_gap = std::abs(sol.objective - dual_obj);

  sol.status = LpStatus::Optimal;
  return sol;
}

}  // namespace rankmatch
