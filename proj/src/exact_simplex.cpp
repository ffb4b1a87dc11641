#include "rankmatch/exact_simplex.hpp"

#include <stdexcept>

namespace rankmatch {

namespace {

// Fraction-free tableau: real entry (i, j) is cell(i, j) / den with den > 0.
struct ExactTableau {
  int m = 0;       // constraint rows
  int cols = 0;    // variable columns (structural + slack), rhs excluded
  BigInt den = BigInt(1);
  std::vector<std::vector<BigInt>> cell;  // m + 1 rows; last row = costs
  std::vector<int> basis;

  BigInt& at(int i, int j) { return cell[i][j]; }

  // Pivot on (pr, pc); integer-preserving update with exact division by the
  // previous denominator.
  void pivot(int pr, int pc) {
    const BigInt p = cell[pr][pc];
    if (p.is_zero()) throw std::logic_error("exact pivot on zero");
    for (int i = 0; i <= m; ++i) {
      if (i == pr) continue;
      auto& row = cell[i];
      const BigInt f = row[pc];
      for (int j = 0; j <= cols; ++j)
        row[j] = BigInt::exact_div(row[j] * p - f * cell[pr][j], den);
    }
    den = p;
    if (den.sign() < 0) {
      den = den.negated();
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= cols; ++j) cell[i][j] = cell[i][j].negated();
    }
    basis[pr] = pc;
  }
};

}  // namespace

ExactLpResult solve_exact_ge_lp(const ExactGeLp& lp) {
  const int nv = lp.var_count;
  const int m = static_cast<int>(lp.rows.size());
  for (int j = 0; j < nv; ++j)
    if (lp.objective[j].sign() < 0)
      throw std::invalid_argument(
          "solve_exact_ge_lp: objective must be nonnegative");

  ExactTableau t;
  t.m = m;
  t.cols = nv + m;
  t.cell.assign(m + 1, std::vector<BigInt>(t.cols + 1, BigInt(0)));
  t.basis.resize(m);

  // A x >= b  as  -A x + s = -b with slack basis (dual feasible, c >= 0).
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nv; ++j) t.at(i, j) = lp.rows[i][j].negated();
    t.at(i, nv + i) = BigInt(1);
    t.at(i, t.cols) = lp.rhs[i].negated();
    t.basis[i] = nv + i;
  }
  for (int j = 0; j < nv; ++j) t.at(m, j) = lp.objective[j];

  for (long iter = 0;; ++iter) {
    if (iter > 100000)
      throw std::runtime_error("solve_exact_ge_lp: iteration limit");

    // Leaving row: negative basic value, smallest basic index (Bland).
    int leave = -1;
    for (int i = 0; i < m; ++i) {
      if (t.at(i, t.cols).sign() < 0 &&
          (leave < 0 || t.basis[i] < t.basis[leave]))
        leave = i;
    }
    if (leave < 0) break;  // primal feasible, hence optimal

    // Entering column: minimize cost[j] / -row[j] over row entries < 0,
    // smallest index on ties.  Ratios compare by cross-multiplication
    // (both denominators positive).
    int enter = -1;
    for (int j = 0; j < t.cols; ++j) {
      if (t.at(leave, j).sign() >= 0) continue;
      if (enter < 0) {
        enter = j;
        continue;
      }
      const BigInt lhs = t.at(m, j) * t.at(leave, enter).negated();
      const BigInt rhs = t.at(m, enter) * t.at(leave, j).negated();
      if (lhs < rhs) enter = j;
    }
    if (enter < 0)
      throw std::runtime_error("solve_exact_ge_lp: infeasible program");

    t.pivot(leave, enter);
  }

  ExactLpResult out;
  out.x.assign(nv, BigRational(BigInt(0), BigInt(1)));
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < nv)
      out.x[t.basis[i]] = BigRational(t.at(i, t.cols), t.den);
  // Cost row rhs carries -objective * den.
  out.objective = BigRational(t.at(m, t.cols).negated(), t.den);
  return out;
}

}  // namespace rankmatch
