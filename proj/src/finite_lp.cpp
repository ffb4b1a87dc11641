#include "rankmatch/finite_lp.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace rankmatch {

LpModel build_ranking_lp(int n) {
  if (n < 2) throw std::invalid_argument("build_ranking_lp: need n >= 2");
  LpModel m;
  m.var_count = n;
  m.objective.assign(n, 1.0 / n);
  m.var_names.resize(n);
  for (int t = 1; t <= n; ++t) m.var_names[t - 1] = "x" + std::to_string(t);

  {
    LpRow row;
    row.coeffs.assign(n, 0.0);
    row.coeffs[0] = 1.0;
    row.rel = Relation::Eq;
    row.rhs = 1.0;
    row.name = "eq1";
    m.rows.push_back(std::move(row));
  }
  for (int t = 2; t <= n; ++t) {
    LpRow row;
    row.coeffs.assign(n, 0.0);
    row.coeffs[t - 2] = 1.0;
    row.coeffs[t - 1] = -1.0;
    row.rel = Relation::Ge;
    row.rhs = 0.0;
    row.name = "mono_" + std::to_string(t);
    m.rows.push_back(std::move(row));
  }
  for (int t = 2; t <= n; ++t) {
    LpRow row;
    row.coeffs.assign(n, 0.0);
    for (int i = 1; i < t; ++i) row.coeffs[i - 1] = 2.0 / n;
    row.coeffs[t - 1] = 1.0 - static_cast<double>(t - 1) / n;
    row.rel = Relation::Ge;
    row.rhs = 1.0;
    row.name = "evol_" + std::to_string(t);
    m.rows.push_back(std::move(row));
  }
  {
    LpRow row;
    row.coeffs.assign(n, 3.0 / (2.0 * n));
    row.coeffs[n - 1] += 1.0;
    row.rel = Relation::Ge;
    row.rhs = 1.0;
    row.name = "bound";
    m.rows.push_back(std::move(row));
  }
  return m;
}

ExactGeLp build_ranking_lp_exact(int n) {
  if (n < 2)
    throw std::invalid_argument("build_ranking_lp_exact: need n >= 2");
  ExactGeLp lp;
  lp.var_count = n;
  lp.objective.assign(n, BigInt(1));  // sum x_t; caller divides by n

  auto push = [&lp, n](std::vector<BigInt> coeffs, BigInt rhs) {
    (void)n;
    lp.rows.push_back(std::move(coeffs));
    lp.rhs.push_back(std::move(rhs));
  };

  // x_1 = 1 as x_1 >= 1 and -x_1 >= -1.
  {
    std::vector<BigInt> row(n, BigInt(0));
    row[0] = BigInt(1);
    push(row, BigInt(1));
    row[0] = BigInt(-1);
    push(row, BigInt(-1));
  }
  for (int t = 2; t <= n; ++t) {
    std::vector<BigInt> row(n, BigInt(0));
    row[t - 2] = BigInt(1);
    row[t - 1] = BigInt(-1);
    push(row, BigInt(0));
  }
  // Evolving rows scaled by n: (n-t+1) x_t + 2 sum_{i<t} x_i >= n.
  for (int t = 2; t <= n; ++t) {
    std::vector<BigInt> row(n, BigInt(0));
    for (int i = 1; i < t; ++i) row[i - 1] = BigInt(2);
    row[t - 1] = BigInt(n - t + 1);
    push(row, BigInt(n));
  }
  // Boundary row scaled by 2n: 2n x_n + 3 sum_t x_t >= 2n.
  {
    std::vector<BigInt> row(n, BigInt(3));
    row[n - 1] = row[n - 1] + BigInt(2 * n);
    push(row, BigInt(2 * n));
  }
  return lp;
}

ExactRankingLp solve_ranking_lp_exact(int n) {
  const ExactLpResult res = solve_exact_ge_lp(build_ranking_lp_exact(n));
  ExactRankingLp out;
  out.value = res.objective * BigRational(BigInt(1), BigInt(n));
  out.x = res.x;
  return out;
}

namespace {

std::string coeff_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string to_lp_format(const LpModel& model) {
  std::string out = "Minimize\n obj:";
  for (int j = 0; j < model.var_count; ++j) {
    const double c = model.objective[j];
    if (c == 0.0) continue;
    out += (c >= 0 ? " + " : " - ") + coeff_str(std::abs(c)) + " " +
           model.var_names[j];
  }
  out += "\nSubject To\n";
  for (const LpRow& row : model.rows) {
    out += " " + row.name + ":";
    for (int j = 0; j < model.var_count; ++j) {
      const double c = row.coeffs[j];
      if (c == 0.0) continue;
      out += (c >= 0 ? " + " : " - ") + coeff_str(std::abs(c)) + " " +
             model.var_names[j];
    }
    switch (row.rel) {
      case Relation::Eq: out += " = "; break;
      case Relation::Ge: out += " >= "; break;
      case Relation::Le: out += " <= "; break;
    }
    out += coeff_str(row.rhs) + "\n";
  }
  out += "Bounds\n";
  for (int j = 0; j < model.var_count; ++j)
    out += " 0 <= " + model.var_names[j] + "\n";
  out += "End\n";
  return out;
}

std::vector<LpSeriesEntry> lp_value_series(std::span<const int> sizes) {
  std::vector<LpSeriesEntry> out;
  double running = std::numeric_limits<double>::infinity();
  for (const int n : sizes) {
    const LpSolution sol = solve_simplex(build_ranking_lp(n));
    if (sol.status != LpStatus::Optimal)
      throw std::runtime_error("lp_value_series: solver failed at n=" +
                               std::to_string(n));
    running = std::min(running, sol.objective);
    out.push_back({n, sol.objective, running});
  }
  return out;
}

double continuous_lower_bound() { return 2.0 * (5.0 - std::sqrt(7.0)) / 9.0; }

}  // namespace rankmatch
