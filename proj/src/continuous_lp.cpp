#include "rankmatch/continuous_lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rankmatch {

namespace {

constexpr double kBreakWindow = 1e-12;

std::vector<double> build_thetas(
    const ContinuousLpSpec& spec,
    std::initializer_list<const PiecewiseFunction*> fns, int grid) {
  if (grid < 2) throw std::invalid_argument("grid must be at least 2");
  std::vector<double> t;
  t.reserve(grid + 16);
  for (int j = 0; j <= grid; ++j) t.push_back(static_cast<double>(j) / grid);
  for (const PiecewiseFunction* f : fns)
    for (const double b : f->interior_breakpoints()) t.push_back(b);
  for (const double b : spec.breakpoints)
    if (b > 0.0 && b < 1.0) t.push_back(b);
  std::sort(t.begin(), t.end());
  std::vector<double> out;
  out.reserve(t.size());
  for (const double v : t)
    if (out.empty() || v - out.back() > 1e-15) out.push_back(v);
  out.front() = 0.0;
  out.back() = 1.0;
  return out;
}

// One-sided evaluations of a piecewise function over the sample segments.
struct SegCache {
  std::vector<double> f_lo, f_mid, f_hi;  // per segment
  std::vector<double> at;                 // value at each sample point
};

SegCache cache_segments(const std::vector<double>& thetas,
                        const PiecewiseFunction& f) {
  const std::size_t segs = thetas.size() - 1;
  SegCache c;
  c.f_lo.resize(segs);
  c.f_mid.resize(segs);
  c.f_hi.resize(segs);
  c.at.resize(thetas.size());
  c.at[0] = f(thetas[0]);
  for (std::size_t i = 0; i < segs; ++i) {
    const double lo = thetas[i], hi = thetas[i + 1];
    const double mid = 0.5 * (lo + hi);
    const int piece = f.piece_containing(mid);
    c.f_lo[i] = f.value_in_piece(piece, lo);
    c.f_mid[i] = f.value_in_piece(piece, mid);
    c.f_hi[i] = f.value_in_piece(piece, hi);
    c.at[i + 1] = f(thetas[i + 1]);
  }
  return c;
}

// prefix[j] = integral of f over [0, thetas[j]] (Simpson per segment).
std::vector<double> prefix_integrals(const std::vector<double>& thetas,
                                     const SegCache& c) {
  std::vector<double> prefix(thetas.size());
  KahanAccumulator acc;
  prefix[0] = 0.0;
  for (std::size_t i = 0; i + 1 < thetas.size(); ++i) {
    const double h = thetas[i + 1] - thetas[i];
    acc.add(h / 6.0 * (c.f_lo[i] + 4.0 * c.f_mid[i] + c.f_hi[i]));
    prefix[i + 1] = acc.value();
  }
  return prefix;
}

double weighted_integral(const std::vector<double>& thetas, const SegCache& c,
                         const std::function<double(double)>& weight) {
  KahanAccumulator acc;
  for (std::size_t i = 0; i + 1 < thetas.size(); ++i) {
    const double lo = thetas[i], hi = thetas[i + 1];
    const double mid = 0.5 * (lo + hi);
    const double h = hi - lo;
    acc.add(h / 6.0 *
            (weight(lo) * c.f_lo[i] + 4.0 * weight(mid) * c.f_mid[i] +
             weight(hi) * c.f_hi[i]));
  }
  return acc.value();
}

// int_0^theta_j D(theta_j, l) f(l) dl for every sample index j.
std::vector<double> kernel_prefix(const ContinuousLpSpec& spec,
                                  const std::vector<double>& thetas,
                                  const SegCache& c,
                                  const std::vector<double>& prefix) {
  const std::size_t s = thetas.size();
  std::vector<double> out(s);
  if (spec.D_const.has_value()) {
    for (std::size_t j = 0; j < s; ++j) out[j] = *spec.D_const * prefix[j];
    return out;
  }
  for (std::size_t j = 0; j < s; ++j) {
    const double theta = thetas[j];
    KahanAccumulator acc;
    for (std::size_t i = 0; i + 1 <= j; ++i) {
      const double lo = thetas[i], hi = thetas[i + 1];
      const double mid = 0.5 * (lo + hi);
      const double h = hi - lo;
      acc.add(h / 6.0 *
              (spec.D(theta, lo) * c.f_lo[i] +
               4.0 * spec.D(theta, mid) * c.f_mid[i] +
               spec.D(theta, hi) * c.f_hi[i]));
    }
    out[j] = acc.value();
  }
  return out;
}

// int_theta_j^1 D(l, theta_j) f(l) dl for every sample index j.
std::vector<double> kernel_suffix(const ContinuousLpSpec& spec,
                                  const std::vector<double>& thetas,
                                  const SegCache& c,
                                  const std::vector<double>& prefix) {
  const std::size_t s = thetas.size();
  std::vector<double> out(s);
  if (spec.D_const.has_value()) {
    const double total = prefix.back();
    for (std::size_t j = 0; j < s; ++j)
      out[j] = *spec.D_const * (total - prefix[j]);
    return out;
  }
  for (std::size_t j = 0; j < s; ++j) {
    const double theta = thetas[j];
    KahanAccumulator acc;
    for (std::size_t i = j; i + 1 < s; ++i) {
      const double lo = thetas[i], hi = thetas[i + 1];
      const double mid = 0.5 * (lo + hi);
      const double h = hi - lo;
      acc.add(h / 6.0 *
              (spec.D(lo, theta) * c.f_lo[i] +
               4.0 * spec.D(mid, theta) * c.f_mid[i] +
               spec.D(hi, theta) * c.f_hi[i]));
    }
    out[j] = acc.value();
  }
  return out;
}

bool near_breakpoint(double theta, const std::vector<double>& breaks) {
  for (const double b : breaks)
    if (std::abs(theta - b) <= kBreakWindow) return true;
  return false;
}

struct FamilyTracker {
  FamilyResult r;
  explicit FamilyTracker(std::string name) { r.family = std::move(name); }
  void see(double violation, double theta) {
    if (violation > r.max_violation) {
      r.max_violation = violation;
      r.at_theta = theta;
    }
  }
  FamilyResult done(double tol) {
    r.pass = r.max_violation <= tol;
    return r;
  }
};

ConstraintReport finish(std::vector<FamilyResult> families, int grid,
                        double tol) {
  ConstraintReport rep;
  rep.families = std::move(families);
  rep.grid = grid;
  rep.tol = tol;
  for (const FamilyResult& f : rep.families) rep.pass = rep.pass && f.pass;
  return rep;
}

}  // namespace

const FamilyResult& ConstraintReport::family(const std::string& name) const {
  for (const FamilyResult& f : families)
    if (f.family == name) return f;
  throw std::out_of_range("ConstraintReport: no family " + name);
}

std::string ConstraintReport::csv() const {
  std::string out = "family,max_violation,at_theta,pass\n";
  char buf[160];
  for (const FamilyResult& f : families) {
    std::snprintf(buf, sizeof buf, "%s,%.7g,%.7g,%s\n", f.family.c_str(),
                  f.max_violation, f.at_theta, f.pass ? "pass" : "fail");
    out += buf;
  }
  return out;
}

ContinuousLpSpec lp_infinity_spec() {
  ContinuousLpSpec s;
  s.K = 1.0;
  s.L = 1.0;
  s.A = [](double) { return 1.0; };
  s.B = [](double t) { return 1.0 - t; };
  s.C = [](double) { return 1.0; };
  s.D = [](double, double) { return 2.0; };
  s.D_const = 2.0;
  s.F = [](double) { return 1.5; };
  return s;
}

ClosedFormSolution closed_form() {
  const double mu = (5.0 - std::sqrt(7.0)) / 3.0;
  const double span = 5.0 - 3.0 * mu;  // equals sqrt(7)

  PrimalFunction z(
      {0.0, mu, 1.0},
      {{[](double t) { return 1.0 - t; }, [](double) { return -1.0; }},
       {[mu](double) { return 1.0 - mu; }, [](double) { return 0.0; }}});

  const double wnum = 2.0 * (1.0 - mu) * (1.0 - mu) / span;
  PiecewiseFunction w(
      {0.0, mu, 1.0},
      {{[wnum](double t) { return wnum / std::pow(1.0 - t, 3.0); },
        [wnum](double t) { return 3.0 * wnum / std::pow(1.0 - t, 4.0); }},
       {[](double) { return 0.0; }, [](double) { return 0.0; }}});

  PiecewiseFunction y(
      {0.0, mu, 1.0},
      {{[](double) { return 0.0; }, [](double) { return 0.0; }},
       {[mu, span](double t) { return 2.0 * (t - mu) / span; },
        [span](double) { return 2.0 / span; }}});

  const double gamma = 2.0 * (1.0 - mu) / span;
  return {mu, std::move(z), {std::move(w), std::move(y), gamma}};
}

double lp_infinity_optimal_value() {
  return 2.0 * (5.0 - std::sqrt(7.0)) / 9.0;
}

PrimalFunction embed_step(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("embed_step: empty vector");
  if (std::abs(x[0] - 1.0) > 1e-12)
    throw std::invalid_argument("embed_step: first entry must be 1");
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (x[t] < -1e-12)
      throw std::invalid_argument("embed_step: negative entry at index " +
                                  std::to_string(t));
    if (t > 0 && x[t] > x[t - 1] + 1e-12)
      throw std::invalid_argument("embed_step: entries increase at index " +
                                  std::to_string(t));
  }
  return PiecewiseFunction::step({x.begin(), x.end()});
}

ConstraintReport check_primal_feasibility(const ContinuousLpSpec& spec,
                                          const PrimalFunction& z, int grid,
                                          double tol) {
  const std::vector<double> thetas = build_thetas(spec, {&z}, grid);
  const SegCache zc = cache_segments(thetas, z);
  const std::vector<double> prefix = prefix_integrals(thetas, zc);
  const std::vector<double> dz = kernel_prefix(spec, thetas, zc, prefix);
  const std::vector<double> zbreaks = z.interior_breakpoints();

  FamilyTracker initial("initial"), monotone("monotone"), row("row"),
      boundary("boundary"), nonneg("nonneg");

  initial.see(std::abs(zc.at[0] - spec.K), 0.0);
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    const double t = thetas[j];
    if (!near_breakpoint(t, zbreaks))
      monotone.see(z.derivative(t), t);
    row.see(spec.C(t) - spec.B(t) * zc.at[j] - dz[j], t);
    nonneg.see(-zc.at[j], t);
  }
  const double fz = weighted_integral(thetas, zc, spec.F);
  boundary.see(spec.L - zc.at.back() - fz, 1.0);

  return finish({initial.done(tol), monotone.done(tol), row.done(tol),
                 boundary.done(tol), nonneg.done(tol)},
                grid, tol);
}

ConstraintReport check_dual_feasibility(const ContinuousLpSpec& spec,
                                        const DualTriple& dual, int grid,
                                        double tol) {
  const std::vector<double> thetas = build_thetas(spec, {&dual.w, &dual.y}, grid);
  const SegCache wc = cache_segments(thetas, dual.w);
  const SegCache yc = cache_segments(thetas, dual.y);
  const std::vector<double> prefix = prefix_integrals(thetas, wc);
  const std::vector<double> dw = kernel_suffix(spec, thetas, wc, prefix);
  const std::vector<double> ybreaks = dual.y.interior_breakpoints();

  FamilyTracker row("row"), terminal("terminal"), nonneg("nonneg");
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    const double t = thetas[j];
    if (!near_breakpoint(t, ybreaks)) {
      const double lhs = spec.B(t) * wc.at[j] + dw[j] +
                         spec.F(t) * dual.gamma + dual.y.derivative(t);
      row.see(lhs - spec.A(t), t);
    }
    nonneg.see(-wc.at[j], t);
    nonneg.see(-yc.at[j], t);
  }
  nonneg.see(-dual.gamma, 0.0);
  terminal.see(dual.gamma - yc.at.back(), 1.0);

  return finish({row.done(tol), terminal.done(tol), nonneg.done(tol)}, grid,
                tol);
}

double primal_objective(const ContinuousLpSpec& spec, const PrimalFunction& z,
                        int grid) {
  const std::vector<double> thetas = build_thetas(spec, {&z}, grid);
  const SegCache zc = cache_segments(thetas, z);
  return weighted_integral(thetas, zc, spec.A);
}

double dual_objective(const ContinuousLpSpec& spec, const DualTriple& dual,
                      int grid) {
  const std::vector<double> thetas = build_thetas(spec, {&dual.w}, grid);
  const SegCache wc = cache_segments(thetas, dual.w);
  const double cw = weighted_integral(thetas, wc, spec.C);
  return cw + spec.L * dual.gamma - spec.K * dual.y(0.0);
}

double duality_gap(const ContinuousLpSpec& spec, const PrimalFunction& z,
                   const DualTriple& dual, int grid) {
  if (!check_primal_feasibility(spec, z, grid, 1e-7).pass)
    throw std::invalid_argument("duality_gap: primal side infeasible");
  if (!check_dual_feasibility(spec, dual, grid, 1e-7).pass)
    throw std::invalid_argument("duality_gap: dual side infeasible");
  return primal_objective(spec, z, grid) - dual_objective(spec, dual, grid);
}

ConstraintReport check_complementary_slackness(const ContinuousLpSpec& spec,
                                               const PrimalFunction& z,
                                               const DualTriple& dual,
                                               int grid, double tol) {
  const std::vector<double> thetas =
      build_thetas(spec, {&z, &dual.w, &dual.y}, grid);
  const SegCache zc = cache_segments(thetas, z);
  const SegCache wc = cache_segments(thetas, dual.w);
  const SegCache yc = cache_segments(thetas, dual.y);
  const std::vector<double> prefix_z = prefix_integrals(thetas, zc);
  const std::vector<double> prefix_w = prefix_integrals(thetas, wc);
  const std::vector<double> dz = kernel_prefix(spec, thetas, zc, prefix_z);
  const std::vector<double> dw = kernel_suffix(spec, thetas, wc, prefix_w);
  const std::vector<double> zbreaks = z.interior_breakpoints();
  const std::vector<double> ybreaks = dual.y.interior_breakpoints();

  FamilyTracker cs1("monotone_times_y"), cs2("row_slack_times_w"),
      cs3("boundary_slack_times_gamma"), cs4("dual_row_slack_times_z"),
      cs5("terminal_slack_times_z1");

  for (std::size_t j = 0; j < thetas.size(); ++j) {
    const double t = thetas[j];
    if (!near_breakpoint(t, zbreaks))
      cs1.see(std::abs(z.derivative(t) * yc.at[j]), t);
    const double row_slack = spec.B(t) * zc.at[j] + dz[j] - spec.C(t);
    cs2.see(std::abs(row_slack * wc.at[j]), t);
    if (!near_breakpoint(t, ybreaks)) {
      const double dual_slack = spec.B(t) * wc.at[j] + dw[j] +
                                spec.F(t) * dual.gamma +
                                dual.y.derivative(t) - spec.A(t);
      cs4.see(std::abs(dual_slack * zc.at[j]), t);
    }
  }
  const double fz = weighted_integral(thetas, zc, spec.F);
  cs3.see(std::abs((zc.at.back() + fz - spec.L) * dual.gamma), 1.0);
  cs5.see(std::abs((dual.gamma - yc.at.back()) * zc.at.back()), 1.0);

  return finish({cs1.done(tol), cs2.done(tol), cs3.done(tol), cs4.done(tol),
                 cs5.done(tol)},
                grid, tol);
}

}  // namespace rankmatch
