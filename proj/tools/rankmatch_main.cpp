// rankmatch: probing experiments, exact verification, and LP analysis for
// greedy matching under a random node ranking.
//
// Subcommands: simulate, exact, verify, lp, continuous, hardness-table.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "rankmatch/continuous_lp.hpp"
#include "rankmatch/finite_lp.hpp"
#include "rankmatch/harness.hpp"
#include "rankmatch/kernels.hpp"
#include "rankmatch/verification.hpp"

namespace {

using namespace rankmatch;

void write_output(const std::optional<std::string>& path,
                  const std::string& content) {
  if (!path.has_value()) {
    std::cout << content;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + *path);
  out << content;
}

struct GraphSource {
  std::string graph_file;
  int block = 0;
  double eps = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", graph_file, "edge-list file (see README)");
    cmd->add_option("--n", block, "two-block family: block size");
    cmd->add_option("--eps", eps, "two-block family: eps (k = round(eps*n))");
  }

  std::pair<std::string, ParsedGraph> load() const {
    if (!graph_file.empty()) {
      std::ifstream in(graph_file, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open " + graph_file);
      std::stringstream buf;
      buf << in.rdbuf();
      return {graph_file, read_edge_list(buf.str())};
    }
    if (block > 0) {
      if (eps <= 0.0)
        throw CLI::ValidationError("--n requires --eps for the graph family");
      auto [g, m] = double_bomb(block, eps);
      ParsedGraph p{std::move(g), std::move(m)};
      return {"double_bomb(" + std::to_string(block) + "," +
                  format_sig7(eps) + ")",
              std::move(p)};
    }
    throw CLI::ValidationError("need --graph FILE or --n N --eps E");
  }
};

int cmd_simulate(const GraphSource& src, std::uint64_t samples,
                 std::uint64_t seed, int workers,
                 const std::optional<std::string>& out) {
  auto [name, parsed] = src.load();
  if (!parsed.matching.has_value())
    throw std::runtime_error(
        "simulate requires a graph with a declared perfect matching");
  const RatioEstimate est = monte_carlo_ratio(parsed.graph, *parsed.matching,
                                              samples, seed, workers);
  write_output(out, simulate_csv(name, parsed.graph.node_count(), est));
  return 0;
}

int cmd_exact(const GraphSource& src, int cap,
              const std::optional<std::string>& out) {
  auto [name, parsed] = src.load();
  const EventTables t = enumerate_event_tables(parsed.graph, cap);
  std::string text = "# rankmatch csv v1 command=exact source=" + name + "\n";
  text += "rank,matched,unmatched,marginal,x,alpha\n";
  for (int r = 1; r <= t.n; ++r) {
    text += std::to_string(r) + "," + std::to_string(t.matched_count[r]) +
            "," + std::to_string(t.unmatched_count[r]) + "," +
            std::to_string(t.marginal_count[r]) + "," +
            format_sig7(t.matched_probability(r).to_double()) + "," +
            format_sig7(t.marginal_probability(r).to_double()) + "\n";
  }
  const Rational ratio = t.performance_ratio();
  text += "exact_ratio," + ratio.str() + "," +
          format_sig7(ratio.to_double()) + ",,,\n";
  write_output(out, text);
  return 0;
}

int cmd_verify(int cap, const std::optional<std::string>& out) {
  const std::vector<CheckResult> results = run_full_verification(cap);
  std::string text;
  int failures = 0;
  for (const CheckResult& r : results) {
    failures += r.pass ? 0 : 1;
    text += std::string(r.pass ? "pass" : "FAIL") + " " + r.graph + " " +
            r.check + (r.detail.empty() ? "" : " (" + r.detail + ")") + "\n";
  }
  text += std::to_string(results.size() - failures) + "/" +
          std::to_string(results.size()) + " checks passed\n";
  write_output(out, text);
  return failures == 0 ? 0 : 1;
}

int cmd_lp(std::vector<int> sizes, const std::optional<std::string>& exp,
           const std::optional<std::string>& out) {
  if (sizes.empty()) throw CLI::ValidationError("lp: need --n or --ns");
  if (exp.has_value()) {
    if (sizes.size() != 1)
      throw CLI::ValidationError("--export needs a single --n");
    write_output(exp, to_lp_format(build_ranking_lp(sizes.front())));
  }
  const double bound = continuous_lower_bound();
  const std::vector<LpSeriesEntry> series = lp_value_series(sizes);
  std::string text = "n,value,running_min,bound_ok\n";
  bool all_ok = true;
  for (const LpSeriesEntry& e : series) {
    const bool ok = e.value >= bound - 1e-7;
    all_ok = all_ok && ok;
    text += std::to_string(e.n) + "," + format_sig7(e.value) + "," +
            format_sig7(e.running_min) + "," + (ok ? "pass" : "fail") + "\n";
    std::cout << "n " << e.n << " optimal " << format_sig7(e.value)
              << " lower_bound " << format_sig7(bound) << " "
              << (ok ? "pass" : "FAIL") << "\n";
  }
  if (out.has_value()) write_output(out, text);
  return all_ok ? 0 : 1;
}

int cmd_continuous(int grid, double tol, const std::optional<std::string>& out) {
  const ContinuousLpSpec spec = lp_infinity_spec();
  const ClosedFormSolution sol = closed_form();

  const ConstraintReport primal =
      check_primal_feasibility(spec, sol.z, grid, tol);
  const ConstraintReport dual = check_dual_feasibility(spec, sol.dual, grid, tol);
  const ConstraintReport cs =
      check_complementary_slackness(spec, sol.z, sol.dual, grid, tol);
  const double gap = duality_gap(spec, sol.z, sol.dual, grid);
  const double value = primal_objective(spec, sol.z, grid);

  auto max_of = [](const ConstraintReport& r) {
    double m = 0.0;
    for (const FamilyResult& f : r.families)
      m = std::max(m, f.max_violation);
    return m;
  };

  const bool pass = primal.pass && dual.pass && cs.pass && std::abs(gap) <= tol;
  std::cout << "mu " << format_sig7(sol.mu) << "\n"
            << "optimal_value " << format_sig7(lp_infinity_optimal_value())
            << "\n"
            << "quadrature_value " << format_sig7(value) << "\n"
            << "duality_gap " << format_sig7(gap) << "\n"
            << "primal_feasibility " << (primal.pass ? "pass" : "FAIL")
            << " max_violation " << format_sig7(max_of(primal)) << "\n"
            << "dual_feasibility " << (dual.pass ? "pass" : "FAIL")
            << " max_violation " << format_sig7(max_of(dual)) << "\n"
            << "complementary_slackness " << (cs.pass ? "pass" : "FAIL")
            << " max_product " << format_sig7(max_of(cs)) << "\n"
            << "overall " << (pass ? "pass" : "FAIL") << "\n";

  if (out.has_value()) {
    std::string csv = "section,family,max_violation,at_theta,pass\n";
    auto append = [&csv](const std::string& section,
                         const ConstraintReport& r) {
      for (const FamilyResult& f : r.families)
        csv += section + "," + f.family + "," + format_sig7(f.max_violation) +
               "," + format_sig7(f.at_theta) + "," +
               (f.pass ? "pass" : "fail") + "\n";
    };
    append("primal", primal);
    append("dual", dual);
    append("slackness", cs);
    csv += "gap,duality_gap," + format_sig7(gap) + ",," +
           (std::abs(gap) <= tol ? "pass" : "fail") + "\n";
    write_output(out, csv);
  }
  return pass ? 0 : 1;
}

int cmd_hardness(double eps, std::vector<int> blocks, std::uint64_t samples,
                 std::uint64_t seed, int workers,
                 const std::optional<std::string>& out) {
  const std::vector<HardnessRow> rows =
      hardness_table(eps, blocks, samples, seed, workers);
  write_output(out, hardness_table_csv(eps, samples, seed, rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Greedy matching with a random node ranking: simulation, exhaustive "
      "verification, and LP analysis"};
  app.require_subcommand(1);

  std::optional<std::string> out;
  std::uint64_t samples = 10000, seed = 1;
  int workers = default_workers();
  int cap = kDefaultEnumerationCap;
  int grid = 10000;
  double tol = 1e-9;
  double eps = 0.63;

  GraphSource sim_src;
  auto* simulate =
      app.add_subcommand("simulate", "Monte Carlo matched-node fraction");
  sim_src.attach(simulate);
  simulate->add_option("--samples", samples, "sample count");
  simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--workers", workers, "worker threads");
  simulate->add_option("--out", out, "write CSV here instead of stdout");

  GraphSource exact_src;
  auto* exact = app.add_subcommand(
      "exact", "exact event tables over all permutations");
  exact_src.attach(exact);
  exact->add_option("--cap", cap, "enumeration cap (node count)");
  exact->add_option("--out", out, "write CSV here instead of stdout");

  auto* verify = app.add_subcommand(
      "verify", "exhaustive identity and relation checks over the corpus");
  verify->add_option("--cap", cap, "enumeration cap (node count)");
  verify->add_option("--out", out, "write report here instead of stdout");

  std::vector<int> lp_sizes;
  int lp_single = 0;
  std::optional<std::string> lp_export;
  auto* lp = app.add_subcommand("lp", "solve the finite LP family");
  lp->add_option("--n", lp_single, "single size");
  lp->add_option("--ns", lp_sizes, "comma-separated size list")
      ->delimiter(',');
  lp->add_option("--export", lp_export, "write LP-format model (single --n)");
  lp->add_option("--out", out, "write CSV here");

  auto* continuous = app.add_subcommand(
      "continuous", "verify the closed-form continuous optimum");
  continuous->add_option("--grid", grid, "sample grid");
  continuous->add_option("--tol", tol, "tolerance");
  continuous->add_option("--out", out, "write family CSV here");

  std::vector<int> blocks = {20, 50, 100, 200, 500};
  auto* hardness = app.add_subcommand(
      "hardness-table", "Monte Carlo table for the two-block family");
  hardness->add_option("--eps", eps, "family eps");
  hardness->add_option("--ns", blocks, "comma-separated block sizes")
      ->delimiter(',');
  hardness->add_option("--samples", samples, "samples per block size");
  hardness->add_option("--seed", seed, "RNG seed");
  hardness->add_option("--workers", workers, "worker threads");
  hardness->add_option("--out", out, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
    if (simulate->parsed())
      return cmd_simulate(sim_src, samples, seed, workers, out);
    if (exact->parsed()) return cmd_exact(exact_src, cap, out);
    if (verify->parsed()) return cmd_verify(cap, out);
    if (lp->parsed()) {
      if (lp_single > 0) lp_sizes.insert(lp_sizes.begin(), lp_single);
      return cmd_lp(lp_sizes, lp_export, out);
    }
    if (continuous->parsed()) return cmd_continuous(grid, tol, out);
    if (hardness->parsed())
      return cmd_hardness(eps, blocks, samples, seed, workers, out);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
