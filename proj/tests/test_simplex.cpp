#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankmatch/simplex.hpp"

using namespace rankmatch;

namespace {

LpModel make(int vars, std::vector<double> obj,
             std::vector<std::tuple<std::vector<double>, Relation, double>> rows) {
  LpModel m;
  m.var_count = vars;
  m.objective = std::move(obj);
  m.var_names.resize(vars);
  for (int j = 0; j < vars; ++j) m.var_names[j] = "x" + std::to_string(j + 1);
  for (auto& [c, rel, b] : rows) m.rows.push_back({std::move(c), rel, b, ""});
  return m;
}

}  // namespace

TEST_CASE("textbook minimum") {
  // min x + y s.t. x + 2y >= 4, 3x + y >= 6 -> optimum at (8/5, 6/5).
  const LpModel m = make(2, {1, 1},
                         {{{1, 2}, Relation::Ge, 4}, {{3, 1}, Relation::Ge, 6}});
  const LpSolution s = solve_simplex(m);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == doctest::Approx(2.8).epsilon(1e-10));
  CHECK(s.x[0] == doctest::Approx(1.6).epsilon(1e-9));
  CHECK(s.x[1] == doctest::Approx(1.2).epsilon(1e-9));
  CHECK(s.max_primal_residual <= 1e-9);
  CHECK(s.strong_duality_gap <= 1e-8);
  CHECK(s.max_dual_residual <= 1e-8);
}

TEST_CASE("equalities and upper-bound rows") {
  // min 2x + 3y + z s.t. x + y + z = 5, y <= 2, z >= 1; z is cheapest and
  // uncapped, so the optimum fills the equality with z alone.
  const LpModel m = make(3, {2, 3, 1},
                         {{{1, 1, 1}, Relation::Eq, 5},
                          {{0, 1, 0}, Relation::Le, 2},
                          {{0, 0, 1}, Relation::Ge, 1}});
  const LpSolution s = solve_simplex(m);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(s.x[2] == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("infeasible program detected") {
  const LpModel m = make(1, {1},
                         {{{1}, Relation::Ge, 3}, {{1}, Relation::Le, 1}});
  CHECK(solve_simplex(m).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded program detected") {
  const LpModel m = make(2, {-1, 0}, {{{1, -1}, Relation::Le, 1}});
  CHECK(solve_simplex(m).status == LpStatus::Unbounded);
}

TEST_CASE("degenerate rows do not cycle") {
  // Several redundant zero-rhs constraints around the same vertex.
  const LpModel m = make(2, {1, 2},
                         {{{1, -1}, Relation::Ge, 0},
                          {{2, -2}, Relation::Ge, 0},
                          {{1, 1}, Relation::Ge, 2},
                          {{-1, 1}, Relation::Ge, 0}});
  const LpSolution s = solve_simplex(m);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == doctest::Approx(3.0).epsilon(1e-9));  // x = y = 1
  CHECK(s.max_primal_residual <= 1e-9);
}

TEST_CASE("duals certify optimality") {
  const LpModel m = make(2, {3, 5},
                         {{{1, 0}, Relation::Ge, 1},
                          {{0, 1}, Relation::Ge, 1},
                          {{1, 1}, Relation::Ge, 3}});
  const LpSolution s = solve_simplex(m);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == doctest::Approx(11.0).epsilon(1e-9));  // x=(2,1)
  CHECK(s.strong_duality_gap <= 1e-8);
  for (const double y : s.duals) CHECK(y >= -1e-9);
}
