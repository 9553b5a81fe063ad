#include <doctest.h>

#include <random>

#include "cyclespace/simplex.hpp"

using namespace cyclespace;

namespace {

LpProblem::Row row(Vec coeffs, LpProblem::Rel rel, Rational rhs) {
  return {std::move(coeffs), rel, std::move(rhs)};
}

}  // namespace

TEST_CASE("basic two-variable maximization") {
  // min -x - y st x + 2y <= 4, 3x + y <= 6 -> optimum at (8/5, 6/5)
  LpProblem lp;
  lp.objective = {rat(-1), rat(-1)};
  lp.rows.push_back(row({rat(1), rat(2)}, LpProblem::Rel::Le, rat(4)));
  lp.rows.push_back(row({rat(3), rat(1)}, LpProblem::Rel::Le, rat(6)));
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpSolution::Status::Optimal);
  CHECK(s.objective == rat(-14, 5));
  CHECK(s.x == Vec{rat(8, 5), rat(6, 5)});
}

TEST_CASE("equality constraints and free variables") {
  // min |x| written as x = x+ - x- is handled by the caller; here check a
  // free variable reaching a negative optimum: min y st y >= -3, y free
  LpProblem lp;
  lp.objective = {rat(1)};
  lp.free_vars = {true};
  lp.rows.push_back(row({rat(1)}, LpProblem::Rel::Ge, rat(-3)));
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpSolution::Status::Optimal);
  CHECK(s.x == Vec{rat(-3)});
}

TEST_CASE("infeasible and unbounded detection") {
  LpProblem infeasible;
  infeasible.objective = {rat(1)};
  infeasible.rows.push_back(row({rat(1)}, LpProblem::Rel::Le, rat(1)));
  infeasible.rows.push_back(row({rat(1)}, LpProblem::Rel::Ge, rat(2)));
  CHECK(solve_lp(infeasible).status == LpSolution::Status::Infeasible);

  LpProblem unbounded;
  unbounded.objective = {rat(-1)};
  unbounded.rows.push_back(row({rat(-1)}, LpProblem::Rel::Le, rat(0)));
  CHECK(solve_lp(unbounded).status == LpSolution::Status::Unbounded);
}

TEST_CASE("degenerate problem terminates with Bland's rule") {
  // classic cycling example (Beale); exact pivoting with Bland terminates
  LpProblem lp;
  lp.objective = {rat(-3, 4), rat(150), rat(-1, 50), rat(6)};
  lp.rows.push_back(row({rat(1, 4), rat(-60), rat(-1, 25), rat(9)},
                        LpProblem::Rel::Le, rat(0)));
  lp.rows.push_back(row({rat(1, 2), rat(-90), rat(-1, 50), rat(3)},
                        LpProblem::Rel::Le, rat(0)));
  lp.rows.push_back(row({rat(0), rat(0), rat(1), rat(0)},
                        LpProblem::Rel::Le, rat(1)));
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpSolution::Status::Optimal);
  CHECK(s.objective == rat(-1, 20));
}

TEST_CASE("redundant equality rows are tolerated") {
  LpProblem lp;
  lp.objective = {rat(1), rat(1)};
  lp.rows.push_back(row({rat(1), rat(1)}, LpProblem::Rel::Eq, rat(2)));
  lp.rows.push_back(row({rat(2), rat(2)}, LpProblem::Rel::Eq, rat(4)));
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpSolution::Status::Optimal);
  CHECK(s.objective == rat(2));
}

TEST_CASE("duals certify optimality on random feasible problems") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> pos(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    // min c x st A x >= b, x >= 0 with c > 0 (always bounded, feasible for
    // b <= 0 rows mixed with satisfiable ones)
    std::size_t n = 3, m = 3;
    LpProblem lp;
    lp.objective.assign(n, Rational(0));
    for (auto& c : lp.objective) c = rat(pos(rng));
    std::vector<Vec> a(m, Vec(n));
    Vec b(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (auto& v : a[i]) v = rat(coeff(rng));
      b[i] = rat(coeff(rng));
      lp.rows.push_back(row(a[i], LpProblem::Rel::Ge, b[i]));
    }
    LpSolution s = solve_lp(lp);
    if (s.status != LpSolution::Status::Optimal) continue;
    // weak duality: y >= 0, y A <= c, y b == objective at optimum
    Rational yb = 0;
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(s.row_duals[i] >= 0);
      yb += s.row_duals[i] * b[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
      Rational ya = 0;
      for (std::size_t i = 0; i < m; ++i) ya += s.row_duals[i] * a[i][j];
      CHECK(ya <= lp.objective[j]);
    }
    CHECK(yb == s.objective);
  }
}
