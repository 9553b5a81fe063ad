#include "cyclespace/simplex.hpp"

#include <cstddef>

#include "cyclespace/errors.hpp"

namespace cyclespace {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Standard-form tableau: A z = b, z >= 0, b >= 0, with the last columns being
// the artificial variables (one per row, initial basis).
struct Tableau {
  std::size_t m, n;          // rows, structural columns (incl. slacks)
  std::vector<Vec> a;        // m rows of length n + m (artificials appended)
  Vec b;                     // length m
  std::vector<std::size_t> basis;  // column index per row
  std::vector<bool> active_row;

  std::size_t total_cols() const { return n + m; }

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = 1 / a[row][col];
    for (std::size_t j = 0; j < total_cols(); ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < total_cols(); ++j)
        a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    basis[row] = col;
  }
};

// Runs primal simplex on the tableau for costs `cost` (length n + m),
// considering only columns < col_limit for entering. Returns false if
// unbounded. reduced/duals returned through out-params.
bool run_simplex(Tableau& t, const Vec& cost, std::size_t col_limit) {
  for (;;) {
    // reduced costs: c_j - c_B B^{-1} A_j ; with the tableau kept in
    // basis-reduced form, c_B B^{-1} A_j = sum_i c_basis[i] * a[i][j]
    std::size_t entering = npos;
    for (std::size_t j = 0; j < col_limit && entering == npos; ++j) {
      bool basic = false;
      for (std::size_t i = 0; i < t.m; ++i)
        if (t.active_row[i] && t.basis[i] == j) basic = true;
      if (basic) continue;
      Rational rc = cost[j];
      for (std::size_t i = 0; i < t.m; ++i)
        if (t.active_row[i] && t.a[i][j] != 0) rc -= cost[t.basis[i]] * t.a[i][j];
      if (rc < 0) entering = j;  // Bland: first improving index
    }
    if (entering == npos) return true;
    std::size_t leaving = npos;
    Rational best_ratio;
    for (std::size_t i = 0; i < t.m; ++i) {
      if (!t.active_row[i] || t.a[i][entering] <= 0) continue;
      Rational ratio = t.b[i] / t.a[i][entering];
      if (leaving == npos || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == npos) return false;  // unbounded
    t.pivot(leaving, entering);
  }
}

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  const std::size_t user_vars = problem.var_count();
  std::vector<bool> free_vars = problem.free_vars;
  free_vars.resize(user_vars, false);

  // Column layout: for each user variable, one column (nonnegative) or two
  // (free, split into x+ - x-); then one slack/surplus per inequality row.
  std::vector<std::size_t> var_col(user_vars);
  std::size_t n = 0;
  for (std::size_t j = 0; j < user_vars; ++j) {
    var_col[j] = n;
    n += free_vars[j] ? 2 : 1;
  }
  std::size_t slack_base = n;
  for (const auto& row : problem.rows)
    if (row.rel != LpProblem::Rel::Eq) ++n;

  const std::size_t m = problem.rows.size();
  Tableau t;
  t.m = m;
  t.n = n;
  t.a.assign(m, Vec(n + m));
  t.b.assign(m, Rational(0));
  t.basis.resize(m);
  t.active_row.assign(m, true);
  std::vector<int> row_sign(m, 1);

  std::size_t slack = slack_base;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = problem.rows[i];
    if (row.coeffs.size() != user_vars)
      fail(ErrorCode::BadInput, "constraint length mismatch");
    for (std::size_t j = 0; j < user_vars; ++j) {
      t.a[i][var_col[j]] = row.coeffs[j];
      if (free_vars[j]) t.a[i][var_col[j] + 1] = -row.coeffs[j];
    }
    if (row.rel == LpProblem::Rel::Le)
      t.a[i][slack++] = 1;
    else if (row.rel == LpProblem::Rel::Ge)
      t.a[i][slack++] = -1;
    t.b[i] = row.rhs;
    if (t.b[i] < 0) {
      row_sign[i] = -1;
      t.b[i] = -t.b[i];
      for (std::size_t j = 0; j < n; ++j) t.a[i][j] = -t.a[i][j];
    }
    t.a[i][n + i] = 1;  // artificial
    t.basis[i] = n + i;
  }

  LpSolution sol;

  // Phase 1: minimize the sum of artificials.
  Vec phase1_cost(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1_cost[n + i] = 1;
  run_simplex(t, phase1_cost, n + m);  // never unbounded (cost >= 0)
  Rational infeas = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] >= n) infeas += t.b[i];
  if (infeas != 0) {
    sol.status = LpSolution::Status::Infeasible;
    return sol;
  }
  // Drive artificials out of the basis; a row with no structural pivot left
  // is redundant and gets deactivated.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < n) continue;
    std::size_t col = npos;
    for (std::size_t j = 0; j < n && col == npos; ++j)
      if (t.a[i][j] != 0) col = j;
    if (col == npos)
      t.active_row[i] = false;
    else
      t.pivot(i, col);
  }

  // Phase 2 over structural columns only.
  Vec cost(n + m);
  for (std::size_t j = 0; j < user_vars; ++j) {
    cost[var_col[j]] = problem.objective[j];
    if (free_vars[j]) cost[var_col[j] + 1] = -problem.objective[j];
  }
  if (!run_simplex(t, cost, n)) {
    sol.status = LpSolution::Status::Unbounded;
    return sol;
  }

  sol.status = LpSolution::Status::Optimal;
  sol.x.assign(user_vars, Rational(0));
  Vec z(n + m);
  for (std::size_t i = 0; i < m; ++i)
    if (t.active_row[i]) z[t.basis[i]] = t.b[i];
  for (std::size_t j = 0; j < user_vars; ++j) {
    sol.x[j] = z[var_col[j]];
    if (free_vars[j]) sol.x[j] -= z[var_col[j] + 1];
  }
  sol.objective = dot(sol.x, problem.objective);
  // duals: y_i = c_B B^{-1} e_i read off the artificial column of row i
  sol.row_duals.assign(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    Rational y = 0;
    for (std::size_t k = 0; k < m; ++k)
      if (t.active_row[k] && t.a[k][n + i] != 0)
        y += cost[t.basis[k]] * t.a[k][n + i];
    sol.row_duals[i] = row_sign[i] > 0 ? y : -y;
  }
  return sol;
}

}  // namespace cyclespace
