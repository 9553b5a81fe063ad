#pragma once

#include <vector>

#include "cyclespace/matrix.hpp"
#include "cyclespace/rational.hpp"

namespace cyclespace {

// Exact rational linear program: minimize objective . x subject to the row
// constraints, with x_j >= 0 unless marked free.
struct LpProblem {
  enum class Rel { Le, Ge, Eq };
  struct Row {
    Vec coeffs;
    Rel rel;
    Rational rhs;
  };

  Vec objective;
  std::vector<Row> rows;
  std::vector<bool> free_vars;  // empty = all nonnegative

  std::size_t var_count() const { return objective.size(); }
};

struct LpSolution {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational objective;
  Vec x;
  Vec row_duals;  // one multiplier per original row
};

// Two-phase primal simplex with Bland's rule; exact arithmetic makes
// degeneracy harmless and Bland guarantees termination.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace cyclespace
