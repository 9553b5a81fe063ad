#include "cyclespace/transport.hpp"

#include "cyclespace/errors.hpp"
#include "cyclespace/simplex.hpp"

namespace cyclespace {

namespace {

void check_balanced(const TransportationProblem& f, const OrientedGraph& g) {
  if (f.values.size() != g.vertex_count())
    fail(ErrorCode::BadInput, "problem size does not match vertex count");
  Rational sum = 0;
  for (const Rational& v : f.values) sum += v;
  if (sum != 0)
    fail(ErrorCode::UnbalancedProblem, "supply and demand do not balance");
}

}  // namespace

TransportationProblem TransportationProblem::point_difference(
    std::size_t u, std::size_t v, std::size_t vertex_count) {
  TransportationProblem f;
  f.values.assign(vertex_count, Rational(0));
  f.values[u] += 1;
  f.values[v] -= 1;
  return f;
}

TransportPlan tc_norm(const TransportationProblem& f, const OrientedGraph& g) {
  check_balanced(f, g);
  TransportPlan plan;
  plan.flow.assign(g.edge_count(), Rational(0));
  plan.cost = 0;
  if (is_zero(f.values)) return plan;

  // min sum_e w(e)(F+ + F-) subject to D(F+ - F-) = f, F+- >= 0.
  const std::size_t ne = g.edge_count();
  LpProblem lp;
  lp.objective.assign(2 * ne, Rational(0));
  for (std::size_t e = 0; e < ne; ++e)
    lp.objective[e] = lp.objective[ne + e] = g.edge(e).weight;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    LpProblem::Row row;
    row.coeffs.assign(2 * ne, Rational(0));
    for (std::size_t e : g.incident_edges(v)) {
      Rational sign = g.edge(e).head == v ? 1 : -1;
      row.coeffs[e] = sign;
      row.coeffs[ne + e] = -sign;
    }
    row.rel = LpProblem::Rel::Eq;
    row.rhs = f.values[v];
    lp.rows.push_back(std::move(row));
  }

  LpSolution sol = solve_lp(lp);
  if (sol.status != LpSolution::Status::Optimal)
    fail(ErrorCode::BadInput, "flow system is infeasible");
  for (std::size_t e = 0; e < ne; ++e)
    plan.flow[e] = sol.x[e] - sol.x[ne + e];
  plan.cost = sol.objective;
  return plan;
}

Rational wasserstein1(const Vec& mu, const Vec& nu, const OrientedGraph& g) {
  if (mu.size() != g.vertex_count() || nu.size() != g.vertex_count())
    fail(ErrorCode::BadInput, "measure size does not match vertex count");
  for (const Vec* m : {&mu, &nu}) {
    Rational sum = 0;
    for (const Rational& p : *m) {
      if (p < 0) fail(ErrorCode::NotProbability, "negative mass");
      sum += p;
    }
    if (sum != 1) fail(ErrorCode::NotProbability, "total mass is not 1");
  }
  TransportationProblem f;
  f.values = sub(mu, nu);
  return tc_norm(f, g).cost;
}

LipschitzWitness dual_certificate(const TransportationProblem& f,
                                  const OrientedGraph& g) {
  check_balanced(f, g);
  const std::size_t nv = g.vertex_count();
  LipschitzWitness w;
  w.potentials.assign(nv, Rational(0));
  if (is_zero(f.values)) return w;

  // max <f, y> over |y(head) - y(tail)| <= w(e), solved as a minimization
  // of -<f, y> with free y.
  LpProblem lp;
  lp.objective.assign(nv, Rational(0));
  for (std::size_t v = 0; v < nv; ++v) lp.objective[v] = -f.values[v];
  lp.free_vars.assign(nv, true);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    for (int sgn : {1, -1}) {
      LpProblem::Row row;
      row.coeffs.assign(nv, Rational(0));
      row.coeffs[ed.head] += Rational(sgn);
      row.coeffs[ed.tail] -= Rational(sgn);
      row.rel = LpProblem::Rel::Le;
      row.rhs = ed.weight;
      lp.rows.push_back(std::move(row));
    }
  }
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpSolution::Status::Optimal)
    fail(ErrorCode::BadInput, "dual LP did not solve");
  for (std::size_t v = 0; v < nv; ++v)
    w.potentials[v] = sol.x[v] - sol.x[0];
  return w;
}

ProjectionBounds bounds_from_projection(const OrientedGraph& g,
                                        const Rational& p_min_norm,
                                        const Rational& i_minus_p_min_norm,
                                        std::optional<std::size_t> cube_n) {
  ProjectionBounds b;
  b.c1_tc_upper = i_minus_p_min_norm;
  b.c1_wasserstein_upper = i_minus_p_min_norm;
  b.lambda_lower = p_min_norm - 1;
  b.bm_lower = p_min_norm - 1;
  b.bm_dimension = g.vertex_count() - 1;
  if (cube_n) {
    b.has_bm_upper = true;
    b.bm_upper = Rational(2 * static_cast<unsigned long>(*cube_n));
  }
  return b;
}

}  // namespace cyclespace
