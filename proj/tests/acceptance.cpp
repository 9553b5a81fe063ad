// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "cyclespace/cube.hpp"
#include "cyclespace/graph.hpp"
#include "cyclespace/invariant.hpp"
#include "cyclespace/matrix.hpp"
#include "cyclespace/simplex.hpp"
#include "cyclespace/symmetry.hpp"
#include "cyclespace/transport.hpp"

using namespace cyclespace;

namespace {

OrientedGraph c4() { return build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

bool torus_orth_table() {
  const Rational orth[] = {rat(1), rat(19, 9), rat(41, 16), rat(69, 25)};
  const Rational comp[] = {rat(3, 2), rat(2), rat(5, 2), rat(68, 25)};
  for (std::size_t n = 2; n <= 5; ++n) {
    OrientedGraph g = torus_graph(n, 2);
    RatMatrix p = orth_project_onto_span(cycle_basis(g));
    if (l1_operator_norm(p) != orth[n - 2]) return false;
    RatMatrix i_minus = RatMatrix::identity(g.edge_count()) - p;
    if (l1_operator_norm(i_minus) != comp[n - 2]) return false;
  }
  return true;
}

bool torus6_minimum() {
  OrientedGraph g = torus_graph(6, 2);
  GroupSpec group = torus_generators(6);
  ProjectionFamily family = commutant_family(g, group);
  if (family.dimension() != 3) return false;
  if (l1_operator_norm(family.p_orth) != rat(3839, 1260)) return false;
  RatMatrix id = RatMatrix::identity(g.edge_count());
  if (l1_operator_norm(id - family.p_orth) != rat(317, 105)) return false;
  MinimizeResult min = minimize_l1(family, g, group);
  if (min.norm != rat(109, 36)) return false;
  if (l1_operator_norm(id - min.p_min) != rat(3)) return false;
  return true;
}

bool commutant_dims() {
  const std::size_t expected[] = {0, 0, 1, 3, 3};
  for (std::size_t n = 3; n <= 7; ++n) {
    OrientedGraph g = torus_graph(n, 2);
    GroupSpec group = torus_generators(n);
    std::size_t dim = commutant_dimension(g, group);
    if (dim != expected[n - 3]) return false;
    if (n >= 5) {
      // independent construction: explicit rotation-invariant cycle vectors
      auto basis = torus_invariant_basis(n);
      if (basis.size() != dim) return false;
      if (span_rank(basis) != dim) return false;
      // the A(X(0)) seeds of the solved family live in the same span
      ProjectionFamily family = commutant_family(g, group);
      std::vector<Vec> joint = basis;
      Vec x0 = cut_vector(g, 0);
      for (const auto& m : family.basis) joint.push_back(m.apply(x0));
      if (span_rank(joint) != dim) return false;
    }
  }
  return true;
}

bool hamming_uniqueness() {
  const std::pair<std::size_t, std::size_t> zero_cases[] = {
      {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};
  for (auto [n, m] : zero_cases)
    if (commutant_dimension(hamming_graph(n, m), hamming_generators(n, m)) != 0)
      return false;
  if (commutant_dimension(torus_graph(4, 2), torus_generators(4)) != 0)
    return false;
  if (commutant_dimension(torus_graph(5, 2), torus_generators(5)) < 1)
    return false;
  if (commutant_dimension(torus_graph(5, 3), torus_generators(5, 3)) < 1)
    return false;
  return true;
}

bool cube_norms() {
  for (std::size_t n = 3; n <= 16; ++n)
    if (q_norm(n) != rat(static_cast<long>(n) + 1, 2)) return false;
  for (std::size_t n = 3; n <= 6; ++n)
    if (!cube_cross_check(n)) return false;  // includes the dense p_norm match
  return true;
}

bool norm_identity() {
  for (std::size_t n = 3; n <= 6; ++n) {
    OrientedGraph g = torus_graph(n, 2);
    GroupSpec group = torus_generators(n);
    ProjectionFamily family = commutant_family(g, group);
    MinimizeResult min = minimize_l1(family, g, group);
    RatMatrix id = RatMatrix::identity(g.edge_count());
    Rational shift = rat(1, static_cast<long>(n * n));
    for (const RatMatrix* p : {&family.p_orth, &min.p_min})
      if (l1_operator_norm(id - *p) != l1_operator_norm(*p) - shift)
        return false;
  }
  for (std::size_t n = 3; n <= 16; ++n)
    if (q_norm(n) != rat(static_cast<long>(n) + 1, 2)) return false;
  return true;
}

Rational quotient_norm_oracle(const TransportationProblem& f,
                              const OrientedGraph& g) {
  Vec x0;
  if (!solve(incidence_matrix(g), f.values, x0)) return rat(-1);
  auto cycles = cycle_basis(g);
  const std::size_t ne = g.edge_count(), nz = cycles.size();
  LpProblem lp;
  lp.objective.assign(nz + ne, Rational(0));
  for (std::size_t e = 0; e < ne; ++e) lp.objective[nz + e] = g.edge(e).weight;
  lp.free_vars.assign(nz + ne, false);
  for (std::size_t i = 0; i < nz; ++i) lp.free_vars[i] = true;
  for (std::size_t e = 0; e < ne; ++e)
    for (int sgn : {1, -1}) {
      LpProblem::Row row;
      row.coeffs.assign(nz + ne, Rational(0));
      for (std::size_t i = 0; i < nz; ++i)
        row.coeffs[i] = Rational(sgn) * cycles[i][e];
      row.coeffs[nz + e] = -1;
      row.rel = LpProblem::Rel::Le;
      row.rhs = Rational(-sgn) * x0[e];
      lp.rows.push_back(std::move(row));
    }
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpSolution::Status::Optimal) return rat(-1);
  return sol.objective;
}

bool transport_graph(const OrientedGraph& g, std::mt19937& rng, int instances) {
  RatMatrix dist = all_pairs_distances(g);
  std::uniform_int_distribution<std::size_t> vert(0, g.vertex_count() - 1);
  std::uniform_int_distribution<int> num(-4, 4);
  for (int trial = 0; trial < instances; ++trial) {
    // point differences recover the path metric
    std::size_t u = vert(rng), v = vert(rng);
    auto pd = TransportationProblem::point_difference(u, v, g.vertex_count());
    if (tc_norm(pd, g).cost != dist.at(u, v)) return false;
    // random balanced instance
    TransportationProblem f;
    f.values.assign(g.vertex_count(), Rational(0));
    Rational sum = 0;
    for (std::size_t w = 1; w < g.vertex_count(); ++w) {
      f.values[w] = rat(num(rng), 2);
      sum += f.values[w];
    }
    f.values[0] = -sum;
    TransportPlan plan = tc_norm(f, g);
    if (incidence_matrix(g).apply(plan.flow) != f.values) return false;
    if (plan.cost != quotient_norm_oracle(f, g)) return false;
    LipschitzWitness wit = dual_certificate(f, g);
    for (const Edge& e : g.edges())
      if (abs(wit.potentials[e.head] - wit.potentials[e.tail]) > e.weight)
        return false;
    if (dot(f.values, wit.potentials) != plan.cost) return false;
    // triangle inequality against a second instance
    TransportationProblem f2;
    f2.values.assign(g.vertex_count(), Rational(0));
    Rational sum2 = 0;
    for (std::size_t w = 1; w < g.vertex_count(); ++w) {
      f2.values[w] = rat(num(rng), 3);
      sum2 += f2.values[w];
    }
    f2.values[0] = -sum2;
    TransportationProblem both{add(f.values, f2.values)};
    if (tc_norm(both, g).cost > plan.cost + tc_norm(f2, g).cost) return false;
  }
  return true;
}

OrientedGraph random_metric_graph(std::mt19937& rng) {
  // path metric of a random weighted connected graph on 6 points, then the
  // canonical graph of that metric
  std::uniform_int_distribution<int> weight(1, 9);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < 6; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    edges.push_back({parent(rng), v, rat(weight(rng))});
  }
  for (std::size_t u = 0; u < 6; ++u)
    for (std::size_t v = u + 1; v < 6; ++v) {
      bool present = false;
      for (const Edge& e : edges)
        if ((e.tail == u && e.head == v) || (e.tail == v && e.head == u))
          present = true;
      if (!present && rng() % 2 == 0) edges.push_back({u, v, rat(weight(rng))});
    }
  OrientedGraph g = build_graph(6, edges);
  return canonical_graph(MetricSpace(all_pairs_distances(g)));
}

bool transport_properties() {
  std::mt19937 rng(2026);
  if (!transport_graph(c4(), rng, 200)) return false;
  if (!transport_graph(torus_graph(3, 2), rng, 200)) return false;
  if (!transport_graph(torus_graph(4, 2), rng, 200)) return false;
  if (!transport_graph(hamming_graph(2, 3), rng, 200)) return false;
  for (int i = 0; i < 10; ++i)
    if (!transport_graph(random_metric_graph(rng), rng, 20)) return false;
  return true;
}

RatMatrix random_cycle_projection(const OrientedGraph& g, std::mt19937& rng) {
  std::vector<Vec> zb = cycle_basis(g), bb = cut_basis(g);
  RatMatrix z = RatMatrix::from_columns(zb);
  RatMatrix b = RatMatrix::from_columns(bb);
  std::uniform_int_distribution<int> num(-2, 2);
  RatMatrix shear(bb.size(), zb.size());
  for (std::size_t i = 0; i < shear.rows(); ++i)
    for (std::size_t j = 0; j < shear.cols(); ++j)
      shear.at(i, j) = rat(num(rng), 3);
  RatMatrix m = z + b * shear;
  RatMatrix mt = m.transpose();
  return z * inverse(mt * z) * mt;
}

bool averaging_property() {
  std::mt19937 rng(7);
  std::vector<std::pair<OrientedGraph, GroupSpec>> cases;
  cases.emplace_back(torus_graph(3, 2), torus_generators(3));
  cases.emplace_back(torus_graph(4, 2), torus_generators(4));
  cases.emplace_back(hamming_graph(2, 3), hamming_generators(2, 3));
  for (const auto& [g, group] : cases) {
    RatMatrix d = incidence_matrix(g);
    RatMatrix p_orth = orth_project_onto_span(cycle_basis(g));
    for (int trial = 0; trial < 50; ++trial) {
      RatMatrix p0 = random_cycle_projection(g, rng);
      RatMatrix avg = average_projection(p0, g, group);
      if (avg * avg != avg) return false;
      if (!(d * avg).is_zero()) return false;
      for (const Vec& z : cycle_basis(g))
        if (avg.apply(z) != z) return false;
      for (const auto& m : group.edge_generators) {
        RatMatrix gm = m.matrix();
        if (avg * gm != gm * avg) return false;
      }
      if (l1_operator_norm(avg) > l1_operator_norm(p0)) return false;
      if (avg != p_orth) return false;  // all three are uniqueness graphs
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<bool()>> criteria[] = {
      {"1 torus orthogonal-projection table n=2..5", torus_orth_table},
      {"2 minimal invariant projection on the 6-torus", torus6_minimum},
      {"3 commutant dimensions with independent construction", commutant_dims},
      {"4 uniqueness and non-uniqueness across hamming graphs",
       hamming_uniqueness},
      {"5 cube projection norms with dense cross-check", cube_norms},
      {"6 complementary-norm identities", norm_identity},
      {"7 transport properties on random instances", transport_properties},
      {"8 group averaging of random projections", averaging_property},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion %s raised: %s\n", name, e.what());
    }
    std::printf("criterion %s: %s\n", name, ok ? "PASS" : "FAIL");
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
