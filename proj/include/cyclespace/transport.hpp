#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclespace/graph.hpp"
#include "cyclespace/matrix.hpp"
#include "cyclespace/rational.hpp"

namespace cyclespace {

// Net supply/demand per vertex; entries sum to zero.
struct TransportationProblem {
  Vec values;

  static TransportationProblem point_difference(std::size_t u, std::size_t v,
                                                std::size_t vertex_count);
};

struct TransportPlan {
  EdgeVector flow;
  Rational cost;
};

// 1-Lipschitz potentials vanishing at vertex 0, certifying optimality of a
// plan through the pairing <f, g>.
struct LipschitzWitness {
  Vec potentials;
};

// Transportation cost of f on the weighted graph: the minimum of
// sum_e |F(e)| w(e) over flows with D F = f, where D is the incidence
// matrix. Equals the quotient norm of any representative in l1(E)/Z(G).
// Throws Error(UnbalancedProblem) when f does not sum to zero.
TransportPlan tc_norm(const TransportationProblem& f, const OrientedGraph& g);

// Wasserstein-1 distance between two probability vectors on the vertices.
// Throws Error(NotProbability) on negative entries or sums != 1.
Rational wasserstein1(const Vec& mu, const Vec& nu, const OrientedGraph& g);

// Optimal potentials from an independent dual solve; strong duality gives
// <f, potentials> = tc_norm(f) exactly.
LipschitzWitness dual_certificate(const TransportationProblem& f,
                                  const OrientedGraph& g);

struct ProjectionBounds {
  Rational c1_tc_upper;          // c1(tc(G)) <= |I - P_min|_1
  Rational c1_wasserstein_upper; // same bound for (P(G), d_W1)
  Rational lambda_lower;         // lambda(lip0(G)) >= |P_min|_1 - 1
  Rational bm_lower;             // d_BM(tc(G), l1^N) >= |P_min|_1 - 1
  std::size_t bm_dimension;      // N = |V| - 1
  bool has_bm_upper = false;
  Rational bm_upper;             // 2n for the Hamming cube
};

// Restates the norm inequalities that follow from an invariant projection
// with the given norms. When the graph is the n-cube (pass cube_n = n) the
// report also carries the 2n Banach-Mazur upper bound.
ProjectionBounds bounds_from_projection(const OrientedGraph& g,
                                        const Rational& p_min_norm,
                                        const Rational& i_minus_p_min_norm,
                                        std::optional<std::size_t> cube_n = {});

}  // namespace cyclespace
