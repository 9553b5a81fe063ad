#pragma once

#include <cstddef>
#include <vector>

#include "cyclespace/graph.hpp"
#include "cyclespace/matrix.hpp"
#include "cyclespace/symmetry.hpp"

namespace cyclespace {

// Affine family of invariant projections onto the cycle space:
// P(x) = p_orth + sum_i x_i * basis[i].
struct ProjectionFamily {
  RatMatrix p_orth;              // orthogonal projection onto Z(G)
  RatMatrix p_cut;               // orthogonal projection onto B(G)
  std::vector<RatMatrix> basis;  // edge-space lifts A_i . p_cut

  std::size_t dimension() const { return basis.size(); }
  RatMatrix member(const Vec& parameters) const;
};

// Group average (1/|G|) sum over g of g^-1 P0 g. Invariant, still a
// projection onto Z(G), and never larger in l1 norm.
// Throws Error(GroupNotEnumerated) without a full element list.
RatMatrix average_projection(const RatMatrix& p0, const OrientedGraph& g,
                             const GroupSpec& group);

// Dimension of the space of invariant maps B(G) -> Z(G). Uses the
// point-stabilizer reduction when the vertex action is transitive,
// otherwise averages elementary maps over the full group.
std::size_t commutant_dimension(const OrientedGraph& g, const GroupSpec& group);

// Same computation with the edge-space basis maps materialized.
ProjectionFamily commutant_family(const OrientedGraph& g,
                                  const GroupSpec& group);

// Slow-path oracle: commutant by averaging the elementary maps E_ij over
// every group element. Exposed for cross-checking the stabilizer reduction.
std::vector<RatMatrix> averaged_commutant_maps(const OrientedGraph& g,
                                               const GroupSpec& group);

// Basis of rotation-invariant cycle vectors on the n x n torus: 8-term
// alternating sums of small-square vectors, one per admissible index orbit;
// floor(n/2)(floor(n/2)-1)/2 vectors in total.
std::vector<EdgeVector> torus_invariant_basis(std::size_t n);

struct MinimizeResult {
  Vec parameters;
  RatMatrix p_min;
  Rational norm;            // |P_min|_1
  bool unique_minimizer = false;
};

// Exact minimizer of |P(x)|_1 over the family, by rational LP. With an
// edge-transitive group the norm is the l1 norm of a single column;
// otherwise it is the max over one column per edge orbit.
MinimizeResult minimize_l1(const ProjectionFamily& family,
                           const OrientedGraph& g, const GroupSpec& group);

struct ProjectionReport {
  std::size_t dimension = 0;
  Rational p_orth_norm;
  Rational i_minus_p_orth_norm;
  Rational p_min_norm;
  Rational i_minus_p_min_norm;
  bool unique_minimizer = false;
  Rational trace_value;       // <P(e), e> summed trace / |E|
  Rational lambda_lip0;       // = |I - P_min|_1 (lower bound in general)
  Rational c1_upper_bound;    // = |I - P_min|_1
  Rational bm_lower_bound;    // = |P_min|_1 - 1
};

ProjectionReport projection_report(const OrientedGraph& g,
                                   const GroupSpec& group);

}  // namespace cyclespace
