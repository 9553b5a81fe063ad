#pragma once

#include <cstddef>

#include "cyclespace/rational.hpp"

namespace cyclespace {

// Expansion coefficients of the orthogonal cut-space projection applied to a
// reference edge of the n-cube, grouped by edge type relative to that edge.
struct CubeCoefficients {
  std::size_t n = 0;
  Vec a;  // indexed 1..n-1 (a[0] unused)
  Vec b;  // indexed 0..n-1
  Vec c;  // indexed 0..n-2
};

// Exact coefficients from the closed forms for b0, b1 and the three-term
// recurrence (n-k) b_k - (n+1) b_{k-1} + (k-1) b_{k-2} = 0; requires n >= 3.
CubeCoefficients cube_coefficients(std::size_t n);

// l1 norm of the orthogonal projection onto the cut space of the n-cube,
// computed from the coefficients as F(n) + 2 G(n). Asserts F(n) = 1,
// G(n) = (n-1)/4, and the value (n+1)/2; throws Error(IdentityViolation)
// if any of these fail.
Rational q_norm(std::size_t n);

// l1 norm of the orthogonal projection onto the cycle space:
// (n+3)/2 - 4/n + 1/(n 2^(n-2)).
Rational p_norm(std::size_t n);

// Dense oracle: recomputes every coefficient and both norms from the full
// edge-space projection matrix and checks the cut-space image identity for
// the coordinate edge sums. Intended for n <= 6.
bool cube_cross_check(std::size_t n);

}  // namespace cyclespace
