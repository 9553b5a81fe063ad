#include "cyclespace/cube.hpp"

#include <bit>
#include <cstddef>

#include "cyclespace/errors.hpp"
#include "cyclespace/graph.hpp"
#include "cyclespace/matrix.hpp"

namespace cyclespace {

namespace {

Rational pow2(std::size_t k) {
  Rational r = 1;
  mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), k);
  return r;
}

Rational binom(std::size_t n, std::size_t k) {
  Rational r;
  mpz_bin_uiui(r.get_num_mpz_t(), n, k);
  return r;
}

}  // namespace

CubeCoefficients cube_coefficients(std::size_t n) {
  if (n < 3) fail(ErrorCode::UnsupportedParameter, "cube coefficients need n >= 3");
  const Rational rn(static_cast<unsigned long>(n));

  CubeCoefficients cc;
  cc.n = n;
  cc.b.assign(n, Rational(0));
  cc.b[0] = 2 / rn - 1 / (rn * pow2(n - 1));
  cc.b[1] = 2 / (rn * (rn - 1)) - 1 / (pow2(n - 2) * rn * (rn - 1)) -
            1 / (rn * pow2(n - 1));
  for (std::size_t k = 2; k < n; ++k)
    cc.b[k] = ((rn + 1) * cc.b[k - 1] -
               Rational(static_cast<unsigned long>(k - 1)) * cc.b[k - 2]) /
              (rn - Rational(static_cast<unsigned long>(k)));

  cc.a.assign(n, Rational(0));
  for (std::size_t k = 1; k < n; ++k) cc.a[k] = (cc.b[k] - cc.b[k - 1]) / 2;
  cc.c.assign(n - 1, Rational(0));
  for (std::size_t k = 0; k + 1 < n; ++k) cc.c[k] = -cc.a[k + 1];
  return cc;
}

Rational q_norm(std::size_t n) {
  CubeCoefficients cc = cube_coefficients(n);
  Rational f = 0, gg = 0;
  for (std::size_t k = 0; k < n; ++k) f += binom(n - 1, k) * cc.b[k];
  for (std::size_t k = 0; k + 1 < n; ++k)
    gg += Rational(static_cast<unsigned long>(n - 1 - k)) * binom(n - 1, k) *
          cc.c[k];
  const Rational rn(static_cast<unsigned long>(n));
  if (f != 1) fail(ErrorCode::IdentityViolation, "edge-sum identity F(n) != 1");
  if (gg != (rn - 1) / 4)
    fail(ErrorCode::IdentityViolation, "edge-sum identity G(n) != (n-1)/4");
  Rational q = f + 2 * gg;
  if (q != (rn + 1) / 2)
    fail(ErrorCode::IdentityViolation, "cut projection norm != (n+1)/2");
  return q;
}

Rational p_norm(std::size_t n) {
  if (n < 3) fail(ErrorCode::UnsupportedParameter, "cube norm needs n >= 3");
  const Rational rn(static_cast<unsigned long>(n));
  return (rn + 3) / 2 - 4 / rn + 1 / (rn * pow2(n - 2));
}

bool cube_cross_check(std::size_t n) {
  if (n < 3 || n > 6) return false;
  OrientedGraph g = hamming_graph(2, n);
  const std::size_t ne = g.edge_count();
  RatMatrix q = orth_project_onto_span(cut_basis(g));
  CubeCoefficients cc = cube_coefficients(n);

  // Reference edge: vertex 0...0 -> 10...0, i.e. the coordinate-0 edge at 0.
  auto e0 = g.find_edge(0, 1);
  if (!e0) return false;
  Vec qe0 = q.column(*e0);

  // Classify each edge by (coordinate-0 bit of the tail, whether the edge is
  // parallel to coordinate 0, weight of the tail) and compare with a, b, c.
  for (std::size_t e = 0; e < ne; ++e) {
    std::size_t tail = g.edge(e).tail, head = g.edge(e).head;
    std::size_t k = static_cast<std::size_t>(std::popcount(tail));
    const Rational* expected;
    if ((tail ^ head) == 1)
      expected = &cc.b[k];
    else if (tail & 1)
      expected = &cc.a[k];
    else
      expected = &cc.c[k];
    if (qe0[e] != *expected) return false;
  }

  if (l1_operator_norm(q) != q_norm(n)) return false;
  if (l1_operator_norm(RatMatrix::identity(ne) - q) != p_norm(n)) return false;

  // Image identity for the coordinate sums: with x, u the j-parallel edge
  // sums split by the coordinate-0 bit and y, z the 0-parallel sums split by
  // the coordinate-j bit, Q(x) = (3/4)x + (1/4)(u + y - z).
  for (std::size_t j = 1; j < n; ++j) {
    Vec x(ne, Rational(0)), u(ne, Rational(0)), y(ne, Rational(0)),
        z(ne, Rational(0));
    std::size_t jbit = std::size_t{1} << j;
    for (std::size_t e = 0; e < ne; ++e) {
      std::size_t tail = g.edge(e).tail;
      std::size_t diff = tail ^ g.edge(e).head;
      if (diff == jbit)
        ((tail & 1) ? u : x)[e] = 1;
      else if (diff == 1)
        ((tail & jbit) ? z : y)[e] = 1;
    }
    Vec rhs = add(scale(x, rat(3, 4)),
                  scale(add(u, sub(y, z)), rat(1, 4)));
    if (q.apply(x) != rhs) return false;
  }
  return true;
}

}  // namespace cyclespace
