#include <doctest.h>

#include <random>

#include "cyclespace/errors.hpp"
#include "cyclespace/matrix.hpp"

using namespace cyclespace;

namespace {

RatMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rat(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rref identifies rank and pivots") {
  RatMatrix m(3, 4);
  // rows: (1,2,3,4), (2,4,6,8), (0,0,1,1) -> rank 2
  int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = vals[i][j];
  RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 2});
}

TEST_CASE("nullspace vectors satisfy m x = 0 and span the kernel") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    RatMatrix m = random_matrix(rng, 4, 6);
    auto basis = nullspace(m);
    CHECK(basis.size() == 6 - rref(m).rank);
    for (const Vec& v : basis) {
      CHECK(!is_zero(v));
      CHECK(is_zero(m.apply(v)));
    }
    CHECK(span_rank(basis) == basis.size());
  }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    RatMatrix m = random_matrix(rng, 5, 4);
    Vec x0(4);
    std::uniform_int_distribution<int> num(-3, 3);
    for (auto& v : x0) v = rat(num(rng));
    Vec b = m.apply(x0), x;
    REQUIRE(solve(m, b, x));
    CHECK(m.apply(x) == b);
  }
  RatMatrix m(2, 1);
  m.at(0, 0) = 1;
  m.at(1, 0) = 1;
  Vec x;
  CHECK(!solve(m, {rat(1), rat(2)}, x));
}

TEST_CASE("inverse round-trips and rejects singular input") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix m = random_matrix(rng, 4, 4);
    if (rref(m).rank < 4) continue;
    CHECK(m * inverse(m) == RatMatrix::identity(4));
  }
  RatMatrix s(2, 2);
  s.at(0, 0) = s.at(0, 1) = s.at(1, 0) = s.at(1, 1) = 1;
  CHECK_THROWS_AS(inverse(s), Error);
}

TEST_CASE("orthogonal projection is idempotent, symmetric, fixes its span") {
  std::mt19937 rng(17);
  std::vector<Vec> basis;
  for (int k = 0; k < 3; ++k) {
    Vec v(6);
    std::uniform_int_distribution<int> num(-4, 4);
    for (auto& e : v) e = rat(num(rng));
    basis.push_back(v);
  }
  if (span_rank(basis) == basis.size()) {
    RatMatrix p = orth_project_onto_span(basis);
    CHECK(p * p == p);
    CHECK(p.transpose() == p);
    for (const Vec& v : basis) CHECK(p.apply(v) == v);
  }
  // dependent input is rejected
  std::vector<Vec> dep = {{rat(1), rat(2)}, {rat(2), rat(4)}};
  CHECK_THROWS_AS(orth_project_onto_span(dep), Error);
}

TEST_CASE("operator norms") {
  RatMatrix m(2, 2);
  m.at(0, 0) = rat(1);
  m.at(0, 1) = rat(-3);
  m.at(1, 0) = rat(1, 2);
  m.at(1, 1) = rat(1);
  CHECK(l1_operator_norm(m) == rat(4));        // max column abs sum
  CHECK(linf_operator_norm(m) == rat(4));      // max row abs sum
  CHECK(l1_operator_norm(m.transpose()) == linf_operator_norm(m));
}
