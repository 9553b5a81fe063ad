#include <doctest.h>

#include <random>

#include "cyclespace/errors.hpp"
#include "cyclespace/graph.hpp"
#include "cyclespace/matrix.hpp"
#include "cyclespace/symmetry.hpp"

using namespace cyclespace;

namespace {

OrientedGraph c4() { return build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

}  // namespace

TEST_CASE("automorphism search on small graphs") {
  CHECK(find_automorphisms(c4()).size() == 8);
  // path on 3 vertices: only the flip and identity
  OrientedGraph p3 = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(find_automorphisms(p3).size() == 2);
  CHECK_THROWS_AS(find_automorphisms(torus_graph(5, 2), 10), Error);
}

TEST_CASE("torus automorphism counts match 8 n^2 for n >= 5") {
  for (std::size_t n : {5, 6, 7})
    CHECK(find_automorphisms(torus_graph(n, 2)).size() == 8 * n * n);
  // the 4x4 torus has strictly more than its generic symmetries
  CHECK(find_automorphisms(torus_graph(4, 2)).size() > 128);
}

TEST_CASE("edge actions are orthogonal signed permutations") {
  OrientedGraph g = torus_graph(4, 2);
  for (const auto& a : find_automorphisms(g)) {
    SignedEdgeMap m = edge_action(a, g);
    RatMatrix mm = m.matrix();
    CHECK(mm.transpose() * mm == RatMatrix::identity(g.edge_count()));
    // cuts map to cuts: m(X(v)) = X(a(v))
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      CHECK(m.apply(cut_vector(g, v)) == cut_vector(g, a(v)));
  }
}

TEST_CASE("edge action is covariant with composition") {
  OrientedGraph g = torus_graph(3, 2);
  auto autos = find_automorphisms(g);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, autos.size() - 1);
  for (int trial = 0; trial < 25; ++trial) {
    const auto &a = autos[pick(rng)], &b = autos[pick(rng)];
    CHECK(edge_action(compose(a, b), g) ==
          edge_action(a, g).after(edge_action(b, g)));
  }
  GraphAutomorphism id{{0, 1, 2, 3, 4, 5, 6, 7, 8}};
  CHECK(edge_action(id, g) == SignedEdgeMap::identity_map(18));
}

TEST_CASE("non-automorphisms are rejected") {
  OrientedGraph p3 = build_graph(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(edge_action(GraphAutomorphism{{1, 0, 2}}, p3), Error);
}

TEST_CASE("torus generator actions on distinguished cycle vectors") {
  for (std::size_t n : {5, 6}) {
    OrientedGraph g = torus_graph(n, 2);
    // alpha: (i,j) -> (-i,j); beta: (i,j) -> (j,i)
    std::vector<std::size_t> pa(n * n), pb(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        pa[i + j * n] = ((n - i) % n) + j * n;
        pb[i + j * n] = j + i * n;
      }
    SignedEdgeMap alpha = edge_action(GraphAutomorphism{pa}, g);
    SignedEdgeMap beta = edge_action(GraphAutomorphism{pb}, g);
    Vec r = torus_row_cycle(g, n), k = torus_col_cycle(g, n);
    CHECK(alpha.apply(r) == scale(r, rat(-1)));
    CHECK(alpha.apply(k) == k);
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j) {
        Vec s = torus_small_square(g, n, i, j);
        CHECK(alpha.apply(s) ==
              scale(torus_small_square(g, n, (2 * n - i - 1) % n, j), rat(-1)));
        CHECK(beta.apply(s) ==
              scale(torus_small_square(g, n, j, i), rat(-1)));
      }
  }
}

TEST_CASE("torus generators close to the expected group") {
  CHECK(torus_generators(5).enumerated().size() == 200);
  CHECK(torus_generators(6).enumerated().size() == 288);
  CHECK(torus_generators(7).enumerated().size() == 392);
  GroupSpec t4 = torus_generators(4);
  CHECK(t4.enumerated().size() == 384);  // includes the exceptional symmetry
  for (std::size_t n : {3, 4, 5, 6}) {
    GroupSpec spec = torus_generators(n);
    CHECK(spec.edge_transitive);
    CHECK(spec.includes_negation);
  }
}

TEST_CASE("the exceptional 4x4 symmetry maps a small square to a row cycle") {
  std::size_t n = 4;
  OrientedGraph g = torus_graph(n, 2);
  SignedEdgeMap phi = edge_action(torus4_exceptional(), g);
  Vec s = torus_small_square(g, n, 0, 1);
  Vec image = phi.apply(s);
  // the image is the row cycle through (*,1) up to sign
  Vec row(g.edge_count(), Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    row[torus_row_edge(n, i, 1)] = 1;
  bool plus = image == row, minus = image == scale(row, rat(-1));
  CHECK((plus || minus));
}

TEST_CASE("hamming generators close to the wreath product") {
  CHECK(hamming_generators(2, 3).enumerated().size() == 48);
  CHECK(hamming_generators(3, 2).enumerated().size() == 72);
  CHECK(hamming_generators(4, 2).enumerated().size() == 1152);
  CHECK(hamming_generators(2, 3).edge_transitive);
}

TEST_CASE("group closure respects the cap") {
  GroupSpec t5 = torus_generators(5);
  CHECK_THROWS_AS(group_closure(t5.vertex_generators, 100), Error);
}

TEST_CASE("stabilizer size follows the orbit-stabilizer theorem") {
  auto elements = torus_generators(5).enumerated();
  CHECK(stabilizer(elements, 0).size() == elements.size() / 25);
}

TEST_CASE("a group spec without elements refuses enumeration") {
  GroupSpec spec;
  CHECK_THROWS_AS(spec.enumerated(), Error);
}
