#include <doctest.h>

#include <random>

#include "cyclespace/errors.hpp"
#include "cyclespace/graph.hpp"

using namespace cyclespace;

TEST_CASE("construction validates the graph") {
  CHECK_THROWS_AS(build_graph(3, {{0, 1}}), Error);              // disconnected
  CHECK_THROWS_AS(build_graph(2, {{0, 0}, {0, 1}}), Error);      // self loop
  CHECK_THROWS_AS(build_graph(2, {{0, 1}, {1, 0}}), Error);      // parallel
  CHECK_THROWS_AS(build_graph(2, {{0, 1, rat(0)}}), Error);      // zero weight
  CHECK_THROWS_AS(build_graph(2, {{0, 2}}), Error);              // bad index
  CHECK_NOTHROW(build_graph(2, {{0, 1, rat(1, 3)}}));
}

TEST_CASE("incidence, cycle and cut dimensions") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    // random connected graph: a spanning tree plus extra random edges
    std::uniform_int_distribution<std::size_t> size(2, 8);
    std::size_t n = size(rng);
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) {
      std::uniform_int_distribution<std::size_t> parent(0, v - 1);
      edges.push_back({parent(rng), v, rat(1)});
    }
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        bool present = false;
        for (const Edge& e : edges)
          if ((e.tail == u && e.head == v) || (e.tail == v && e.head == u))
            present = true;
        if (!present && rng() % 3 == 0) edges.push_back({u, v, rat(1)});
      }
    OrientedGraph g = build_graph(n, edges);
    RatMatrix d = incidence_matrix(g);
    auto cycles = cycle_basis(g);
    auto cuts = cut_basis(g);
    CHECK(cycles.size() == g.edge_count() - n + 1);
    CHECK(cuts.size() == n - 1);
    for (const Vec& z : cycles) CHECK(is_zero(d.apply(z)));
    // cycle and cut spaces are orthogonal complements
    for (const Vec& z : cycles)
      for (const Vec& b : cuts) CHECK(dot(z, b) == 0);
    std::vector<Vec> all = cycles;
    all.insert(all.end(), cuts.begin(), cuts.end());
    CHECK(span_rank(all) == g.edge_count());
  }
}

TEST_CASE("cut vector signs follow the reference orientation") {
  OrientedGraph g = build_graph(2, {{0, 1}});
  CHECK(cut_vector(g, 0) == Vec{rat(1)});
  CHECK(cut_vector(g, 1) == Vec{rat(-1)});
}

TEST_CASE("closed walks produce cycle vectors") {
  OrientedGraph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Vec v = closed_walk_vector(g, {0, 1, 2, 3, 0});
  CHECK(is_zero(incidence_matrix(g).apply(v)));
  CHECK(l1_norm(v) == 4);
  CHECK_THROWS_AS(closed_walk_vector(g, {0, 1, 2}), Error);   // not closed
  CHECK_THROWS_AS(closed_walk_vector(g, {0, 2, 0}), Error);   // non-edge
}

TEST_CASE("torus structure") {
  for (std::size_t n : {3, 4, 5}) {
    OrientedGraph g = torus_graph(n, 2);
    CHECK(g.vertex_count() == n * n);
    CHECK(g.edge_count() == 2 * n * n);
    RatMatrix d = incidence_matrix(g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(is_zero(d.apply(torus_small_square(g, n, i, j))));
    CHECK(is_zero(d.apply(torus_row_cycle(g, n))));
    CHECK(is_zero(d.apply(torus_col_cycle(g, n))));
    // small squares plus one row and one column cycle span the cycle space
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        vs.push_back(torus_small_square(g, n, i, j));
    vs.push_back(torus_row_cycle(g, n));
    vs.push_back(torus_col_cycle(g, n));
    CHECK(span_rank(vs) == n * n + 1);
  }
  CHECK(torus_graph(2, 2).edge_count() == 4);
  CHECK_THROWS_AS(torus_graph(2, 3), Error);
}

TEST_CASE("hamming graph structure") {
  OrientedGraph cube = hamming_graph(2, 3);
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.edge_count() == 12);
  OrientedGraph a32 = hamming_graph(3, 2);
  CHECK(a32.vertex_count() == 9);
  CHECK(a32.edge_count() == 2 * 3 * 3);  // m * C(n,2) * n^(m-1)
  CHECK_THROWS_AS(hamming_graph(2, 30, 1000), Error);
}

TEST_CASE("all pairs distances agree with the metric axioms") {
  OrientedGraph g = build_graph(3, {{0, 1, rat(1, 2)}, {1, 2, rat(1, 3)},
                                    {0, 2, rat(2)}});
  RatMatrix d = all_pairs_distances(g);
  CHECK(d.at(0, 2) == rat(5, 6));
  CHECK(d.at(0, 1) == rat(1, 2));
  MetricSpace m(d);  // validates symmetry, positivity, triangle inequality
  CHECK(m.point_count() == 3);
}

TEST_CASE("canonical graph removes exactly the triangle-equality edges") {
  RatMatrix d(3, 3);
  d.at(0, 1) = d.at(1, 0) = 1;
  d.at(1, 2) = d.at(2, 1) = 1;
  d.at(0, 2) = d.at(2, 0) = 2;
  OrientedGraph g = canonical_graph(MetricSpace(d));
  CHECK(g.edge_count() == 2);
  CHECK(!g.find_edge(0, 2).has_value());
  // the path metric of the canonical graph recovers the original metric
  CHECK(all_pairs_distances(g) == d);
}

TEST_CASE("metric space validation") {
  RatMatrix bad(2, 2);
  bad.at(0, 1) = 1;
  bad.at(1, 0) = 2;
  CHECK_THROWS_AS(MetricSpace{bad}, Error);
  RatMatrix tri(3, 3);
  tri.at(0, 1) = tri.at(1, 0) = 1;
  tri.at(1, 2) = tri.at(2, 1) = 1;
  tri.at(0, 2) = tri.at(2, 0) = 5;  // violates the triangle inequality
  CHECK_THROWS_AS(MetricSpace{tri}, Error);
}
