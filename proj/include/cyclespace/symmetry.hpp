#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclespace/graph.hpp"
#include "cyclespace/matrix.hpp"

namespace cyclespace {

// Vertex permutation preserving adjacency of the underlying graph.
struct GraphAutomorphism {
  std::vector<std::size_t> permutation;

  std::size_t operator()(std::size_t v) const { return permutation[v]; }
  bool operator==(const GraphAutomorphism&) const = default;
};

GraphAutomorphism compose(const GraphAutomorphism& outer,
                          const GraphAutomorphism& inner);
GraphAutomorphism inverse(const GraphAutomorphism& g);

// Signed permutation of oriented edges: (apply(x))[image[e]] = sign[e]*x[e].
struct SignedEdgeMap {
  std::vector<std::size_t> image;
  std::vector<int> sign;

  static SignedEdgeMap identity_map(std::size_t edge_count);
  static SignedEdgeMap negation(std::size_t edge_count);

  Vec apply(const Vec& x) const;
  SignedEdgeMap after(const SignedEdgeMap& inner) const;  // this ∘ inner
  SignedEdgeMap inverted() const;
  RatMatrix matrix() const;
  bool operator==(const SignedEdgeMap&) const = default;
};

// Group of edge-space isometries preserving the cycle space, given by vertex
// automorphism generators together with their induced edge actions.
struct GroupSpec {
  std::vector<GraphAutomorphism> vertex_generators;
  std::vector<SignedEdgeMap> edge_generators;
  std::optional<std::vector<GraphAutomorphism>> elements;  // full closure
  bool edge_transitive = false;  // verified, never assumed
  bool includes_negation = false;

  const std::vector<GraphAutomorphism>& enumerated() const;
};

// Lifts a vertex automorphism to its signed edge action; the sign is -1 on
// edges whose reference orientation is reversed.
// Throws Error(NotAnAutomorphism) if g does not preserve adjacency.
SignedEdgeMap edge_action(const GraphAutomorphism& g, const OrientedGraph& graph);

// Complete automorphism group of the underlying unweighted graph, by
// backtracking over a distance-profile partition.
std::vector<GraphAutomorphism> find_automorphisms(const OrientedGraph& g,
                                                  std::size_t vertex_cap = 256);

// Breadth-first closure of the generators; throws Error(SizeCapExceeded) past
// the cap.
std::vector<GraphAutomorphism> group_closure(
    const std::vector<GraphAutomorphism>& generators,
    std::size_t cap = 1000000);

// Elements fixing the given vertex.
std::vector<GraphAutomorphism> stabilizer(
    const std::vector<GraphAutomorphism>& elements, std::size_t vertex);

bool verify_edge_transitive(const OrientedGraph& g,
                            const std::vector<SignedEdgeMap>& edge_generators);

// Generators of the automorphism group of Z_n^m acting on torus_graph(n, m):
// unit translations, coordinate swap/cycle, negation of coordinate 0, and for
// n = 4 the exceptional square-to-row automorphism extended from two
// coordinates. Closure is enumerated; edge transitivity verified.
GroupSpec torus_generators(std::size_t n, std::size_t m = 2);

// Generators of the automorphism group of the Hamming graph A_n^m (alphabet
// permutations per coordinate plus coordinate permutations).
GroupSpec hamming_generators(std::size_t n, std::size_t m);

// GroupSpec for an arbitrary graph from its full automorphism group.
GroupSpec group_from_automorphisms(const OrientedGraph& g,
                                   std::vector<GraphAutomorphism> autos);

// The exceptional automorphism of the 4x4 torus that maps a small square onto
// a row cycle.
GraphAutomorphism torus4_exceptional();

}  // namespace cyclespace
