#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclespace/matrix.hpp"
#include "cyclespace/rational.hpp"

namespace cyclespace {

struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational weight = 1;
};

// A vector indexed by edges in the graph's canonical edge order.
using EdgeVector = Vec;

// Simple connected graph with a reference orientation and positive rational
// edge weights. Immutable after construction.
class OrientedGraph {
 public:
  OrientedGraph(std::size_t vertex_count, std::vector<Edge> edges,
                std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<std::string>& vertex_labels() const { return labels_; }

  // Edge index for the unordered pair {u, v}, if present.
  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const;

  // (edge index, +1 if the edge is stored as u -> v, -1 if v -> u).
  std::optional<std::pair<std::size_t, int>> oriented_edge(
      std::size_t u, std::size_t v) const;

  const std::vector<std::size_t>& incident_edges(std::size_t v) const {
    return incident_[v];
  }
  bool unweighted() const;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<std::uint64_t, std::size_t> pair_index_;
  std::vector<std::vector<std::size_t>> incident_;
};

// Finite metric space; symmetry, positivity, and the triangle inequality are
// verified at construction.
class MetricSpace {
 public:
  explicit MetricSpace(RatMatrix distances);
  std::size_t point_count() const { return distances_.rows(); }
  const Rational& distance(std::size_t u, std::size_t v) const {
    return distances_.at(u, v);
  }
  const RatMatrix& distances() const { return distances_; }

 private:
  RatMatrix distances_;
};

OrientedGraph build_graph(std::size_t vertex_count,
                          const std::vector<Edge>& edge_list,
                          std::vector<std::string> labels = {});

// Discrete torus Z_n^m with edges oriented along increasing coordinates.
// torus_graph(2, 2) is read as the 4-cycle; n = 2 with m > 2 is rejected.
OrientedGraph torus_graph(std::size_t n, std::size_t m);

// Hamming graph A_n^m; tail carries the smaller symbol in the differing
// coordinate. For n = 2 this is the j-parallel orientation of the cube.
OrientedGraph hamming_graph(std::size_t n, std::size_t m,
                            std::size_t vertex_cap = 100000);

// Complete weighted graph on the points of X minus every edge witnessed by an
// exact triangle equality; weights are the original distances.
OrientedGraph canonical_graph(const MetricSpace& x);

RatMatrix incidence_matrix(const OrientedGraph& g);

// Fundamental-cycle vectors of the BFS spanning tree rooted at vertex 0,
// one per non-tree edge, entries in {-1, 0, +1}.
std::vector<EdgeVector> cycle_basis(const OrientedGraph& g);

// Vertex-star cut vectors X(v) for every v != 0: +1 on outgoing edges of v,
// -1 on incoming ones.
std::vector<EdgeVector> cut_basis(const OrientedGraph& g);

EdgeVector cut_vector(const OrientedGraph& g, std::size_t v);

// Signed indicator vector of a closed walk given as a vertex sequence
// (first == last). Throws Error(NotClosed) if the walk does not close up or
// uses a non-edge.
EdgeVector closed_walk_vector(const OrientedGraph& g,
                              const std::vector<std::size_t>& walk);

// All-pairs shortest weighted path distances.
RatMatrix all_pairs_distances(const OrientedGraph& g);

// --- coordinate helpers for the product families (little-endian radix) ---

std::size_t coords_to_vertex(const std::vector<std::size_t>& coords,
                             std::size_t n);
std::vector<std::size_t> vertex_to_coords(std::size_t v, std::size_t n,
                                          std::size_t m);

// --- torus edge-space helpers (m = 2), in the canonical edge order ---

// Edge (i,j) -> (i+1,j).
std::size_t torus_row_edge(std::size_t n, std::size_t i, std::size_t j);
// Edge (i,j) -> (i,j+1).
std::size_t torus_col_edge(std::size_t n, std::size_t i, std::size_t j);

// Small square cycle vector S((i,j)).
EdgeVector torus_small_square(const OrientedGraph& g, std::size_t n,
                              std::size_t i, std::size_t j);
// Row cycle R through (*,0) and column cycle K through (0,*).
EdgeVector torus_row_cycle(const OrientedGraph& g, std::size_t n);
EdgeVector torus_col_cycle(const OrientedGraph& g, std::size_t n);

}  // namespace cyclespace
