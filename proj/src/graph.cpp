#include "cyclespace/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "cyclespace/errors.hpp"

namespace cyclespace {

namespace {

std::uint64_t pair_key(std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

OrientedGraph::OrientedGraph(std::size_t vertex_count, std::vector<Edge> edges,
                             std::vector<std::string> labels)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      labels_(std::move(labels)),
      incident_(vertex_count) {
  if (vertex_count_ == 0) fail(ErrorCode::BadInput, "graph has no vertices");
  if (labels_.empty()) {
    labels_.reserve(vertex_count_);
    for (std::size_t v = 0; v < vertex_count_; ++v)
      labels_.push_back(std::to_string(v));
  }
  if (labels_.size() != vertex_count_)
    fail(ErrorCode::BadInput, "label count mismatch");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.tail >= vertex_count_ || ed.head >= vertex_count_)
      fail(ErrorCode::BadInput, "edge endpoint out of range");
    if (ed.tail == ed.head)
      fail(ErrorCode::SelfLoop, "self-loop at vertex " + labels_[ed.tail]);
    if (ed.weight <= 0)
      fail(ErrorCode::NonpositiveWeight,
           "edge weight must be positive: " + to_string(ed.weight));
    auto [it, inserted] = pair_index_.emplace(pair_key(ed.tail, ed.head), e);
    if (!inserted)
      fail(ErrorCode::ParallelEdge,
           "repeated edge " + labels_[ed.tail] + "-" + labels_[ed.head]);
    incident_[ed.tail].push_back(e);
    incident_[ed.head].push_back(e);
  }
  // connectivity
  std::vector<bool> seen(vertex_count_, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : incident_[v]) {
      std::size_t w = edges_[e].tail == v ? edges_[e].head : edges_[e].tail;
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != vertex_count_)
    fail(ErrorCode::DisconnectedGraph, "graph is not connected");
}

std::optional<std::size_t> OrientedGraph::find_edge(std::size_t u,
                                                    std::size_t v) const {
  auto it = pair_index_.find(pair_key(u, v));
  if (it == pair_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<std::size_t, int>> OrientedGraph::oriented_edge(
    std::size_t u, std::size_t v) const {
  auto e = find_edge(u, v);
  if (!e) return std::nullopt;
  return std::make_pair(*e, edges_[*e].tail == u ? 1 : -1);
}

bool OrientedGraph::unweighted() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.weight == 1; });
}

MetricSpace::MetricSpace(RatMatrix distances) : distances_(std::move(distances)) {
  const RatMatrix& d = distances_;
  if (d.rows() != d.cols() || d.rows() == 0)
    fail(ErrorCode::BadInput, "distance matrix must be square and nonempty");
  std::size_t n = d.rows();
  for (std::size_t u = 0; u < n; ++u) {
    if (d.at(u, u) != 0)
      fail(ErrorCode::BadInput, "nonzero diagonal in distance matrix");
    for (std::size_t v = u + 1; v < n; ++v) {
      if (d.at(u, v) != d.at(v, u))
        fail(ErrorCode::BadInput, "distance matrix not symmetric");
      if (d.at(u, v) <= 0)
        fail(ErrorCode::BadInput, "distances must be positive off-diagonal");
    }
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (d.at(u, v) > d.at(u, w) + d.at(w, v))
          fail(ErrorCode::BadInput, "triangle inequality violated");
}

OrientedGraph build_graph(std::size_t vertex_count,
                          const std::vector<Edge>& edge_list,
                          std::vector<std::string> labels) {
  return OrientedGraph(vertex_count, edge_list, std::move(labels));
}

std::size_t coords_to_vertex(const std::vector<std::size_t>& coords,
                             std::size_t n) {
  std::size_t v = 0, base = 1;
  for (std::size_t c : coords) {
    v += c * base;
    base *= n;
  }
  return v;
}

std::vector<std::size_t> vertex_to_coords(std::size_t v, std::size_t n,
                                          std::size_t m) {
  std::vector<std::size_t> coords(m);
  for (std::size_t k = 0; k < m; ++k) {
    coords[k] = v % n;
    v /= n;
  }
  return coords;
}

namespace {

std::string coord_label(const std::vector<std::size_t>& coords) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k) os << ',';
    os << coords[k];
  }
  os << ')';
  return os.str();
}

}  // namespace

OrientedGraph torus_graph(std::size_t n, std::size_t m) {
  if (n < 2 || m < 2) fail(ErrorCode::BadInput, "torus requires n, m >= 2");
  if (n == 2) {
    if (m != 2)
      fail(ErrorCode::UnsupportedParameter,
           "Z_2^m has parallel edges as a simple graph for m > 2");
    // Z_2 x Z_2 read as the 4-cycle (00)-(10)-(11)-(01)-(00).
    std::vector<Edge> edges{{0, 1, 1}, {1, 3, 1}, {2, 3, 1}, {0, 2, 1}};
    return OrientedGraph(4, edges, {"(0,0)", "(1,0)", "(0,1)", "(1,1)"});
  }
  std::size_t count = 1;
  for (std::size_t k = 0; k < m; ++k) count *= n;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  edges.reserve(count * m);
  labels.reserve(count);
  for (std::size_t v = 0; v < count; ++v) {
    auto coords = vertex_to_coords(v, n, m);
    labels.push_back(coord_label(coords));
    for (std::size_t k = 0; k < m; ++k) {
      auto next = coords;
      next[k] = (next[k] + 1) % n;
      edges.push_back({v, coords_to_vertex(next, n), 1});
    }
  }
  return OrientedGraph(count, std::move(edges), std::move(labels));
}

OrientedGraph hamming_graph(std::size_t n, std::size_t m,
                            std::size_t vertex_cap) {
  if (n < 2 || m < 1) fail(ErrorCode::BadInput, "hamming requires n >= 2, m >= 1");
  std::size_t count = 1;
  for (std::size_t k = 0; k < m; ++k) {
    count *= n;
    if (count > vertex_cap)
      fail(ErrorCode::SizeCapExceeded, "hamming graph exceeds vertex cap");
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t v = 0; v < count; ++v) {
    auto coords = vertex_to_coords(v, n, m);
    labels.push_back(coord_label(coords));
    // tail symbol smaller than head symbol in the differing coordinate
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t b = coords[k] + 1; b < n; ++b) {
        auto other = coords;
        other[k] = b;
        edges.push_back({v, coords_to_vertex(other, n), 1});
      }
  }
  return OrientedGraph(count, std::move(edges), std::move(labels));
}

OrientedGraph canonical_graph(const MetricSpace& x) {
  std::size_t n = x.point_count();
  if (n < 2) fail(ErrorCode::BadInput, "metric space needs at least 2 points");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      bool witnessed = false;
      for (std::size_t w = 0; w < n && !witnessed; ++w)
        if (w != u && w != v &&
            x.distance(u, w) + x.distance(w, v) == x.distance(u, v))
          witnessed = true;
      if (!witnessed) edges.push_back({u, v, x.distance(u, v)});
    }
  return OrientedGraph(n, std::move(edges));
}

RatMatrix incidence_matrix(const OrientedGraph& g) {
  RatMatrix d(g.vertex_count(), g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    d.at(g.edge(e).head, e) = 1;
    d.at(g.edge(e).tail, e) = -1;
  }
  return d;
}

namespace {

struct BfsTree {
  std::vector<std::size_t> parent_edge;  // edge to parent; npos at root
  std::vector<std::size_t> parent;       // parent vertex; root points to itself
  std::vector<bool> in_tree;             // per edge
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

BfsTree bfs_tree(const OrientedGraph& g) {
  BfsTree t;
  t.parent_edge.assign(g.vertex_count(), BfsTree::npos);
  t.parent.assign(g.vertex_count(), BfsTree::npos);
  t.in_tree.assign(g.edge_count(), false);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  t.parent[0] = 0;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : g.incident_edges(v)) {
      std::size_t w = g.edge(e).tail == v ? g.edge(e).head : g.edge(e).tail;
      if (seen[w]) continue;
      seen[w] = true;
      t.parent[w] = v;
      t.parent_edge[w] = e;
      t.in_tree[e] = true;
      queue.push_back(w);
    }
  }
  return t;
}

// Appends the signed tree path from u towards the root until `stop`.
void add_tree_path(const OrientedGraph& g, const BfsTree& t, std::size_t u,
                   std::size_t stop, const Rational& sign, EdgeVector& out) {
  while (u != stop) {
    std::size_t e = t.parent_edge[u];
    // walking u -> parent(u): +1 if the edge is oriented out of u
    out[e] += g.edge(e).tail == u ? sign : -sign;
    u = t.parent[u];
  }
}

}  // namespace

std::vector<EdgeVector> cycle_basis(const OrientedGraph& g) {
  BfsTree t = bfs_tree(g);
  std::vector<std::size_t> depth(g.vertex_count(), 0);
  // depths via parent chain (tree is shallow; fine)
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::size_t u = v, d = 0;
    while (u != 0) {
      u = t.parent[u];
      ++d;
    }
    depth[v] = d;
  }
  std::vector<EdgeVector> basis;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (t.in_tree[e]) continue;
    std::size_t u = g.edge(e).tail, w = g.edge(e).head;
    EdgeVector chi(g.edge_count());
    chi[e] = 1;
    // close the walk tail -> head -> ... -> tail through the tree
    std::size_t a = w, b = u;
    while (depth[a] > depth[b]) {
      std::size_t pe = t.parent_edge[a];
      chi[pe] += g.edge(pe).tail == a ? 1 : -1;
      a = t.parent[a];
    }
    while (depth[b] > depth[a]) {
      std::size_t pe = t.parent_edge[b];
      chi[pe] += g.edge(pe).tail == b ? -1 : 1;
      b = t.parent[b];
    }
    while (a != b) {
      std::size_t pe = t.parent_edge[a];
      chi[pe] += g.edge(pe).tail == a ? 1 : -1;
      a = t.parent[a];
      pe = t.parent_edge[b];
      chi[pe] += g.edge(pe).tail == b ? -1 : 1;
      b = t.parent[b];
    }
    basis.push_back(std::move(chi));
  }
  return basis;
}

EdgeVector cut_vector(const OrientedGraph& g, std::size_t v) {
  EdgeVector x(g.edge_count());
  for (std::size_t e : g.incident_edges(v))
    x[e] = g.edge(e).tail == v ? 1 : -1;
  return x;
}

std::vector<EdgeVector> cut_basis(const OrientedGraph& g) {
  std::vector<EdgeVector> basis;
  basis.reserve(g.vertex_count() - 1);
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    basis.push_back(cut_vector(g, v));
  return basis;
}

EdgeVector closed_walk_vector(const OrientedGraph& g,
                              const std::vector<std::size_t>& walk) {
  if (walk.size() < 2 || walk.front() != walk.back())
    fail(ErrorCode::NotClosed, "walk does not return to its base vertex");
  EdgeVector chi(g.edge_count());
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    auto oe = g.oriented_edge(walk[i], walk[i + 1]);
    if (!oe) fail(ErrorCode::NotClosed, "walk step is not an edge");
    chi[oe->first] += oe->second;
  }
  return chi;
}

RatMatrix all_pairs_distances(const OrientedGraph& g) {
  std::size_t n = g.vertex_count();
  RatMatrix d(n, n);
  Rational big = 0;
  for (const Edge& e : g.edges()) big += e.weight;
  big += 1;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) d.at(u, v) = big;
  for (const Edge& e : g.edges()) {
    if (e.weight < d.at(e.tail, e.head)) {
      d.at(e.tail, e.head) = e.weight;
      d.at(e.head, e.tail) = e.weight;
    }
  }
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t u = 0; u < n; ++u) {
      if (d.at(u, w) == big) continue;
      for (std::size_t v = 0; v < n; ++v) {
        Rational through = d.at(u, w) + d.at(w, v);
        if (through < d.at(u, v)) {
          d.at(u, v) = through;
          d.at(v, u) = through;
        }
      }
    }
  return d;
}

std::size_t torus_row_edge(std::size_t n, std::size_t i, std::size_t j) {
  return 2 * ((i % n) + (j % n) * n);
}

std::size_t torus_col_edge(std::size_t n, std::size_t i, std::size_t j) {
  return 2 * ((i % n) + (j % n) * n) + 1;
}

EdgeVector torus_small_square(const OrientedGraph& g, std::size_t n,
                              std::size_t i, std::size_t j) {
  EdgeVector s(g.edge_count());
  s[torus_row_edge(n, i, j)] += 1;
  s[torus_col_edge(n, i + 1, j)] += 1;
  s[torus_row_edge(n, i, j + 1)] -= 1;
  s[torus_col_edge(n, i, j)] -= 1;
  return s;
}

EdgeVector torus_row_cycle(const OrientedGraph& g, std::size_t n) {
  EdgeVector r(g.edge_count());
  for (std::size_t i = 0; i < n; ++i) r[torus_row_edge(n, i, 0)] = 1;
  return r;
}

EdgeVector torus_col_cycle(const OrientedGraph& g, std::size_t n) {
  EdgeVector k(g.edge_count());
  for (std::size_t j = 0; j < n; ++j) k[torus_col_edge(n, 0, j)] = 1;
  return k;
}

}  // namespace cyclespace
