#include "cyclespace/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "cyclespace/errors.hpp"

namespace cyclespace {

GraphAutomorphism compose(const GraphAutomorphism& outer,
                          const GraphAutomorphism& inner) {
  GraphAutomorphism out;
  out.permutation.resize(inner.permutation.size());
  for (std::size_t v = 0; v < inner.permutation.size(); ++v)
    out.permutation[v] = outer.permutation[inner.permutation[v]];
  return out;
}

GraphAutomorphism inverse(const GraphAutomorphism& g) {
  GraphAutomorphism out;
  out.permutation.resize(g.permutation.size());
  for (std::size_t v = 0; v < g.permutation.size(); ++v)
    out.permutation[g.permutation[v]] = v;
  return out;
}

SignedEdgeMap SignedEdgeMap::identity_map(std::size_t edge_count) {
  SignedEdgeMap m;
  m.image.resize(edge_count);
  m.sign.assign(edge_count, 1);
  for (std::size_t e = 0; e < edge_count; ++e) m.image[e] = e;
  return m;
}

SignedEdgeMap SignedEdgeMap::negation(std::size_t edge_count) {
  SignedEdgeMap m = identity_map(edge_count);
  m.sign.assign(edge_count, -1);
  return m;
}

Vec SignedEdgeMap::apply(const Vec& x) const {
  Vec y(x.size());
  for (std::size_t e = 0; e < x.size(); ++e)
    if (x[e] != 0) y[image[e]] = sign[e] > 0 ? x[e] : -x[e];
  return y;
}

SignedEdgeMap SignedEdgeMap::after(const SignedEdgeMap& inner) const {
  SignedEdgeMap out;
  out.image.resize(image.size());
  out.sign.resize(image.size());
  for (std::size_t e = 0; e < image.size(); ++e) {
    out.image[e] = image[inner.image[e]];
    out.sign[e] = inner.sign[e] * sign[inner.image[e]];
  }
  return out;
}

SignedEdgeMap SignedEdgeMap::inverted() const {
  SignedEdgeMap out;
  out.image.resize(image.size());
  out.sign.resize(image.size());
  for (std::size_t e = 0; e < image.size(); ++e) {
    out.image[image[e]] = e;
    out.sign[image[e]] = sign[e];
  }
  return out;
}

RatMatrix SignedEdgeMap::matrix() const {
  RatMatrix m(image.size(), image.size());
  for (std::size_t e = 0; e < image.size(); ++e) m.at(image[e], e) = sign[e];
  return m;
}

const std::vector<GraphAutomorphism>& GroupSpec::enumerated() const {
  if (!elements)
    fail(ErrorCode::GroupNotEnumerated, "full group element list not available");
  return *elements;
}

SignedEdgeMap edge_action(const GraphAutomorphism& g,
                          const OrientedGraph& graph) {
  if (g.permutation.size() != graph.vertex_count())
    fail(ErrorCode::NotAnAutomorphism, "permutation size mismatch");
  SignedEdgeMap m;
  m.image.resize(graph.edge_count());
  m.sign.resize(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const Edge& ed = graph.edge(e);
    auto oe = graph.oriented_edge(g(ed.tail), g(ed.head));
    if (!oe)
      fail(ErrorCode::NotAnAutomorphism, "image of an edge is not an edge");
    m.image[e] = oe->first;
    m.sign[e] = oe->second;
  }
  return m;
}

namespace {

std::vector<std::vector<std::size_t>> unweighted_distances(
    const OrientedGraph& g) {
  constexpr std::size_t inf = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> dist(
      g.vertex_count(), std::vector<std::size_t>(g.vertex_count(), inf));
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    auto& d = dist[s];
    d[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t e : g.incident_edges(v)) {
        std::size_t w = g.edge(e).tail == v ? g.edge(e).head : g.edge(e).tail;
        if (d[w] == inf) {
          d[w] = d[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

struct AutoSearch {
  const OrientedGraph& g;
  std::size_t n;
  std::vector<std::vector<bool>> adjacent;
  std::vector<std::size_t> profile;  // partition class per vertex
  std::vector<std::size_t> order;    // assignment order (BFS from 0)
  std::vector<std::size_t> image;
  std::vector<bool> used;
  std::vector<GraphAutomorphism> found;

  explicit AutoSearch(const OrientedGraph& graph) : g(graph), n(graph.vertex_count()) {
    adjacent.assign(n, std::vector<bool>(n, false));
    for (const Edge& e : g.edges())
      adjacent[e.tail][e.head] = adjacent[e.head][e.tail] = true;
    auto dist = unweighted_distances(g);
    std::vector<std::vector<std::size_t>> keys(n);
    for (std::size_t v = 0; v < n; ++v) {
      keys[v] = dist[v];
      std::sort(keys[v].begin(), keys[v].end());
    }
    std::vector<std::vector<std::size_t>> distinct(keys.begin(), keys.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    profile.resize(n);
    for (std::size_t v = 0; v < n; ++v)
      profile[v] = std::lower_bound(distinct.begin(), distinct.end(), keys[v]) -
                   distinct.begin();
    // BFS order keeps every new vertex adjacent to an assigned one
    order.reserve(n);
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (std::size_t e : g.incident_edges(v)) {
        std::size_t w = g.edge(e).tail == v ? g.edge(e).head : g.edge(e).tail;
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    image.assign(n, 0);
    used.assign(n, false);
  }

  void search(std::size_t depth) {
    if (depth == n) {
      found.push_back({image});
      return;
    }
    std::size_t v = order[depth];
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || profile[cand] != profile[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i)
        if (adjacent[v][order[i]] != adjacent[cand][image[order[i]]]) ok = false;
      if (!ok) continue;
      image[v] = cand;
      used[cand] = true;
      search(depth + 1);
      used[cand] = false;
    }
  }
};

}  // namespace

std::vector<GraphAutomorphism> find_automorphisms(const OrientedGraph& g,
                                                  std::size_t vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    fail(ErrorCode::SizeCapExceeded, "graph too large for automorphism search");
  AutoSearch s(g);
  s.search(0);
  std::sort(s.found.begin(), s.found.end(),
            [](const GraphAutomorphism& a, const GraphAutomorphism& b) {
              return a.permutation < b.permutation;
            });
  return s.found;
}

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<std::size_t>& p) const {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t x : p) {
      h ^= x + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::vector<GraphAutomorphism> group_closure(
    const std::vector<GraphAutomorphism>& generators, std::size_t cap) {
  if (generators.empty()) return {};
  std::size_t n = generators[0].permutation.size();
  GraphAutomorphism id;
  id.permutation.resize(n);
  for (std::size_t v = 0; v < n; ++v) id.permutation[v] = v;
  std::unordered_set<std::vector<std::size_t>, PermHash> seen;
  std::vector<GraphAutomorphism> elements{id};
  seen.insert(id.permutation);
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    GraphAutomorphism cur = elements[frontier.front()];
    frontier.pop_front();
    for (const GraphAutomorphism& gen : generators) {
      GraphAutomorphism next = compose(gen, cur);
      if (seen.insert(next.permutation).second) {
        if (elements.size() >= cap)
          fail(ErrorCode::SizeCapExceeded, "group closure exceeds cap");
        elements.push_back(next);
        frontier.push_back(elements.size() - 1);
      }
    }
  }
  std::sort(elements.begin(), elements.end(),
            [](const GraphAutomorphism& a, const GraphAutomorphism& b) {
              return a.permutation < b.permutation;
            });
  return elements;
}

std::vector<GraphAutomorphism> stabilizer(
    const std::vector<GraphAutomorphism>& elements, std::size_t vertex) {
  std::vector<GraphAutomorphism> out;
  for (const auto& g : elements)
    if (g.permutation[vertex] == vertex) out.push_back(g);
  return out;
}

bool verify_edge_transitive(const OrientedGraph& g,
                            const std::vector<SignedEdgeMap>& edge_generators) {
  if (g.edge_count() == 0) return true;
  std::vector<bool> reached(g.edge_count(), false);
  std::deque<std::size_t> queue{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    std::size_t e = queue.front();
    queue.pop_front();
    for (const SignedEdgeMap& m : edge_generators) {
      for (std::size_t img : {m.image[e], m.inverted().image[e]})
        if (!reached[img]) {
          reached[img] = true;
          ++count;
          queue.push_back(img);
        }
    }
  }
  return count == g.edge_count();
}

GraphAutomorphism torus4_exceptional() {
  const std::size_t n = 4;
  GraphAutomorphism phi;
  phi.permutation.resize(16);
  auto idx = [&](std::size_t i, std::size_t j) { return i % n + (j % n) * n; };
  for (std::size_t v = 0; v < 16; ++v) phi.permutation[v] = v;
  auto map = [&](std::size_t i1, std::size_t j1, std::size_t i2,
                 std::size_t j2) { phi.permutation[idx(i1, j1)] = idx(i2, j2); };
  map(2, 0, 1, 3);
  map(3, 0, 0, 3);
  map(2, 1, 1, 2);
  map(3, 1, 0, 2);
  map(0, 2, 3, 1);
  map(1, 2, 2, 1);
  map(0, 3, 3, 0);
  map(1, 3, 2, 0);
  return phi;
}

namespace {

GroupSpec finish_group(const OrientedGraph& graph,
                       std::vector<GraphAutomorphism> gens) {
  GroupSpec spec;
  spec.vertex_generators = std::move(gens);
  for (const auto& g : spec.vertex_generators)
    spec.edge_generators.push_back(edge_action(g, graph));
  spec.elements = group_closure(spec.vertex_generators);
  spec.edge_transitive = verify_edge_transitive(graph, spec.edge_generators);
  spec.includes_negation = true;
  return spec;
}

}  // namespace

GroupSpec torus_generators(std::size_t n, std::size_t m) {
  OrientedGraph graph = torus_graph(n, m);
  std::vector<GraphAutomorphism> gens;
  if (n == 2) {
    // C4 on vertices (0,0),(1,0),(0,1),(1,1): rotation and a reflection
    gens.push_back({{1, 3, 0, 2}});
    gens.push_back({{0, 2, 1, 3}});
    return finish_group(graph, std::move(gens));
  }
  std::size_t count = graph.vertex_count();
  auto perm_from = [&](auto&& f) {
    GraphAutomorphism g;
    g.permutation.resize(count);
    for (std::size_t v = 0; v < count; ++v) {
      auto c = vertex_to_coords(v, n, m);
      g.permutation[v] = coords_to_vertex(f(c), n);
    }
    return g;
  };
  for (std::size_t k = 0; k < m; ++k)
    gens.push_back(perm_from([&](std::vector<std::size_t> c) {
      c[k] = (c[k] + 1) % n;
      return c;
    }));
  gens.push_back(perm_from([&](std::vector<std::size_t> c) {
    std::swap(c[0], c[1]);
    return c;
  }));
  if (m > 2)
    gens.push_back(perm_from([&](std::vector<std::size_t> c) {
      std::rotate(c.begin(), c.begin() + 1, c.end());
      return c;
    }));
  gens.push_back(perm_from([&](std::vector<std::size_t> c) {
    c[0] = (n - c[0]) % n;
    return c;
  }));
  if (n == 4) {
    GraphAutomorphism phi2 = torus4_exceptional();
    gens.push_back(perm_from([&](std::vector<std::size_t> c) {
      std::size_t img = phi2.permutation[c[0] + 4 * c[1]];
      c[0] = img % 4;
      c[1] = img / 4;
      return c;
    }));
  }
  return finish_group(graph, std::move(gens));
}

GroupSpec hamming_generators(std::size_t n, std::size_t m) {
  OrientedGraph graph = hamming_graph(n, m);
  std::size_t count = graph.vertex_count();
  auto perm_from = [&](auto&& f) {
    GraphAutomorphism g;
    g.permutation.resize(count);
    for (std::size_t v = 0; v < count; ++v) {
      auto c = vertex_to_coords(v, n, m);
      g.permutation[v] = coords_to_vertex(f(c), n);
    }
    return g;
  };
  std::vector<GraphAutomorphism> gens;
  // alphabet permutations on coordinate 0
  gens.push_back(perm_from([&](std::vector<std::size_t> c) {
    if (c[0] < 2) c[0] ^= 1;
    return c;
  }));
  if (n > 2)
    gens.push_back(perm_from([&](std::vector<std::size_t> c) {
      c[0] = (c[0] + 1) % n;
      return c;
    }));
  if (m > 1) {
    gens.push_back(perm_from([&](std::vector<std::size_t> c) {
      std::swap(c[0], c[1]);
      return c;
    }));
    if (m > 2)
      gens.push_back(perm_from([&](std::vector<std::size_t> c) {
        std::rotate(c.begin(), c.begin() + 1, c.end());
        return c;
      }));
  }
  return finish_group(graph, std::move(gens));
}

GroupSpec group_from_automorphisms(const OrientedGraph& g,
                                   std::vector<GraphAutomorphism> autos) {
  GroupSpec spec;
  spec.vertex_generators = autos;
  for (const auto& a : spec.vertex_generators)
    spec.edge_generators.push_back(edge_action(a, g));
  spec.elements = std::move(autos);
  spec.edge_transitive = verify_edge_transitive(g, spec.edge_generators);
  spec.includes_negation = true;
  return spec;
}

}  // namespace cyclespace
