#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cyclespace/cube.hpp"
#include "cyclespace/errors.hpp"
#include "cyclespace/graph.hpp"
#include "cyclespace/invariant.hpp"
#include "cyclespace/symmetry.hpp"
#include "cyclespace/transport.hpp"

namespace py = pybind11;
using namespace cyclespace;

namespace {

Rational from_py(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return rat(h.cast<long>());
  return parse_rational(h.cast<std::string>());
}

Vec vec_from_py(const py::sequence& seq) {
  Vec v;
  for (const auto& item : seq) v.push_back(from_py(item));
  return v;
}

std::vector<std::string> vec_to_py(const Vec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Rational& r : v) out.push_back(to_string(r));
  return out;
}

OrientedGraph make_graph(std::size_t vertices,
                         const std::vector<py::sequence>& edges) {
  std::vector<Edge> list;
  for (const auto& e : edges) {
    Edge edge;
    edge.tail = e[0].cast<std::size_t>();
    edge.head = e[1].cast<std::size_t>();
    edge.weight = e.size() > 2 ? from_py(e[2]) : Rational(1);
    list.push_back(std::move(edge));
  }
  return build_graph(vertices, list);
}

OrientedGraph metric_graph(const std::vector<std::vector<py::object>>& rows) {
  std::size_t n = rows.size();
  RatMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      fail(ErrorCode::BadInput, "distance matrix must be square");
    for (std::size_t j = 0; j < n; ++j) d.at(i, j) = from_py(rows[i][j]);
  }
  return canonical_graph(MetricSpace(std::move(d)));
}

GroupSpec full_group(const OrientedGraph& g) {
  return group_from_automorphisms(g, find_automorphisms(g));
}

py::dict report_dict(const ProjectionReport& rep) {
  py::dict d;
  d["dimension"] = rep.dimension;
  d["p_orth_norm"] = to_string(rep.p_orth_norm);
  d["i_minus_p_orth_norm"] = to_string(rep.i_minus_p_orth_norm);
  d["p_min_norm"] = to_string(rep.p_min_norm);
  d["i_minus_p_min_norm"] = to_string(rep.i_minus_p_min_norm);
  d["unique_minimizer"] = rep.unique_minimizer;
  d["lambda_lip0"] = to_string(rep.lambda_lip0);
  d["trace_value"] = to_string(rep.trace_value);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact cycle-space and transportation-cost computations";

  py::register_exception<Error>(m, "CyclespaceError");

  py::class_<OrientedGraph>(m, "Graph")
      .def_property_readonly("vertex_count", &OrientedGraph::vertex_count)
      .def_property_readonly("edge_count", &OrientedGraph::edge_count)
      .def_property_readonly("edges", [](const OrientedGraph& g) {
        std::vector<py::tuple> out;
        for (const Edge& e : g.edges())
          out.push_back(py::make_tuple(e.tail, e.head, to_string(e.weight)));
        return out;
      });

  m.def("graph", &make_graph, py::arg("vertices"), py::arg("edges"),
        "Simple connected graph from [tail, head, weight?] triples");
  m.def("torus", [](std::size_t n, std::size_t m) { return torus_graph(n, m); },
        py::arg("n"), py::arg("m") = 2);
  m.def("hamming", [](std::size_t n, std::size_t m) {
          return hamming_graph(n, m);
        }, py::arg("n"), py::arg("m"));
  m.def("canonical_graph", &metric_graph, py::arg("distances"),
        "Canonical weighted graph of a finite metric space");

  m.def("cycle_space_dimension", [](const OrientedGraph& g) {
    return g.edge_count() - g.vertex_count() + 1;
  });
  m.def("cycle_basis", [](const OrientedGraph& g) {
    std::vector<std::vector<std::string>> out;
    for (const Vec& v : cycle_basis(g)) out.push_back(vec_to_py(v));
    return out;
  });
  m.def("cut_basis", [](const OrientedGraph& g) {
    std::vector<std::vector<std::string>> out;
    for (const Vec& v : cut_basis(g)) out.push_back(vec_to_py(v));
    return out;
  });

  m.def("tc_norm", [](const OrientedGraph& g, const py::sequence& values) {
          TransportationProblem f{vec_from_py(values)};
          TransportPlan plan = tc_norm(f, g);
          return py::make_tuple(to_string(plan.cost), vec_to_py(plan.flow));
        }, py::arg("graph"), py::arg("values"),
        "Transportation cost and an optimal flow");
  m.def("wasserstein1", [](const OrientedGraph& g, const py::sequence& mu,
                           const py::sequence& nu) {
          return to_string(wasserstein1(vec_from_py(mu), vec_from_py(nu), g));
        }, py::arg("graph"), py::arg("mu"), py::arg("nu"));
  m.def("dual_certificate", [](const OrientedGraph& g,
                               const py::sequence& values) {
          TransportationProblem f{vec_from_py(values)};
          return vec_to_py(dual_certificate(f, g).potentials);
        }, py::arg("graph"), py::arg("values"),
        "Optimal 1-Lipschitz potentials vanishing at vertex 0");

  m.def("automorphism_count", [](const OrientedGraph& g) {
    return find_automorphisms(g).size();
  });
  m.def("invariant_dimension", [](const OrientedGraph& g) {
    return commutant_dimension(g, full_group(g));
  }, "Dimension of the space of invariant projections onto the cycle space");

  m.def("torus_report", [](std::size_t n) {
    OrientedGraph g = torus_graph(n, 2);
    return report_dict(projection_report(g, torus_generators(n)));
  }, py::arg("n"), "Projection norms for the n x n torus");

  m.def("cube_q_norm", [](std::size_t n) { return to_string(q_norm(n)); });
  m.def("cube_p_norm", [](std::size_t n) { return to_string(p_norm(n)); });
  m.def("cube_coefficients", [](std::size_t n) {
    CubeCoefficients cc = cube_coefficients(n);
    py::dict d;
    d["a"] = vec_to_py(cc.a);
    d["b"] = vec_to_py(cc.b);
    d["c"] = vec_to_py(cc.c);
    return d;
  });
}
