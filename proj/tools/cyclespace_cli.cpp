#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclespace/cube.hpp"
#include "cyclespace/errors.hpp"
#include "cyclespace/graph.hpp"
#include "cyclespace/invariant.hpp"
#include "cyclespace/io.hpp"
#include "cyclespace/symmetry.hpp"
#include "cyclespace/transport.hpp"

namespace {

using cyclespace::Rational;
using nlohmann::json;

struct Options {
  std::string format = "json";
  int decimal = 0;
  std::size_t vertex_cap = 256;
  std::size_t group_cap = 1000000;
};

Options g_opts;

void apply_env_caps(Options& o) {
  const char* env = std::getenv("CYCLESPACE_CAPS");
  if (!env) return;
  std::string s(env);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t eq = item.find('=');
    if (eq != std::string::npos) {
      std::string key = item.substr(0, eq);
      unsigned long value = std::stoul(item.substr(eq + 1));
      if (key == "vertices") o.vertex_cap = value;
      if (key == "group") o.group_cap = value;
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
}

void put_rational(json& j, const std::string& key, const Rational& r) {
  j[key] = cyclespace::to_string(r);
  if (g_opts.decimal > 0)
    j[key + "_approx"] = cyclespace::to_decimal_string(r, g_opts.decimal);
}

void emit(const json& j) {
  if (g_opts.format == "csv") {
    for (const auto& [key, value] : j.items()) {
      std::cout << key << ",";
      if (value.is_string())
        std::cout << value.get<std::string>();
      else
        std::cout << value.dump();
      std::cout << "\n";
    }
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

cyclespace::GroupSpec graph_group(const cyclespace::OrientedGraph& g) {
  return cyclespace::group_from_automorphisms(
      g, cyclespace::find_automorphisms(g, g_opts.vertex_cap));
}

void check_torus_cap(std::size_t n, std::size_t m) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < m; ++i) {
    count *= n;
    if (count > g_opts.vertex_cap)
      cyclespace::fail(cyclespace::ErrorCode::SizeCapExceeded,
                       "vertex count exceeds cap");
  }
}

json torus_row(std::size_t n) {
  cyclespace::OrientedGraph g = cyclespace::torus_graph(n, 2);
  cyclespace::GroupSpec group = cyclespace::torus_generators(n);
  cyclespace::ProjectionReport rep = cyclespace::projection_report(g, group);
  json row;
  row["n"] = n;
  put_rational(row, "p_orth_norm", rep.p_orth_norm);
  put_rational(row, "i_minus_p_orth_norm", rep.i_minus_p_orth_norm);
  row["dim"] = rep.dimension;
  put_rational(row, "p_min_norm", rep.p_min_norm);
  put_rational(row, "i_minus_p_min_norm", rep.i_minus_p_min_norm);
  put_rational(row, "lambda_lip0", rep.lambda_lip0);
  row["unique_minimizer"] = rep.unique_minimizer;
  return row;
}

int cmd_torus_table(std::size_t n_max) {
  json rows = json::array();
  for (std::size_t n = 2; n <= n_max; ++n) {
    check_torus_cap(n, 2);
    rows.push_back(torus_row(n));
  }
  if (g_opts.format == "csv") {
    std::cout << "n,p_orth_norm,i_minus_p_orth_norm,dim,p_min_norm,"
                 "i_minus_p_min_norm,lambda_lip0,unique_minimizer\n";
    for (const json& r : rows) {
      std::cout << r["n"] << "," << r["p_orth_norm"].get<std::string>() << ","
                << r["i_minus_p_orth_norm"].get<std::string>() << ","
                << r["dim"] << "," << r["p_min_norm"].get<std::string>() << ","
                << r["i_minus_p_min_norm"].get<std::string>() << ","
                << r["lambda_lip0"].get<std::string>() << ","
                << (r["unique_minimizer"].get<bool>() ? "true" : "false")
                << "\n";
    }
  } else {
    emit(json{{"rows", rows}});
  }
  return 0;
}

int cmd_torus_min(std::size_t n) {
  check_torus_cap(n, 2);
  cyclespace::OrientedGraph g = cyclespace::torus_graph(n, 2);
  cyclespace::GroupSpec group = cyclespace::torus_generators(n);
  cyclespace::ProjectionFamily family = cyclespace::commutant_family(g, group);
  cyclespace::MinimizeResult min = cyclespace::minimize_l1(family, g, group);
  cyclespace::RatMatrix residual =
      cyclespace::RatMatrix::identity(g.edge_count()) - min.p_min;
  json out;
  out["dim"] = family.dimension();
  put_rational(out, "p_min_norm", min.norm);
  put_rational(out, "i_minus_p_min", cyclespace::l1_operator_norm(residual));
  out["unique_minimizer"] = min.unique_minimizer;
  json params = json::array();
  for (const Rational& p : min.parameters) params.push_back(cyclespace::to_string(p));
  out["parameters"] = params;
  emit(out);
  return 0;
}

int cmd_invariant_dim(const std::string& graph_path) {
  cyclespace::OrientedGraph g =
      cyclespace::graph_from_json(cyclespace::read_file(graph_path));
  if (g.vertex_count() > g_opts.vertex_cap)
    cyclespace::fail(cyclespace::ErrorCode::SizeCapExceeded,
                     "vertex count exceeds cap");
  json out;
  out["dimension"] = cyclespace::commutant_dimension(g, graph_group(g));
  emit(out);
  return 0;
}

int cmd_uniqueness(const std::string& family, std::size_t n, std::size_t m) {
  cyclespace::GroupSpec group;
  std::optional<cyclespace::OrientedGraph> g;
  if (family == "torus") {
    check_torus_cap(n, m);
    g = cyclespace::torus_graph(n, m);
    group = cyclespace::torus_generators(n, m);
  } else if (family == "hamming") {
    g = cyclespace::hamming_graph(n, m, g_opts.vertex_cap);
    group = cyclespace::hamming_generators(n, m);
  } else if (family == "cube") {
    g = cyclespace::hamming_graph(2, n, g_opts.vertex_cap);
    group = cyclespace::hamming_generators(2, n);
  } else {
    cyclespace::fail(cyclespace::ErrorCode::BadInput,
                     "family must be torus, hamming, or cube");
  }
  std::size_t dim = cyclespace::commutant_dimension(*g, group);
  json out;
  out["dimension"] = dim;
  out["unique"] = dim == 0;
  emit(out);
  return 0;
}

int cmd_tc(const std::string& graph_path, const std::string& problem_path,
           bool dual) {
  cyclespace::OrientedGraph g =
      cyclespace::graph_from_json(cyclespace::read_file(graph_path));
  cyclespace::TransportationProblem f = cyclespace::problem_from_json(
      cyclespace::read_file(problem_path), g.vertex_count());
  cyclespace::TransportPlan plan = cyclespace::tc_norm(f, g);
  json out;
  put_rational(out, "norm", plan.cost);
  json flow = json::array();
  for (const Rational& x : plan.flow) flow.push_back(cyclespace::to_string(x));
  out["flow"] = flow;
  if (dual) {
    cyclespace::LipschitzWitness w = cyclespace::dual_certificate(f, g);
    Rational pairing = cyclespace::dot(f.values, w.potentials);
    if (pairing != plan.cost)
      cyclespace::fail(cyclespace::ErrorCode::IdentityViolation,
                       "duality gap is nonzero");
    json witness = json::array();
    for (const Rational& p : w.potentials)
      witness.push_back(cyclespace::to_string(p));
    out["witness"] = witness;
  }
  emit(out);
  return 0;
}

int cmd_wasserstein(const std::string& graph_path, const std::string& mu_path,
                    const std::string& nu_path) {
  cyclespace::OrientedGraph g =
      cyclespace::graph_from_json(cyclespace::read_file(graph_path));
  cyclespace::Vec mu = cyclespace::problem_from_json(
                           cyclespace::read_file(mu_path), g.vertex_count())
                           .values;
  cyclespace::Vec nu = cyclespace::problem_from_json(
                           cyclespace::read_file(nu_path), g.vertex_count())
                           .values;
  json out;
  put_rational(out, "distance", cyclespace::wasserstein1(mu, nu, g));
  emit(out);
  return 0;
}

int cmd_automorphisms(const std::string& graph_path) {
  cyclespace::OrientedGraph g =
      cyclespace::graph_from_json(cyclespace::read_file(graph_path));
  auto autos = cyclespace::find_automorphisms(g, g_opts.vertex_cap);
  json out;
  out["order"] = autos.size();
  json elements = json::array();
  for (const auto& a : autos) elements.push_back(a.permutation);
  out["elements"] = elements;
  emit(out);
  return 0;
}

int cmd_cube(std::size_t n) {
  Rational q = cyclespace::q_norm(n);
  Rational p = cyclespace::p_norm(n);
  cyclespace::CubeCoefficients cc = cyclespace::cube_coefficients(n);
  json out;
  put_rational(out, "q_norm", q);
  put_rational(out, "p_norm", p);
  json b = json::array();
  for (const Rational& x : cc.b) b.push_back(cyclespace::to_string(x));
  out["b"] = b;
  put_rational(out, "lambda_lip0", q);
  json bounds = json::array();
  bounds.push_back(cyclespace::to_string(q));
  bounds.push_back(cyclespace::to_string(
      Rational(2 * static_cast<unsigned long>(n))));
  out["bm_bounds"] = bounds;
  emit(out);
  return 0;
}

int cmd_canonical_graph(const std::string& metric_path) {
  cyclespace::MetricSpace x =
      cyclespace::metric_from_json(cyclespace::read_file(metric_path));
  cyclespace::OrientedGraph g = cyclespace::canonical_graph(x);
  std::cout << cyclespace::graph_to_json(g) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cycle-space, invariant-projection, and transportation-"
               "cost computations on finite graphs"};
  app.require_subcommand(1);
  apply_env_caps(g_opts);
  app.add_option("--format", g_opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--decimal", g_opts.decimal,
                 "Also print decimal approximations with this many digits");
  app.add_option("--vertex-cap", g_opts.vertex_cap, "Vertex count cap");
  app.add_option("--group-cap", g_opts.group_cap, "Group size cap");

  std::size_t n_max = 5, n = 0, m = 2;
  std::string graph_path, problem_path, metric_path, mu_path, nu_path, family;
  bool dual = false;

  auto* tt = app.add_subcommand("torus-table", "Norm table for the n x n tori");
  tt->add_option("--n-max", n_max, "Largest torus side")->capture_default_str();

  auto* tm = app.add_subcommand("torus-min", "Minimal invariant projection");
  tm->add_option("--n", n, "Torus side")->required();

  auto* id = app.add_subcommand("invariant-dim",
                                "Dimension of the invariant-map space");
  id->add_option("--graph", graph_path, "Graph JSON file")->required();

  auto* un = app.add_subcommand("uniqueness",
                                "Uniqueness of the invariant projection");
  un->add_option("--family", family, "torus, hamming, or cube")->required();
  un->add_option("--n", n, "Cycle length / alphabet size / cube dimension")
      ->required();
  un->add_option("--m", m, "Number of coordinates")->capture_default_str();

  auto* tc = app.add_subcommand("tc", "Transportation cost of a problem");
  tc->add_option("--graph", graph_path, "Graph JSON file")->required();
  tc->add_option("--problem", problem_path, "Problem JSON file")->required();
  tc->add_flag("--dual", dual, "Also emit an optimal Lipschitz witness");

  auto* ws = app.add_subcommand("wasserstein",
                                "Wasserstein-1 distance between measures");
  ws->add_option("--graph", graph_path, "Graph JSON file")->required();
  ws->add_option("--mu", mu_path, "First measure JSON file")->required();
  ws->add_option("--nu", nu_path, "Second measure JSON file")->required();

  auto* au = app.add_subcommand("automorphisms", "Graph automorphism group");
  au->add_option("--graph", graph_path, "Graph JSON file")->required();

  auto* cu = app.add_subcommand("cube", "Hamming cube projection norms");
  cu->add_option("--n", n, "Cube dimension")->required();

  auto* cg = app.add_subcommand("canonical-graph",
                                "Canonical graph of a finite metric space");
  cg->add_option("--metric", metric_path, "Metric JSON file")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    if (tt->parsed()) return cmd_torus_table(n_max);
    if (tm->parsed()) return cmd_torus_min(n);
    if (id->parsed()) return cmd_invariant_dim(graph_path);
    if (un->parsed()) return cmd_uniqueness(family, n, m);
    if (tc->parsed()) return cmd_tc(graph_path, problem_path, dual);
    if (ws->parsed()) return cmd_wasserstein(graph_path, mu_path, nu_path);
    if (au->parsed()) return cmd_automorphisms(graph_path);
    if (cu->parsed()) return cmd_cube(n);
    if (cg->parsed()) return cmd_canonical_graph(metric_path);
  } catch (const cyclespace::Error& e) {
    json err{{"error", {{"code", cyclespace::error_code_name(e.code())},
                        {"message", e.what()}}}};
    std::cout << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err{{"error", {{"code", "Internal"}, {"message", e.what()}}}};
    std::cout << err.dump() << "\n";
    return 2;
  }
  return 1;
}
