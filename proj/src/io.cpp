#include "cyclespace/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cyclespace/errors.hpp"

namespace cyclespace {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::BadInput, "malformed JSON");
  return j;
}

Rational rational_field(const json& j) {
  if (j.is_number_unsigned())
    return Rational(j.get<unsigned long>());
  if (j.is_number_integer()) return rat(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorCode::BadInput, "expected a rational as \"p/q\" or an integer");
}

std::size_t index_field(const json& j, const char* what) {
  if (!j.is_number_unsigned())
    fail(ErrorCode::BadInput, std::string("expected a nonnegative ") + what);
  return j.get<std::size_t>();
}

}  // namespace

OrientedGraph graph_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    fail(ErrorCode::BadInput, "graph JSON needs \"vertices\" and \"edges\"");
  std::size_t nv = index_field(j["vertices"], "vertex count");
  if (!j["edges"].is_array())
    fail(ErrorCode::BadInput, "\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const json& je : j["edges"]) {
    if (!je.is_array() || je.size() < 2 || je.size() > 3)
      fail(ErrorCode::BadInput, "edge entries are [tail, head] or [tail, head, weight]");
    Edge e;
    e.tail = index_field(je[0], "vertex index");
    e.head = index_field(je[1], "vertex index");
    e.weight = je.size() == 3 ? rational_field(je[2]) : Rational(1);
    edges.push_back(std::move(e));
  }
  return build_graph(nv, edges);
}

std::string graph_to_json(const OrientedGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back({e.tail, e.head, to_string(e.weight)});
  json j{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
  return j.dump();
}

MetricSpace metric_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("points") || !j.contains("d"))
    fail(ErrorCode::BadInput, "metric JSON needs \"points\" and \"d\"");
  std::size_t np = index_field(j["points"], "point count");
  if (!j["d"].is_array() || j["d"].size() != np)
    fail(ErrorCode::BadInput, "\"d\" must be an array of one row per point");
  RatMatrix d(np, np);
  for (std::size_t i = 0; i < np; ++i) {
    const json& row = j["d"][i];
    if (!row.is_array() || row.size() != np)
      fail(ErrorCode::BadInput, "distance rows must have one entry per point");
    for (std::size_t k = 0; k < np; ++k) d.at(i, k) = rational_field(row[k]);
  }
  return MetricSpace(std::move(d));
}

TransportationProblem problem_from_json(const std::string& text,
                                        std::size_t vertex_count) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("values") || !j["values"].is_object())
    fail(ErrorCode::BadInput, "problem JSON needs a \"values\" object");
  TransportationProblem f;
  f.values.assign(vertex_count, Rational(0));
  for (const auto& [key, value] : j["values"].items()) {
    std::size_t v = 0;
    try {
      std::size_t pos = 0;
      v = std::stoul(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail(ErrorCode::BadInput, "vertex keys must be nonnegative integers");
    }
    if (v >= vertex_count)
      fail(ErrorCode::BadInput, "vertex index out of range: " + key);
    f.values[v] = rational_field(value);
  }
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::BadInput, "cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace cyclespace
