#pragma once

#include <string>

#include "cyclespace/graph.hpp"
#include "cyclespace/transport.hpp"

namespace cyclespace {

// {"vertices": N, "edges": [[tail, head, "p/q"], ...]}; the weight entry is
// optional and defaults to 1.
OrientedGraph graph_from_json(const std::string& text);
std::string graph_to_json(const OrientedGraph& g);

// {"points": N, "d": [["p/q", ...], ...]}
MetricSpace metric_from_json(const std::string& text);

// {"values": {"vertex index": "p/q", ...}}; omitted vertices are 0.
TransportationProblem problem_from_json(const std::string& text,
                                        std::size_t vertex_count);

std::string read_file(const std::string& path);

}  // namespace cyclespace
