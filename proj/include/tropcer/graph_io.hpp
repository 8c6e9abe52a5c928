#pragma once

/**
 * @file graph_io.hpp
 * @brief JSON graph documents, point/divisor mini-syntax, serialization.
 *
 * Graph document schema:
 *   {
 *     "vertices": ["p", "q", ...],
 *     "edges": [{"id": 1, "src": "p", "dst": "q", "length": "7/2"}, ...],
 *     "basepoint": {"vertex": "p"} | {"edge": 1, "offset": "1/3"}   (optional)
 *   }
 * Lengths are positive rationals written as "num/den" strings (or plain
 * integers). Point syntax: "v:NAME" and "e:ID@NUM/DEN"; divisor syntax:
 * comma-separated points with an optional integer multiplicity suffix "*M".
 */

#include <optional>
#include <string>

#include <json.hpp>

#include "tropcer/abel_jacobi.hpp"
#include "tropcer/multigraph.hpp"
#include "tropcer/rational.hpp"

namespace tropcer {

struct GraphDocument {
  MetricGraph graph;
  std::optional<DivisorPoint> basepoint;
};

/// Parse and validate a graph document; error messages carry field locations.
GraphDocument parse_graph_document(const std::string& text);

/// "v:NAME" or "e:ID@NUM/DEN".
DivisorPoint parse_point(const std::string& text);
std::string point_str(const DivisorPoint& point);

/// Comma-separated "point" or "point*MULT" terms.
Divisor parse_divisor(const std::string& text);

nlohmann::json graph_to_json(const MetricGraph& graph);

}  // namespace tropcer
