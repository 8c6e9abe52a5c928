#include "tropcer/graph_io.hpp"

#include <vector>

namespace tropcer {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw GraphError(where + ": " + what);
}

Rat parse_length(const nlohmann::json& v, const std::string& where) {
  Rat r;
  if (v.is_number_integer()) {
    r = Rat(Int(v.get<long long>()));
  } else if (v.is_string()) {
    try {
      r = parse_rat(v.get<std::string>());
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
  } else {
    fail(where, "expected an integer or a \"num/den\" string");
  }
  if (r <= 0) fail(where, "length must be positive");
  return r;
}

}  // namespace

GraphDocument parse_graph_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw GraphError("document: expected a JSON object");

  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    fail("vertices", "required array of vertex names");
  }
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const auto& v = doc["vertices"][i];
    if (!v.is_string()) fail("vertices[" + std::to_string(i) + "]", "expected a string");
    vertices.push_back(v.get<std::string>());
  }

  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    fail("edges", "required array of edge objects");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const auto& e = doc["edges"][i];
    if (!e.is_object()) fail(where, "expected an object {id, src, dst, length}");
    for (const char* key : {"id", "src", "dst", "length"}) {
      if (!e.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
    }
    if (!e["id"].is_number_integer()) fail(where + ".id", "expected an integer");
    if (!e["src"].is_string()) fail(where + ".src", "expected a vertex name string");
    if (!e["dst"].is_string()) fail(where + ".dst", "expected a vertex name string");
    edges.push_back(Edge{e["id"].get<EdgeId>(), e["src"].get<std::string>(),
                         e["dst"].get<std::string>(),
                         parse_length(e["length"], where + ".length")});
  }

  std::optional<DivisorPoint> basepoint;
  if (doc.contains("basepoint")) {
    const auto& b = doc["basepoint"];
    if (!b.is_object()) fail("basepoint", "expected {vertex} or {edge, offset}");
    if (b.contains("vertex")) {
      if (!b["vertex"].is_string()) fail("basepoint.vertex", "expected a string");
      basepoint = DivisorPoint::at_vertex(b["vertex"].get<std::string>());
    } else if (b.contains("edge")) {
      if (!b["edge"].is_number_integer()) fail("basepoint.edge", "expected an integer id");
      if (!b.contains("offset")) fail("basepoint", "missing \"offset\"");
      basepoint = DivisorPoint::on_edge_at(b["edge"].get<EdgeId>(),
                                           parse_length(b["offset"], "basepoint.offset"));
    } else {
      fail("basepoint", "expected {vertex} or {edge, offset}");
    }
  }

  // MetricGraph validation errors (duplicate ids, dangling refs, nonpositive
  // lengths, disconnected graph) surface as GraphError from the constructor.
  return GraphDocument{MetricGraph(std::move(vertices), std::move(edges)),
                       std::move(basepoint)};
}

DivisorPoint parse_point(const std::string& text) {
  if (text.rfind("v:", 0) == 0) {
    const std::string name = text.substr(2);
    if (name.empty()) throw GraphError("invalid point \"" + text + "\": empty vertex name");
    return DivisorPoint::at_vertex(name);
  }
  if (text.rfind("e:", 0) == 0) {
    const auto at = text.find('@');
    if (at == std::string::npos || at <= 2 || at + 1 >= text.size()) {
      throw GraphError("invalid point \"" + text + "\": expected e:ID@NUM/DEN");
    }
    try {
      const Int id = parse_int_strict(text.substr(2, at - 2));
      return DivisorPoint::on_edge_at(static_cast<EdgeId>(id.convert_to<long long>()),
                                      parse_rat(text.substr(at + 1)));
    } catch (const GraphError&) {
      throw;
    } catch (const std::exception& e) {
      throw GraphError("invalid point \"" + text + "\": " + e.what());
    }
  }
  throw GraphError("invalid point \"" + text + "\": expected v:NAME or e:ID@NUM/DEN");
}

std::string point_str(const DivisorPoint& point) {
  if (point.is_vertex) return "v:" + point.vertex;
  return "e:" + int_str(Int(point.edge)) + "@" + rat_str(point.offset);
}

Divisor parse_divisor(const std::string& text) {
  std::vector<std::pair<DivisorPoint, Int>> terms;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string term = text.substr(start, comma - start);
    if (term.empty()) {
      throw GraphError("invalid divisor \"" + text + "\": empty term");
    }
    Int mult = 1;
    const auto star = term.rfind('*');
    if (star != std::string::npos) {
      try {
        mult = parse_int_strict(term.substr(star + 1));
      } catch (const std::exception& e) {
        throw GraphError("invalid divisor term \"" + term + "\": " + e.what());
      }
      term = term.substr(0, star);
    }
    terms.emplace_back(parse_point(term), mult);
    start = comma + 1;
  }
  if (terms.empty()) throw GraphError("empty divisor");
  return Divisor(terms);
}

nlohmann::json graph_to_json(const MetricGraph& graph) {
  nlohmann::json doc;
  doc["vertices"] = graph.vertices();
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : graph.edges()) {
    nlohmann::json je;
    je["id"] = e.id;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["length"] = rat_str(e.length);
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

}  // namespace tropcer
