#include "tropcer/abel_jacobi.hpp"

#include <map>
#include <stdexcept>

namespace tropcer {

DivisorPoint DivisorPoint::at_vertex(std::string v) {
  DivisorPoint p;
  p.is_vertex = true;
  p.vertex = std::move(v);
  return p;
}

DivisorPoint DivisorPoint::on_edge_at(EdgeId e, Rat off) {
  DivisorPoint p;
  p.is_vertex = false;
  p.edge = e;
  p.offset = std::move(off);
  return p;
}

bool operator==(const DivisorPoint& a, const DivisorPoint& b) {
  if (a.is_vertex != b.is_vertex) return false;
  if (a.is_vertex) return a.vertex == b.vertex;
  return a.edge == b.edge && a.offset == b.offset;
}

bool operator<(const DivisorPoint& a, const DivisorPoint& b) {
  if (a.is_vertex != b.is_vertex) return a.is_vertex && !b.is_vertex;
  if (a.is_vertex) return a.vertex < b.vertex;
  if (a.edge != b.edge) return a.edge < b.edge;
  return a.offset < b.offset;
}

Divisor::Divisor(const std::vector<std::pair<DivisorPoint, Int>>& terms) {
  std::map<DivisorPoint, Int> acc;
  for (const auto& [pt, m] : terms) acc[pt] += m;
  for (const auto& [pt, m] : acc) {
    if (m != 0) terms_.emplace_back(pt, m);
  }
}

Int Divisor::degree() const {
  Int d = 0;
  for (const auto& [pt, m] : terms_) d += m;
  return d;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  std::vector<std::pair<DivisorPoint, Int>> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return Divisor(all);
}

Divisor operator-(const Divisor& a, const Divisor& b) {
  std::vector<std::pair<DivisorPoint, Int>> all = a.terms_;
  for (const auto& [pt, m] : b.terms_) all.emplace_back(pt, -m);
  return Divisor(all);
}

Divisor tent_divisor(const MetricGraph& graph, EdgeId e, const Rat& a, const Rat& b,
                     const Rat& c) {
  const Edge& edge = graph.edge(e);
  if (!(0 < a && a < b && b < c && c < edge.length)) {
    throw GraphError("tent break points must satisfy 0 < a < b < c < length");
  }
  if (b - a != c - b) {
    throw GraphError("tent break points must be evenly spaced (b - a = c - b)");
  }
  return Divisor({{DivisorPoint::on_edge_at(e, a), 1},
                  {DivisorPoint::on_edge_at(e, b), -2},
                  {DivisorPoint::on_edge_at(e, c), 1}});
}

namespace {

void add_tree_path(const JacobianData& jac, const SpanningTree& route,
                   const std::string& target, RVec& vec) {
  const int g = jac.genus();
  for (const PathStep& step : route.tree_path(route.root(), target)) {
    const Rat& le = jac.edge_lengths().at(step.edge);
    const IVec& row = jac.b_rows().at(step.edge);
    for (int t = 0; t < g; ++t) {
      if (row[t] != 0) vec[t] += Rat(step.sign) * le * row[t];
    }
  }
}

RVec rep_routed(const JacobianData& jac, const SpanningTree& route, const Divisor& divisor) {
  if (divisor.degree() != 0) {
    throw GraphError("Abel-Jacobi map requires a degree-zero divisor");
  }
  const MetricGraph& graph = jac.tree().graph();
  const int g = jac.genus();
  RVec total(g, Rat(0));
  for (const auto& [pt, m] : divisor.terms()) {
    RVec vec(g, Rat(0));
    if (pt.is_vertex) {
      if (!graph.has_vertex(pt.vertex)) {
        throw GraphError("unknown vertex in divisor: " + pt.vertex);
      }
      add_tree_path(jac, route, pt.vertex, vec);
    } else {
      const Edge& e = graph.edge(pt.edge);
      if (pt.offset < 0 || pt.offset > e.length) {
        throw GraphError("divisor point offset outside edge " + int_str(e.id));
      }
      add_tree_path(jac, route, e.src, vec);
      const IVec& row = jac.b_rows().at(pt.edge);
      for (int t = 0; t < g; ++t) {
        if (row[t] != 0) vec[t] += pt.offset * row[t];
      }
    }
    for (int t = 0; t < g; ++t) total[t] += Rat(m) * vec[t];
  }
  return total;
}

}  // namespace

RVec abel_jacobi_rep(const JacobianData& jac, const Divisor& divisor) {
  return rep_routed(jac, jac.tree(), divisor);
}

RVec abel_jacobi_rep_via(const JacobianData& jac, const SpanningTree& route,
                         const Divisor& divisor) {
  return rep_routed(jac, route, divisor);
}

AJResult abel_jacobi(const JacobianData& jac, const Divisor& divisor) {
  AJResult r;
  r.rep = abel_jacobi_rep(jac, divisor);
  const Quotient q = jac.jac_quotient();
  r.reduced = q.reduce(r.rep);
  r.is_zero = q.is_zero(r.rep);
  r.torsion = q.torsion_order(r.rep);
  return r;
}

}  // namespace tropcer
