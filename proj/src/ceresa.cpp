#include "tropcer/ceresa.hpp"

#include <algorithm>
#include <set>

namespace tropcer {

PointedModel build_pointed_model(const MetricGraph& graph, const std::vector<EdgeId>& tree,
                                 const std::vector<DivisorPoint>& points) {
  std::vector<std::pair<EdgeId, Rat>> cuts;
  for (const auto& pt : points) {
    if (pt.is_vertex) {
      if (!graph.has_vertex(pt.vertex)) {
        throw GraphError("unknown basepoint vertex: " + pt.vertex);
      }
      continue;
    }
    const Edge& e = graph.edge(pt.edge);
    if (pt.offset < 0 || pt.offset > e.length) {
      throw GraphError("basepoint offset outside edge " + int_str(e.id));
    }
    if (pt.offset != 0 && pt.offset != e.length) cuts.emplace_back(pt.edge, pt.offset);
  }

  PointedModel model{graph, tree, {}};
  std::vector<std::string> cut_names;
  if (!cuts.empty()) {
    std::set<EdgeId> before;
    for (const auto& e : graph.edges()) before.insert(e.id);
    model.graph = subdivide(graph, cuts, &cut_names);
    for (const auto& e : model.graph.edges()) {
      if (!before.count(e.id)) model.tree.push_back(e.id);
    }
    std::sort(model.tree.begin(), model.tree.end());
  }

  std::size_t next_cut = 0;
  for (const auto& pt : points) {
    if (pt.is_vertex) {
      model.point_names.push_back(pt.vertex);
    } else if (pt.offset == 0) {
      model.point_names.push_back(graph.edge(pt.edge).src);
    } else if (pt.offset == graph.edge(pt.edge).length) {
      model.point_names.push_back(graph.edge(pt.edge).dst);
    } else {
      model.point_names.push_back(cut_names.at(next_cut++));
    }
  }
  return model;
}

namespace {

CeresaResult finish_class(const JacobianData& jac, const Quotient& q, RVec rep,
                          std::string basepoint) {
  CeresaResult r;
  r.genus = jac.genus();
  r.basepoint = std::move(basepoint);
  r.reduced = q.reduce(rep);
  r.is_zero = q.is_zero(rep);
  r.torsion = q.torsion_order(rep);
  r.rep = std::move(rep);
  if (r.genus < 2) r.note = "trivial: the (2,1) tensor space vanishes in genus < 2";
  return r;
}

}  // namespace

CeresaResult ceresa_pointed(const MetricGraph& graph, const std::vector<EdgeId>& tree,
                            const DivisorPoint& basepoint) {
  const PointedModel model = build_pointed_model(graph, tree, {basepoint});
  const JacobianData jac(model.graph.spanning_tree(model.tree));
  auto rep = jac.pointed_rep(model.point_names.at(0));
  return finish_class(jac, jac.jh_quotient(2, 1), std::move(rep.second),
                      model.point_names.at(0));
}

CeresaResult ceresa_unpointed(const MetricGraph& graph, const std::vector<EdgeId>& tree) {
  const JacobianData jac(graph.spanning_tree(tree));
  auto rep = jac.unpointed_rep();
  return finish_class(jac, jac.jhbar_quotient(), std::move(rep.second), std::string());
}

WClassResult ceresa_w(const MetricGraph& graph, const std::vector<EdgeId>& tree) {
  const JacobianData jac(graph.spanning_tree(tree));
  auto vrep = jac.pointed_rep(jac.tree().root());
  WClassResult r;
  r.genus = jac.genus();
  r.rep = jac.w_rep(vrep.second, true);
  const Quotient q = jac.q_quotient_30();
  r.reduced = q.reduce(r.rep);
  r.is_zero = q.is_zero(r.rep);
  r.torsion = q.torsion_order(r.rep);
  if (r.genus < 3) r.note = "trivial: the degree-3 wedge space vanishes in genus < 3";
  return r;
}

bool basepoint_dependence_identity(const MetricGraph& graph, const std::vector<EdgeId>& tree,
                                   const DivisorPoint& b1, const DivisorPoint& b2) {
  const PointedModel model = build_pointed_model(graph, tree, {b1, b2});
  const JacobianData jac(model.graph.spanning_tree(model.tree));
  const std::string& v1 = model.point_names.at(0);
  const std::string& v2 = model.point_names.at(1);

  const RVec lhs1 = jac.pointed_rep(v1).second;
  const RVec lhs2 = jac.pointed_rep(v2).second;
  RVec lhs(lhs1.size(), Rat(0));
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] = lhs1[i] - lhs2[i];

  const Divisor d({{DivisorPoint::at_vertex(v1), 1}, {DivisorPoint::at_vertex(v2), -1}});
  RVec aj = abel_jacobi_rep(jac, d);
  for (auto& v : aj) v *= -2;
  const RVec rhs = jac.wedge_with_h10(aj, jac.omega_class().second, +1);

  RVec diff(lhs.size(), Rat(0));
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = lhs[i] - rhs[i];
  return jac.jh_quotient(2, 1).is_zero(diff);
}

TorsionSummary torsion_summary(const MetricGraph& graph, const std::vector<EdgeId>& tree,
                               const DivisorPoint& basepoint) {
  TorsionSummary s;
  const CeresaResult pointed = ceresa_pointed(graph, tree, basepoint);
  s.genus = pointed.genus;
  s.basepoint = pointed.basepoint;
  s.pointed = pointed.torsion;
  s.unpointed = ceresa_unpointed(graph, tree).torsion;
  s.w = ceresa_w(graph, tree).torsion;
  return s;
}

}  // namespace tropcer
