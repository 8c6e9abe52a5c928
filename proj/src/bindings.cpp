#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "tropcer/abel_jacobi.hpp"
#include "tropcer/ceresa.hpp"
#include "tropcer/cli_app.hpp"
#include "tropcer/graph_io.hpp"
#include "tropcer/jacobian.hpp"
#include "tropcer/morita.hpp"
#include "tropcer/multigraph.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;

namespace {

using namespace tropcer;

MetricGraph make_graph(
    const std::vector<std::string>& vertices,
    const std::vector<std::tuple<long long, std::string, std::string, std::string>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [id, src, dst, length] : edges) {
    es.push_back(Edge{id, src, dst, parse_rat(length)});
  }
  return MetricGraph(vertices, std::move(es));
}

std::vector<EdgeId> pick_tree(const MetricGraph& g, const std::vector<long long>& tree) {
  if (tree.empty()) return g.default_tree();
  return std::vector<EdgeId>(tree.begin(), tree.end());
}

std::vector<std::string> strs(const RVec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(rat_str(r));
  return out;
}

py::object opt_int(const std::optional<Int>& v) {
  if (!v) return py::none();
  return py::str(int_str(*v));
}

py::dict class_dict(int genus, const RVec& rep, const RVec& reduced, bool is_zero,
                    const std::optional<Int>& torsion, const std::string& note) {
  py::dict d;
  d["genus"] = genus;
  d["rep"] = strs(rep);
  d["reduced"] = strs(reduced);
  d["is_zero"] = is_zero;
  d["torsion"] = opt_int(torsion);
  d["note"] = note;
  return d;
}

DivisorPoint default_basepoint(const MetricGraph& g) {
  return DivisorPoint::at_vertex(
      *std::min_element(g.vertices().begin(), g.vertices().end()));
}

}  // namespace

PYBIND11_MODULE(_tropcer, m) {
  m.doc() = R"pbdoc(
    Exact computations on metric graphs: polarized Jacobians, the tropical
    Abel-Jacobi map, pointed and unpointed Ceresa-type classes with their
    torsion orders, the w obstruction class, and the finite twist group with
    its comparison map. All arithmetic is exact; rationals cross the boundary
    as "num/den" strings.
  )pbdoc";

  py::register_exception<GraphError>(m, "GraphError");

  py::class_<MetricGraph>(m, "Graph",
                          "Connected metric multigraph; edges are (id, src, dst, length) "
                          "with positive rational lengths as strings.")
      .def(py::init(&make_graph), py::arg("vertices"), py::arg("edges"))
      .def("genus", &MetricGraph::genus)
      .def("vertices", [](const MetricGraph& g) { return g.vertices(); })
      .def("edges",
           [](const MetricGraph& g) {
             std::vector<std::tuple<long long, std::string, std::string, std::string>> out;
             for (const auto& e : g.edges()) {
               out.emplace_back(e.id, e.src, e.dst, rat_str(e.length));
             }
             return out;
           })
      .def("default_tree", [](const MetricGraph& g) {
        const auto t = g.default_tree();
        return std::vector<long long>(t.begin(), t.end());
      });

  m.def(
      "polarization",
      [](const MetricGraph& g, const std::vector<long long>& tree) {
        const JacobianData jac(g.spanning_tree(pick_tree(g, tree)));
        std::vector<std::vector<std::string>> out;
        for (const auto& row : jac.polarization()) out.push_back(strs(row));
        return out;
      },
      py::arg("graph"), py::arg("tree") = std::vector<long long>{},
      "Polarization form Q in the cotree basis, as rational strings.");

  m.def(
      "abel_jacobi",
      [](const MetricGraph& g, const std::string& divisor, const std::vector<long long>& tree) {
        const JacobianData jac(g.spanning_tree(pick_tree(g, tree)));
        const AJResult r = abel_jacobi(jac, parse_divisor(divisor));
        py::dict d;
        d["rep"] = strs(r.rep);
        d["reduced"] = strs(r.reduced);
        d["is_zero"] = r.is_zero;
        d["torsion"] = opt_int(r.torsion);
        return d;
      },
      py::arg("graph"), py::arg("divisor"), py::arg("tree") = std::vector<long long>{},
      "Abel-Jacobi class of a degree-zero divisor such as \"v:q*1,v:c*-1\".");

  m.def(
      "ceresa_pointed",
      [](const MetricGraph& g, const std::string& basepoint,
         const std::vector<long long>& tree) {
        const DivisorPoint bp =
            basepoint.empty() ? default_basepoint(g) : parse_point(basepoint);
        const CeresaResult r = ceresa_pointed(g, pick_tree(g, tree), bp);
        py::dict d = class_dict(r.genus, r.rep, r.reduced, r.is_zero, r.torsion, r.note);
        d["basepoint"] = r.basepoint;
        return d;
      },
      py::arg("graph"), py::arg("basepoint") = std::string(),
      py::arg("tree") = std::vector<long long>{},
      "Pointed class v_b in JH_{2,1}; basepoint is \"v:NAME\" or \"e:ID@NUM/DEN\".");

  m.def(
      "ceresa_unpointed",
      [](const MetricGraph& g, const std::vector<long long>& tree) {
        const CeresaResult r = ceresa_unpointed(g, pick_tree(g, tree));
        return class_dict(r.genus, r.rep, r.reduced, r.is_zero, r.torsion, r.note);
      },
      py::arg("graph"), py::arg("tree") = std::vector<long long>{},
      "Unpointed class v-bar in JHbar_{2,1}.");

  m.def(
      "wclass",
      [](const MetricGraph& g, const std::vector<long long>& tree) {
        const WClassResult r = ceresa_w(g, pick_tree(g, tree));
        py::dict d = class_dict(r.genus, r.rep, r.reduced, r.is_zero, r.torsion, r.note);
        d["nonzero"] = !r.is_zero;
        return d;
      },
      py::arg("graph"), py::arg("tree") = std::vector<long long>{},
      "Obstruction class w in Q_{3,0} with its nonzero flag.");

  m.def(
      "torsion",
      [](const MetricGraph& g, const std::string& basepoint,
         const std::vector<long long>& tree) {
        const DivisorPoint bp =
            basepoint.empty() ? default_basepoint(g) : parse_point(basepoint);
        const TorsionSummary s = torsion_summary(g, pick_tree(g, tree), bp);
        py::dict d;
        d["genus"] = s.genus;
        d["basepoint"] = s.basepoint;
        d["pointed"] = opt_int(s.pointed);
        d["unpointed"] = opt_int(s.unpointed);
        d["w"] = opt_int(s.w);
        return d;
      },
      py::arg("graph"), py::arg("basepoint") = std::string(),
      py::arg("tree") = std::vector<long long>{},
      "Torsion orders of v_b, v-bar and w.");

  m.def(
      "morita",
      [](const MetricGraph& g, const std::vector<long long>& tree) {
        const JacobianData jac(g.spanning_tree(pick_tree(g, tree)));
        const MoritaPipeline mp(jac);
        const CokernelGroup bg = mp.b_group();
        py::dict d;
        std::vector<std::string> factors;
        for (const auto& f : bg.invariant_factors()) factors.push_back(int_str(f));
        d["invariant_factors"] = factors;
        d["free_rank"] = bg.free_rank();
        d["exponent"] = int_str(bg.exponent());
        d["n_class"] = strs(mp.n_class_rep());
        return d;
      },
      py::arg("graph"), py::arg("tree") = std::vector<long long>{},
      "Invariant factors and exponent of B-bar plus the n-class coordinates.");

  m.def(
      "compare",
      [](const MetricGraph& g, const std::vector<long long>& tree) {
        const JacobianData jac(g.spanning_tree(pick_tree(g, tree)));
        const MoritaComparison c = compare_morita_ceresa(jac);
        py::dict d;
        d["matches"] = c.matches;
        d["vbar_torsion"] = opt_int(c.vbar_torsion);
        d["exponent"] = int_str(c.exponent);
        d["torsion_divides"] = c.torsion_divides;
        return d;
      },
      py::arg("graph"), py::arg("tree") = std::vector<long long>{},
      "Check that the embedded n-class equals v-bar in JHbar_{2,1}.");

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::istringstream in;
        const int code = run_cli(args, out, in);
        return py::make_tuple(code, out.str());
      },
      py::arg("args"),
      "Run the command-line interface in-process; returns (exit_code, stdout).");

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
