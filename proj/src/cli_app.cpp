#include "tropcer/cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropcer/abel_jacobi.hpp"
#include "tropcer/ceresa.hpp"
#include "tropcer/graph_io.hpp"
#include "tropcer/jacobian.hpp"
#include "tropcer/morita.hpp"
#include "tropcer/multigraph.hpp"
#include "tropcer/random_graph.hpp"
#include "tropcer/tensor.hpp"
#include "tropcer/xorshift.hpp"

namespace tropcer {
namespace {

using nlohmann::json;

json rvec_json(const RVec& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(rat_str(r));
  return a;
}

json rmat_json(const RMat& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(rvec_json(row));
  return a;
}

json ivec_json(const IVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_str(x));
  return a;
}

json imat_json(const IMat& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(ivec_json(row));
  return a;
}

json small_imat_json(const IMat& m) {
  json a = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.convert_to<long long>());
    a.push_back(std::move(r));
  }
  return a;
}

json opt_int_json(const std::optional<Int>& v) {
  if (!v) return nullptr;
  return int_str(*v);
}

json edge_ids_json(const std::vector<EdgeId>& ids) {
  json a = json::array();
  for (const EdgeId e : ids) a.push_back(e);
  return a;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw GraphError("cannot open graph file: " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

std::vector<EdgeId> parse_tree_spec(const std::string& spec) {
  std::vector<EdgeId> ids;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    if (comma == std::string::npos) comma = spec.size();
    std::string tok = spec.substr(start, comma - start);
    if (tok.empty()) throw GraphError("invalid --tree: empty entry");
    if (tok[0] == 'e' || tok[0] == 'E') tok = tok.substr(1);
    try {
      ids.push_back(static_cast<EdgeId>(parse_int_strict(tok).convert_to<long long>()));
    } catch (const std::exception&) {
      throw GraphError("invalid --tree entry \"" + tok + "\": expected an edge id");
    }
    start = comma + 1;
  }
  return ids;
}

std::string divisor_str(const Divisor& d) {
  if (d.terms().empty()) return "0";
  std::string s;
  for (const auto& [pt, m] : d.terms()) {
    if (!s.empty()) s += ",";
    s += point_str(pt) + "*" + int_str(m);
  }
  return s;
}

/// Graph after automatic bridge contraction, with remapping context.
struct Prepared {
  MetricGraph graph;
  MetricGraph original;
  std::vector<EdgeId> tree;
  std::optional<DivisorPoint> doc_basepoint;
  std::set<EdgeId> contracted;
  std::map<std::string, std::string> vmap;
  json notices = json::array();
};

DivisorPoint remap_point(const DivisorPoint& pt, Prepared& p) {
  if (pt.is_vertex) {
    const auto it = p.vmap.find(pt.vertex);
    if (it != p.vmap.end() && it->second != pt.vertex) {
      p.notices.push_back("vertex " + pt.vertex + " merged into " + it->second +
                          " by bridge contraction");
      return DivisorPoint::at_vertex(it->second);
    }
    return pt;
  }
  if (p.contracted.count(pt.edge)) {
    const std::string target = p.vmap.at(p.original.edge(pt.edge).src);
    p.notices.push_back("point on contracted bridge edge " + int_str(Int(pt.edge)) +
                        " moved to vertex " + target);
    return DivisorPoint::at_vertex(target);
  }
  return pt;
}

Prepared prepare(GraphDocument doc, const std::string& tree_spec) {
  std::map<std::string, std::string> vmap;
  auto contracted = contract_bridges(doc.graph, &vmap);
  Prepared p{std::move(contracted.first),
             std::move(doc.graph),
             {},
             std::move(doc.basepoint),
             std::set<EdgeId>(contracted.second.begin(), contracted.second.end()),
             std::move(vmap),
             json::array()};
  if (!p.contracted.empty()) {
    std::string msg = "contracted " + std::to_string(p.contracted.size()) + " bridge edge(s):";
    for (const EdgeId id : contracted.second) msg += " " + int_str(Int(id));
    p.notices.push_back(msg);
  }
  if (p.doc_basepoint) *p.doc_basepoint = remap_point(*p.doc_basepoint, p);

  if (tree_spec.empty()) {
    p.tree = p.graph.default_tree();
  } else {
    for (const EdgeId id : parse_tree_spec(tree_spec)) {
      if (p.contracted.count(id)) {
        p.notices.push_back("dropped contracted bridge edge " + int_str(Int(id)) +
                            " from --tree");
      } else {
        p.tree.push_back(id);
      }
    }
    std::sort(p.tree.begin(), p.tree.end());
    p.tree.erase(std::unique(p.tree.begin(), p.tree.end()), p.tree.end());
  }
  return p;
}

DivisorPoint resolve_basepoint(const std::string& flag, Prepared& p) {
  if (!flag.empty()) return remap_point(parse_point(flag), p);
  if (p.doc_basepoint) return *p.doc_basepoint;
  return DivisorPoint::at_vertex(
      *std::min_element(p.graph.vertices().begin(), p.graph.vertices().end()));
}

Divisor remap_divisor(const Divisor& d, Prepared& p) {
  std::vector<std::pair<DivisorPoint, Int>> terms;
  terms.reserve(d.terms().size());
  for (const auto& [pt, m] : d.terms()) terms.emplace_back(remap_point(pt, p), m);
  return Divisor(terms);
}

void put_class_fields(json& res, const RVec& rep, const RVec& reduced, bool is_zero,
                      const std::optional<Int>& torsion, const std::string& note) {
  res["rep"] = rvec_json(rep);
  res["reduced"] = rvec_json(reduced);
  res["is_zero"] = is_zero;
  res["torsion"] = opt_int_json(torsion);
  res["note"] = note;
}

bool leading_minors_positive(const RMat& q) {
  const int g = static_cast<int>(q.size());
  for (int k = 1; k <= g; ++k) {
    RMat sub(static_cast<std::size_t>(k), RVec(static_cast<std::size_t>(k), Rat(0)));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) sub[i][j] = q[i][j];
    }
    if (rational_det(sub) <= 0) return false;
  }
  return true;
}

json run_selftest(std::uint64_t seed, bool* all_ok) {
  json res;
  res["command"] = "selftest";
  res["seed"] = std::to_string(seed);
  json checks = json::array();
  bool all = true;
  const auto record = [&checks, &all](const std::string& name, bool ok) {
    json c;
    c["name"] = name;
    c["ok"] = ok;
    checks.push_back(std::move(c));
    all = all && ok;
  };

  XorShift64Star rng(seed);
  for (int t = 0; t < 3; ++t) {
    const std::string tag = "[" + std::to_string(t) + "]";
    const MetricGraph graph = random_bridgeless_graph(rng, 1, 4);
    const std::vector<EdgeId> tree = graph.default_tree();
    const JacobianData jac(graph.spanning_tree(tree));
    const int g = jac.genus();

    const RMat& q = jac.polarization();
    bool sym = true;
    for (int i = 0; i < g; ++i) {
      for (int j = 0; j < g; ++j) sym = sym && q[i][j] == q[j][i];
    }
    record("polarization-positive" + tag, sym && leading_minors_positive(q));

    const auto& vs = graph.vertices();
    const std::string v1 = vs[static_cast<std::size_t>(rng.below(vs.size()))];
    const std::string v2 = vs[static_cast<std::size_t>(rng.below(vs.size()))];
    const std::string v3 = vs[static_cast<std::size_t>(rng.below(vs.size()))];
    record("basepoint-identity" + tag,
           basepoint_dependence_identity(graph, tree, DivisorPoint::at_vertex(v1),
                                         DivisorPoint::at_vertex(v2)));

    const auto& es = graph.edges();
    const Edge& e = es[static_cast<std::size_t>(rng.below(es.size()))];
    const Rat b = e.length * Rat(Int(1 + rng.below(7)), Int(8));
    const Rat room = b < e.length - b ? b : e.length - b;
    const Rat h = room * Rat(Int(1 + rng.below(3)), Int(4));
    const RVec tent_rep = abel_jacobi_rep(jac, tent_divisor(graph, e.id, b - h, b, b + h));
    bool tent_zero = true;
    for (const auto& x : tent_rep) tent_zero = tent_zero && x == 0;
    record("tent-vanishing" + tag, tent_zero);

    const RVec w1 = jac.w_rep(jac.pointed_rep(v1).second, true);
    const RVec w2 = jac.w_rep(jac.pointed_rep(v2).second, true);
    record("w-basepoint-independent" + tag, jac.q_quotient_30().class_eq(w1, w2));

    const Divisor d1({{DivisorPoint::at_vertex(v1), 1}, {DivisorPoint::at_vertex(v2), -1}});
    const Divisor d2({{DivisorPoint::at_vertex(v2), 1}, {DivisorPoint::at_vertex(v3), -1}});
    const RVec r1 = abel_jacobi_rep(jac, d1);
    const RVec r2 = abel_jacobi_rep(jac, d2);
    const RVec r12 = abel_jacobi_rep(jac, d1 + d2);
    bool additive = true;
    for (int i = 0; i < g; ++i) additive = additive && r12[i] == r1[i] + r2[i];
    record("aj-additive" + tag, additive);
  }
  res["checks"] = std::move(checks);
  res["ok"] = all;
  *all_ok = all;
  return res;
}

struct Opts {
  std::string graph;
  std::string tree;
  std::string basepoint;
  std::string divisor;
  bool pretty = false;
  std::uint64_t seed = kDefaultSeed;
};

void emit(const json& doc, bool pretty, std::ostream& out) {
  out << (pretty ? doc.dump(2) : doc.dump()) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::istream& in) {
  CLI::App app{"exact Jacobian, Abel-Jacobi, Ceresa-class and twist-group computations "
               "on metric graphs"};
  app.require_subcommand(1);
  Opts o;

  CLI::App* c_info = app.add_subcommand("info", "genus, spanning tree, fundamental cycles");
  CLI::App* c_jac = app.add_subcommand("jacobian", "polarization form Q in the cotree basis");
  CLI::App* c_aj = app.add_subcommand("aj", "Abel-Jacobi class of a degree-zero divisor");
  CLI::App* c_cer = app.add_subcommand("ceresa", "pointed class v_b in JH_{2,1}");
  CLI::App* c_unp = app.add_subcommand("ceresa-unpointed", "unpointed class v-bar in JHbar_{2,1}");
  CLI::App* c_w = app.add_subcommand("wclass", "obstruction class w in Q_{3,0}");
  CLI::App* c_tor = app.add_subcommand("torsion", "torsion orders of v_b, v-bar and w");
  CLI::App* c_mor = app.add_subcommand("morita", "twist matrix, invariant factors of B-bar, n-class");
  CLI::App* c_cmp = app.add_subcommand("compare", "check Phi(n) = v-bar in JHbar_{2,1}");
  CLI::App* c_self = app.add_subcommand("selftest", "randomized property checks");

  for (CLI::App* sub : {c_info, c_jac, c_aj, c_cer, c_unp, c_w, c_tor, c_mor, c_cmp}) {
    sub->add_option("graph", o.graph, "graph document path (\"-\" reads standard input)")
        ->required();
    sub->add_option("--tree", o.tree,
                    "spanning tree override: comma-separated edge ids (e.g. e4,e5,e6)");
    sub->add_flag("--pretty", o.pretty, "indent the JSON output");
  }
  for (CLI::App* sub : {c_cer, c_tor}) {
    sub->add_option("--basepoint", o.basepoint, "basepoint: v:NAME or e:ID@NUM/DEN");
  }
  c_aj->add_option("--divisor", o.divisor,
                   "degree-zero divisor: comma-separated v:NAME*MULT / e:ID@NUM/DEN*MULT")
      ->required();
  c_self->add_option("--seed", o.seed, "64-bit seed for the reproducible random stream");
  c_self->add_flag("--pretty", o.pretty, "indent the JSON output");

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("tropcer");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& s : full) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    json err;
    err["error"] = e.what();
    emit(err, false, out);
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  json res;
  try {
    if (cmd == "selftest") {
      bool ok = false;
      res = run_selftest(o.seed, &ok);
      emit(res, o.pretty, out);
      return ok ? 0 : 1;
    }

    Prepared p = prepare(parse_graph_document(read_input(o.graph, in)), o.tree);
    const SpanningTree st = p.graph.spanning_tree(p.tree);
    res["command"] = cmd;
    res["genus"] = st.genus();
    res["tree"] = edge_ids_json(st.tree());
    res["cotree"] = edge_ids_json(st.cotree());

    if (cmd == "info") {
      res["vertices"] = p.graph.vertices();
      res["edges"] = graph_to_json(p.graph)["edges"];
      const auto cm = st.cycle_matrix();
      json cycles;
      cycles["columns"] = edge_ids_json(cm.second);
      cycles["rows"] = small_imat_json(cm.first);
      res["cycles"] = std::move(cycles);
    } else if (cmd == "jacobian") {
      const JacobianData jac(st);
      res["polarization"] = rmat_json(jac.polarization());
    } else if (cmd == "aj") {
      const JacobianData jac(st);
      const Divisor d = remap_divisor(parse_divisor(o.divisor), p);
      const AJResult r = abel_jacobi(jac, d);
      res["divisor"] = divisor_str(d);
      res["rep"] = rvec_json(r.rep);
      res["reduced"] = rvec_json(r.reduced);
      res["is_zero"] = r.is_zero;
      res["torsion"] = opt_int_json(r.torsion);
    } else if (cmd == "ceresa") {
      const DivisorPoint bp = resolve_basepoint(o.basepoint, p);
      const CeresaResult r = ceresa_pointed(p.graph, p.tree, bp);
      res["basepoint"] = point_str(bp);
      res["basepoint_vertex"] = r.basepoint;
      put_class_fields(res, r.rep, r.reduced, r.is_zero, r.torsion, r.note);
    } else if (cmd == "ceresa-unpointed") {
      const CeresaResult r = ceresa_unpointed(p.graph, p.tree);
      put_class_fields(res, r.rep, r.reduced, r.is_zero, r.torsion, r.note);
    } else if (cmd == "wclass") {
      const WClassResult r = ceresa_w(p.graph, p.tree);
      put_class_fields(res, r.rep, r.reduced, r.is_zero, r.torsion, r.note);
      res["nonzero"] = !r.is_zero;
    } else if (cmd == "torsion") {
      const DivisorPoint bp = resolve_basepoint(o.basepoint, p);
      const TorsionSummary s = torsion_summary(p.graph, p.tree, bp);
      res["basepoint"] = point_str(bp);
      res["basepoint_vertex"] = s.basepoint;
      res["pointed"] = opt_int_json(s.pointed);
      res["unpointed"] = opt_int_json(s.unpointed);
      res["w"] = opt_int_json(s.w);
    } else if (cmd == "morita") {
      const JacobianData jac(st);
      const MoritaPipeline mp(jac);
      const CokernelGroup bg = mp.b_group();
      res["delta"] = imat_json(mp.delta_matrix());
      json factors = json::array();
      for (const auto& f : bg.invariant_factors()) factors.push_back(int_str(f));
      res["invariant_factors"] = std::move(factors);
      res["free_rank"] = bg.free_rank();
      res["exponent"] = int_str(bg.exponent());
      const RVec n = mp.n_class_rep();
      res["n_class"] = rvec_json(n);
      const auto proj = bg.project(n);
      json np;
      np["torsion"] = ivec_json(proj.first);
      np["free"] = ivec_json(proj.second);
      res["n_projection"] = std::move(np);
    } else if (cmd == "compare") {
      const JacobianData jac(st);
      const MoritaComparison c = compare_morita_ceresa(jac);
      res["matches"] = c.matches;
      res["vbar_torsion"] = opt_int_json(c.vbar_torsion);
      res["exponent"] = int_str(c.exponent);
      res["torsion_divides"] = c.torsion_divides;
    }
    res["notices"] = p.notices;
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    emit(err, o.pretty, out);
    return 1;
  }
  emit(res, o.pretty, out);
  return 0;
}

}  // namespace tropcer
