#include "tropcer/multigraph.hpp"

#include <algorithm>
#include <sstream>

namespace tropcer {

namespace {

std::string eid_str(EdgeId id) { return std::to_string(id); }

}  // namespace

MetricGraph::MetricGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw GraphError("graph needs at least one vertex");
  std::set<std::string> seen_v;
  for (const auto& v : vertices_) {
    if (v.empty()) throw GraphError("empty vertex name");
    if (!seen_v.insert(v).second) throw GraphError("duplicate vertex '" + v + "'");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!by_id_.emplace(e.id, i).second) {
      throw GraphError("duplicate edge id " + eid_str(e.id));
    }
    if (!seen_v.count(e.src)) {
      throw GraphError("edge " + eid_str(e.id) + ": unknown vertex '" + e.src + "'");
    }
    if (!seen_v.count(e.dst)) {
      throw GraphError("edge " + eid_str(e.id) + ": unknown vertex '" + e.dst + "'");
    }
    if (e.length <= 0) {
      throw GraphError("edge " + eid_str(e.id) + ": length must be positive");
    }
  }
  if (!is_connected()) throw GraphError("graph is not connected");
}

bool MetricGraph::has_vertex(const std::string& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool MetricGraph::has_edge(EdgeId id) const { return by_id_.count(id) != 0; }

const Edge& MetricGraph::edge(EdgeId id) const {
  const auto it = by_id_.find(id);
  if (it == by_id_.end()) throw GraphError("unknown edge id " + eid_str(id));
  return edges_[it->second];
}

int MetricGraph::genus() const {
  return static_cast<int>(edges_.size()) - static_cast<int>(vertices_.size()) + 1;
}

bool MetricGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& v : vertices_) adj[v];
  for (const auto& e : edges_) {
    adj[e.src].push_back(e.dst);
    if (e.dst != e.src) adj[e.dst].push_back(e.src);
  }
  std::set<std::string> seen{vertices_[0]};
  std::vector<std::string> stack{vertices_[0]};
  while (!stack.empty()) {
    const std::string v = stack.back();
    stack.pop_back();
    for (const auto& w : adj[v]) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == vertices_.size();
}

std::vector<EdgeId> MetricGraph::default_tree() const {
  std::vector<std::string> verts = vertices_;
  std::sort(verts.begin(), verts.end());
  const std::string root = verts[0];
  // incidence lists sorted by (edge id, neighbour); loops excluded
  std::map<std::string, std::vector<std::pair<EdgeId, std::string>>> inc;
  for (const auto& v : vertices_) inc[v];
  for (const auto& e : edges_) {
    if (e.src != e.dst) {
      inc[e.src].emplace_back(e.id, e.dst);
      inc[e.dst].emplace_back(e.id, e.src);
    }
  }
  for (auto& [v, lst] : inc) std::sort(lst.begin(), lst.end());
  std::vector<std::string> queue{root};
  std::set<std::string> visited{root};
  std::vector<EdgeId> tree;
  std::size_t qi = 0;
  while (qi < queue.size()) {
    const std::string v = queue[qi++];
    for (const auto& [eid, w] : inc[v]) {
      if (visited.insert(w).second) {
        tree.push_back(eid);
        queue.push_back(w);
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

SpanningTree MetricGraph::spanning_tree() const { return SpanningTree(*this, default_tree()); }

SpanningTree MetricGraph::spanning_tree(const std::vector<EdgeId>& tree_edges) const {
  return SpanningTree(*this, tree_edges);
}

SpanningTree::SpanningTree(const MetricGraph& graph, std::vector<EdgeId> tree_edges)
    : graph_(graph) {
  std::sort(tree_edges.begin(), tree_edges.end());
  if (std::adjacent_find(tree_edges.begin(), tree_edges.end()) != tree_edges.end()) {
    throw GraphError("duplicate edge id in spanning tree");
  }
  for (const EdgeId id : tree_edges) {
    const Edge& e = graph_.edge(id);  // throws on unknown ids
    if (e.src == e.dst) throw GraphError("tree edge " + eid_str(id) + " is a loop");
  }
  if (tree_edges.size() + 1 != graph_.vertices().size()) {
    throw GraphError("a spanning tree of this graph needs " +
                     std::to_string(graph_.vertices().size() - 1) + " edges, got " +
                     std::to_string(tree_edges.size()));
  }
  tree_ = std::move(tree_edges);
  const std::set<EdgeId> in_tree(tree_.begin(), tree_.end());
  for (const auto& e : graph_.edges()) {
    if (!in_tree.count(e.id)) cotree_.push_back(e.id);
  }
  std::sort(cotree_.begin(), cotree_.end());

  // parent structure: BFS over the tree from the smallest vertex name,
  // scanning adjacency tuples (edge id, neighbour, sign) in sorted order
  std::map<std::string, std::vector<std::tuple<EdgeId, std::string, int>>> adj;
  for (const auto& v : graph_.vertices()) adj[v];
  for (const EdgeId id : tree_) {
    const Edge& e = graph_.edge(id);
    adj[e.src].emplace_back(id, e.dst, +1);
    adj[e.dst].emplace_back(id, e.src, -1);
  }
  std::vector<std::string> verts = graph_.vertices();
  std::sort(verts.begin(), verts.end());
  root_ = verts[0];
  std::vector<std::string> order{root_};
  std::set<std::string> reached{root_};
  std::size_t qi = 0;
  while (qi < order.size()) {
    const std::string v = order[qi++];
    auto& lst = adj[v];
    std::sort(lst.begin(), lst.end());
    for (const auto& [eid, w, s] : lst) {
      if (reached.insert(w).second) {
        parent_.emplace(w, std::make_tuple(eid, v, s));
        order.push_back(w);
      }
    }
  }
  if (reached.size() != graph_.vertices().size()) {
    throw GraphError("the given edges do not form a spanning tree");
  }
}

std::vector<PathStep> SpanningTree::path_to_root(const std::string& v) const {
  if (!graph_.has_vertex(v)) throw GraphError("unknown vertex '" + v + "'");
  std::vector<PathStep> out;
  std::string cur = v;
  while (cur != root_) {
    const auto& [eid, pv, s] = parent_.at(cur);
    // the edge points parent -> cur when s = +1, so walking cur -> parent
    // traverses it with sign -s
    out.push_back(PathStep{eid, -s});
    cur = pv;
  }
  return out;
}

std::vector<PathStep> SpanningTree::tree_path(const std::string& u, const std::string& v) const {
  std::vector<PathStep> pu = path_to_root(u);
  std::vector<PathStep> pv = path_to_root(v);
  while (!pu.empty() && !pv.empty() && pu.back().edge == pv.back().edge) {
    pu.pop_back();
    pv.pop_back();
  }
  for (auto it = pv.rbegin(); it != pv.rend(); ++it) {
    pu.push_back(PathStep{it->edge, -it->sign});
  }
  return pu;
}

std::set<EdgeId> SpanningTree::tree_path_edges(const std::string& u, const std::string& v) const {
  std::set<EdgeId> out;
  for (const auto& step : tree_path(u, v)) out.insert(step.edge);
  return out;
}

const std::pair<std::set<std::string>, std::set<std::string>>& SpanningTree::split(
    EdgeId e) const {
  const auto it = split_cache_.find(e);
  if (it != split_cache_.end()) return it->second;
  const Edge& removed = graph_.edge(e);
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& v : graph_.vertices()) adj[v];
  for (const EdgeId id : tree_) {
    if (id == e) continue;
    const Edge& t = graph_.edge(id);
    adj[t.src].push_back(t.dst);
    adj[t.dst].push_back(t.src);
  }
  auto component = [&](const std::string& start) {
    std::set<std::string> seen{start};
    std::vector<std::string> stack{start};
    while (!stack.empty()) {
      const std::string x = stack.back();
      stack.pop_back();
      for (const auto& y : adj[x]) {
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
    return seen;
  };
  auto [pos, ok] = split_cache_.emplace(
      e, std::make_pair(component(removed.src), component(removed.dst)));
  (void)ok;
  return pos->second;
}

std::pair<IMat, std::vector<EdgeId>> SpanningTree::cycle_matrix() const {
  if (cycle_cache_) return *cycle_cache_;
  std::vector<EdgeId> eids;
  for (const auto& e : graph_.edges()) eids.push_back(e.id);
  std::sort(eids.begin(), eids.end());
  std::map<EdgeId, std::size_t> epos;
  for (std::size_t i = 0; i < eids.size(); ++i) epos[eids[i]] = i;
  IMat C;
  for (const EdgeId eps : cotree_) {
    IVec row(eids.size(), Int(0));
    row[epos[eps]] = 1;
    const Edge& e = graph_.edge(eps);
    if (e.src != e.dst) {
      for (const auto& step : tree_path(e.dst, e.src)) {
        row[epos[step.edge]] += step.sign;
      }
    }
    C.push_back(std::move(row));
  }
  cycle_cache_ = std::make_pair(std::move(C), std::move(eids));
  return *cycle_cache_;
}

const std::map<EdgeId, IVec>& SpanningTree::b_expansion() const {
  if (b_cache_) return *b_cache_;
  const int g = genus();
  std::map<EdgeId, std::size_t> gpos;
  for (std::size_t i = 0; i < cotree_.size(); ++i) gpos[cotree_[i]] = i;
  std::map<EdgeId, IVec> B;
  for (const auto& e : graph_.edges()) B[e.id] = IVec(g, Int(0));
  for (const EdgeId eps : cotree_) B[eps][gpos[eps]] = 1;
  for (const EdgeId e : tree_) {
    const auto& [S1, S2] = split(e);
    IVec row(g, Int(0));
    for (const EdgeId eps : cotree_) {
      const Edge& x = graph_.edge(eps);
      if (S2.count(x.src) && S1.count(x.dst)) {
        row[gpos[eps]] += 1;
      } else if (S1.count(x.src) && S2.count(x.dst)) {
        row[gpos[eps]] -= 1;
      }
    }
    B[e] = std::move(row);
  }
  b_cache_ = std::move(B);
  return *b_cache_;
}

RMat SpanningTree::polarization() const {
  const auto& [C, eids] = cycle_matrix();
  const int g = genus();
  RMat Q(g, RVec(g, Rat(0)));
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      Rat s(0);
      for (std::size_t t = 0; t < eids.size(); ++t) {
        if (C[i][t] != 0 && C[j][t] != 0) {
          s += graph_.edge(eids[t]).length * C[i][t] * C[j][t];
        }
      }
      Q[i][j] = s;
    }
  }
  return Q;
}

int SpanningTree::sgn_pointed(const std::string& basepoint, EdgeId e, EdgeId eps) const {
  if (!std::binary_search(tree_.begin(), tree_.end(), e)) {
    throw GraphError("edge " + eid_str(e) + " is not a tree edge");
  }
  if (!std::binary_search(cotree_.begin(), cotree_.end(), eps)) {
    throw GraphError("edge " + eid_str(eps) + " is not a cotree edge");
  }
  if (!graph_.has_vertex(basepoint)) throw GraphError("unknown vertex '" + basepoint + "'");
  const Edge& x = graph_.edge(eps);
  const auto& [S1, S2] = split(e);
  // e points away from the basepoint exactly when the basepoint sits on the
  // src side of T - e
  const int away = S1.count(basepoint) ? +1 : -1;
  int cnt = 0;
  for (const std::string* endpoint : {&x.src, &x.dst}) {
    if (tree_path_edges(basepoint, *endpoint).count(e)) ++cnt;
  }
  return away * cnt;
}

int SpanningTree::sgn_unpointed(EdgeId e, EdgeId eps) const {
  if (!std::binary_search(tree_.begin(), tree_.end(), e)) {
    throw GraphError("edge " + eid_str(e) + " is not a tree edge");
  }
  const auto cot = std::find(cotree_.begin(), cotree_.end(), eps);
  if (cot == cotree_.end()) {
    throw GraphError("edge " + eid_str(eps) + " is not a cotree edge");
  }
  const auto& [C, eids] = cycle_matrix();
  const std::size_t row = static_cast<std::size_t>(cot - cotree_.begin());
  const std::size_t col =
      static_cast<std::size_t>(std::lower_bound(eids.begin(), eids.end(), e) - eids.begin());
  if (C[row][col] != 0) return 0;
  const auto& [S1, S2] = split(e);
  const Edge& x = graph_.edge(eps);
  // both endpoints of eps lie in one component since e is off its cycle
  if (S2.count(x.src)) return +1;
  return -1;
}

std::set<EdgeId> find_bridges(const MetricGraph& graph) {
  std::set<EdgeId> out;
  for (const auto& e : graph.edges()) {
    if (e.src == e.dst) continue;
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& v : graph.vertices()) adj[v];
    for (const auto& other : graph.edges()) {
      if (other.id == e.id || other.src == other.dst) continue;
      adj[other.src].push_back(other.dst);
      adj[other.dst].push_back(other.src);
    }
    std::set<std::string> seen{e.src};
    std::vector<std::string> stack{e.src};
    while (!stack.empty()) {
      const std::string x = stack.back();
      stack.pop_back();
      for (const auto& y : adj[x]) {
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
    if (!seen.count(e.dst)) out.insert(e.id);
  }
  return out;
}

MetricGraph contract_edges(const MetricGraph& graph, const std::vector<EdgeId>& ids,
                           std::map<std::string, std::string>* vertex_map) {
  std::map<std::string, std::string> parent;
  for (const auto& v : graph.vertices()) parent[v] = v;
  auto find = [&parent](std::string v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];  // path halving
      v = parent[v];
    }
    return v;
  };
  const std::set<EdgeId> to_contract(ids.begin(), ids.end());
  for (const EdgeId id : to_contract) {
    graph.edge(id);  // validates existence
  }
  for (const auto& e : graph.edges()) {
    if (!to_contract.count(e.id)) continue;
    const std::string rs = find(e.src);
    const std::string rd = find(e.dst);
    if (rs == rd) throw GraphError("contracting edge " + eid_str(e.id) + " would collapse a loop");
    const auto& lo = (rs <= rd) ? rs : rd;
    const auto& hi = (rs <= rd) ? rd : rs;
    parent[hi] = lo;
  }
  std::vector<Edge> new_edges;
  for (const auto& e : graph.edges()) {
    if (to_contract.count(e.id)) continue;
    new_edges.push_back(Edge{e.id, find(e.src), find(e.dst), e.length});
  }
  std::set<std::string> reps;
  for (const auto& v : graph.vertices()) reps.insert(find(v));
  if (vertex_map) {
    vertex_map->clear();
    for (const auto& v : graph.vertices()) (*vertex_map)[v] = find(v);
  }
  return MetricGraph(std::vector<std::string>(reps.begin(), reps.end()), std::move(new_edges));
}

std::pair<MetricGraph, std::vector<EdgeId>> contract_bridges(
    const MetricGraph& graph, std::map<std::string, std::string>* vertex_map) {
  MetricGraph cur = graph;
  std::vector<EdgeId> contracted;
  std::map<std::string, std::string> total;
  for (const auto& v : graph.vertices()) total[v] = v;
  for (;;) {
    const std::set<EdgeId> br = find_bridges(cur);
    if (br.empty()) break;
    std::map<std::string, std::string> step;
    cur = contract_edges(cur, std::vector<EdgeId>(br.begin(), br.end()), &step);
    contracted.insert(contracted.end(), br.begin(), br.end());
    for (auto& [v, img] : total) img = step.at(img);
  }
  std::sort(contracted.begin(), contracted.end());
  if (vertex_map) *vertex_map = std::move(total);
  return {std::move(cur), std::move(contracted)};
}

MetricGraph subdivide(const MetricGraph& graph,
                      const std::vector<std::pair<EdgeId, Rat>>& points,
                      std::vector<std::string>* names) {
  // group and sort the cut offsets per edge, validating as we go
  std::map<EdgeId, std::vector<Rat>> cuts;
  for (const auto& [eid, off] : points) {
    const Edge& e = graph.edge(eid);
    if (off <= 0 || off >= e.length) {
      throw GraphError("point e:" + eid_str(eid) + "@" + rat_str(off) +
                       " is not interior to the edge");
    }
    cuts[eid].push_back(off);
  }
  for (auto& [eid, offs] : cuts) {
    std::sort(offs.begin(), offs.end());
    offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
  }
  EdgeId fresh = 0;
  for (const auto& e : graph.edges()) fresh = std::max(fresh, e.id);
  ++fresh;

  auto vertex_name = [](EdgeId eid, const Rat& off) {
    return "e" + eid_str(eid) + "@" + rat_str(off);
  };

  std::vector<std::string> new_vertices = graph.vertices();
  std::vector<Edge> new_edges;
  // edges processed in stored order; fresh ids assigned per ascending edge id
  std::map<EdgeId, std::vector<Edge>> replacement;
  std::vector<EdgeId> cut_ids;
  for (const auto& [eid, offs] : cuts) cut_ids.push_back(eid);
  std::sort(cut_ids.begin(), cut_ids.end());
  for (const EdgeId eid : cut_ids) {
    const Edge& e = graph.edge(eid);
    const auto& offs = cuts[eid];
    std::vector<Edge> segs;
    std::string prev_vertex = e.src;
    Rat prev_off(0);
    for (std::size_t i = 0; i < offs.size(); ++i) {
      const std::string mid = vertex_name(eid, offs[i]);
      new_vertices.push_back(mid);
      const EdgeId seg_id = (i == 0) ? eid : fresh++;
      segs.push_back(Edge{seg_id, prev_vertex, mid, offs[i] - prev_off});
      prev_vertex = mid;
      prev_off = offs[i];
    }
    segs.push_back(Edge{fresh++, prev_vertex, e.dst, e.length - prev_off});
    replacement[eid] = std::move(segs);
  }
  for (const auto& e : graph.edges()) {
    const auto it = replacement.find(e.id);
    if (it == replacement.end()) {
      new_edges.push_back(e);
    } else {
      for (const auto& seg : it->second) new_edges.push_back(seg);
    }
  }
  if (names) {
    names->clear();
    for (const auto& [eid, off] : points) names->push_back(vertex_name(eid, off));
  }
  return MetricGraph(std::move(new_vertices), std::move(new_edges));
}

}  // namespace tropcer
