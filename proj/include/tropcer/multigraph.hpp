#pragma once

/**
 * @file multigraph.hpp
 * @brief Metric multigraphs, spanning trees, fundamental cycles, signs.
 *
 * A metric graph is a connected finite multigraph (loops and parallel edges
 * allowed) with positive rational edge lengths. Edges are oriented src -> dst;
 * orientation only fixes signs, not any of the derived invariants.
 */

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tropcer/linalg.hpp"
#include "tropcer/rational.hpp"

namespace tropcer {

using EdgeId = long long;

struct Edge {
  EdgeId id;
  std::string src;
  std::string dst;
  Rat length;
};

/// One step of a walk: the edge and +1 when traversed src -> dst, else -1.
struct PathStep {
  EdgeId edge;
  int sign;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpanningTree;

class MetricGraph {
 public:
  MetricGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_vertex(const std::string& v) const;
  bool has_edge(EdgeId id) const;
  const Edge& edge(EdgeId id) const;

  /// First Betti number |E| - |V| + 1.
  int genus() const;

  bool is_connected() const;

  /// Deterministic spanning tree: breadth-first search from the smallest
  /// vertex name, scanning incident non-loop edges in ascending edge id.
  std::vector<EdgeId> default_tree() const;

  SpanningTree spanning_tree() const;
  SpanningTree spanning_tree(const std::vector<EdgeId>& tree_edges) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<EdgeId, std::size_t> by_id_;
};

/**
 * A spanning tree T = (V, F) of a metric graph, with the derived data used by
 * the homology computations: cotree F^c (sorted edge ids, one per independent
 * cycle), fundamental cycles, the expansion of every unit tangent b_e in the
 * cotree basis, and the two sign tables.
 */
class SpanningTree {
 public:
  SpanningTree(const MetricGraph& graph, std::vector<EdgeId> tree_edges);

  const MetricGraph& graph() const { return graph_; }
  int genus() const { return static_cast<int>(cotree_.size()); }
  const std::vector<EdgeId>& tree() const { return tree_; }
  const std::vector<EdgeId>& cotree() const { return cotree_; }
  const std::string& root() const { return root_; }

  /// Signed edge walk v -> root inside the tree.
  std::vector<PathStep> path_to_root(const std::string& v) const;

  /// Signed edge walk u -> v inside the tree.
  std::vector<PathStep> tree_path(const std::string& u, const std::string& v) const;

  /// Ids of the edges on the tree path u -> v.
  std::set<EdgeId> tree_path_edges(const std::string& u, const std::string& v) const;

  /// Components of T - e as (side of src(e), side of dst(e)).
  const std::pair<std::set<std::string>, std::set<std::string>>& split(EdgeId e) const;

  /// Fundamental-cycle matrix: one row per cotree edge, columns over all edge
  /// ids in ascending order (returned alongside).
  std::pair<IMat, std::vector<EdgeId>> cycle_matrix() const;

  /// Expansion of each unit tangent b_e in the cotree basis (b_eps).
  const std::map<EdgeId, IVec>& b_expansion() const;

  /// Polarization form Q = C diag(lengths) C^T in the cotree basis.
  RMat polarization() const;

  /// Pointed sign sgn^b_T(e, eps) in {-2,...,2} for e in F, eps in F^c.
  int sgn_pointed(const std::string& basepoint, EdgeId e, EdgeId eps) const;

  /// Unpointed sign in {-1, 0, +1}: 0 when e lies on the fundamental cycle of
  /// eps, else +1/-1 by which side of T - e the cotree edge eps sits on.
  int sgn_unpointed(EdgeId e, EdgeId eps) const;

 private:
  MetricGraph graph_;
  std::vector<EdgeId> tree_;
  std::vector<EdgeId> cotree_;
  std::string root_;
  std::map<std::string, std::tuple<EdgeId, std::string, int>> parent_;  // root absent
  mutable std::map<EdgeId, std::pair<std::set<std::string>, std::set<std::string>>> split_cache_;
  mutable std::optional<std::map<EdgeId, IVec>> b_cache_;
  mutable std::optional<std::pair<IMat, std::vector<EdgeId>>> cycle_cache_;
};

/// Ids of all bridge edges (loops are never bridges).
std::set<EdgeId> find_bridges(const MetricGraph& graph);

/**
 * Contract the given edges (each must be a non-loop at contraction time).
 * Merged vertices keep the lexicographically smaller name. If vertex_map is
 * non-null it receives old-name -> image-name for every vertex.
 */
MetricGraph contract_edges(const MetricGraph& graph, const std::vector<EdgeId>& ids,
                           std::map<std::string, std::string>* vertex_map = nullptr);

/// Contract every bridge (repeating until none remain). Returns the new graph
/// and the sorted ids of contracted edges.
std::pair<MetricGraph, std::vector<EdgeId>> contract_bridges(
    const MetricGraph& graph, std::map<std::string, std::string>* vertex_map = nullptr);

/**
 * Subdivide edges at interior points. Each point is (edge id, offset from
 * src), 0 < offset < length. The src-side segment keeps the original edge id;
 * later segments get fresh ids (max id + 1, ...). The inserted vertex for a
 * point is named "e<ID>@<offset>". If names is non-null it receives one
 * vertex name per input point (duplicated points share a vertex).
 */
MetricGraph subdivide(const MetricGraph& graph,
                      const std::vector<std::pair<EdgeId, Rat>>& points,
                      std::vector<std::string>* names = nullptr);

}  // namespace tropcer
