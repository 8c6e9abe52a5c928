#pragma once

/**
 * @file ceresa.hpp
 * @brief Pointed and unpointed Ceresa classes, the w-obstruction, torsion.
 *
 * The pointed class v_b of (Gamma, b) lives in JH_{2,1}; the unpointed class
 * v-bar in JHbar_{2,1} kills the basepoint dependence; w = N_+(v_b)/2 in
 * Q_{3,0} is a basepoint-independent obstruction. Basepoints may sit in the
 * interior of an edge, in which case the computation runs on a subdivision
 * (which changes neither the cotree labels nor the polarization).
 */

#include <optional>
#include <string>
#include <vector>

#include "tropcer/abel_jacobi.hpp"
#include "tropcer/jacobian.hpp"
#include "tropcer/multigraph.hpp"
#include "tropcer/rational.hpp"

namespace tropcer {

/// A computation model: the (possibly subdivided) graph, the extended tree,
/// and a vertex name for every requested point.
struct PointedModel {
  MetricGraph graph;
  std::vector<EdgeId> tree;
  std::vector<std::string> point_names;
};

/**
 * Subdivide at every edge-interior point and extend the tree by all fresh
 * segment ids (the original id stays; a cotree edge keeps its id on the
 * source-side segment, so cotree labels and Q are unchanged). Offsets 0 and
 * length resolve to the corresponding endpoint instead of a subdivision.
 */
PointedModel build_pointed_model(const MetricGraph& graph, const std::vector<EdgeId>& tree,
                                 const std::vector<DivisorPoint>& points);

struct CeresaResult {
  int genus = 0;
  std::string basepoint;  // vertex in the computation model; empty if unpointed
  RVec rep;
  RVec reduced;
  bool is_zero = false;
  std::optional<Int> torsion;
  std::string note;
};

struct WClassResult {
  int genus = 0;
  RVec rep;
  RVec reduced;
  bool is_zero = false;
  std::optional<Int> torsion;
  std::string note;
};

struct TorsionSummary {
  int genus = 0;
  std::string basepoint;
  std::optional<Int> pointed;
  std::optional<Int> unpointed;
  std::optional<Int> w;
};

/// v_b in JH_{2,1} for a vertex or edge-interior basepoint.
CeresaResult ceresa_pointed(const MetricGraph& graph, const std::vector<EdgeId>& tree,
                            const DivisorPoint& basepoint);

/// v-bar in JHbar_{2,1}.
CeresaResult ceresa_unpointed(const MetricGraph& graph, const std::vector<EdgeId>& tree);

/// w = N_+(v_b)/2 in Q_{3,0}; independent of the basepoint choice.
WClassResult ceresa_w(const MetricGraph& graph, const std::vector<EdgeId>& tree);

/// Check v_b1 - v_b2 = (-2 AJ([b1] - [b2])) wedged onto omega in JH_{2,1}.
bool basepoint_dependence_identity(const MetricGraph& graph, const std::vector<EdgeId>& tree,
                                   const DivisorPoint& b1, const DivisorPoint& b2);

TorsionSummary torsion_summary(const MetricGraph& graph, const std::vector<EdgeId>& tree,
                               const DivisorPoint& basepoint);

}  // namespace tropcer
