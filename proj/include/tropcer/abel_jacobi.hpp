#pragma once

/**
 * @file abel_jacobi.hpp
 * @brief Divisors on a metric graph and the tropical Abel-Jacobi map.
 *
 * A point is either a vertex or an interior/boundary point of an edge at a
 * rational offset from the edge source. A degree-zero divisor maps to
 * JH_{1,0} = R^g / (column lattice of Q) via signed tree paths from the root.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropcer/jacobian.hpp"
#include "tropcer/multigraph.hpp"
#include "tropcer/rational.hpp"

namespace tropcer {

struct DivisorPoint {
  bool is_vertex = true;
  std::string vertex;  // set when is_vertex
  EdgeId edge = 0;     // set when !is_vertex
  Rat offset = 0;      // set when !is_vertex

  static DivisorPoint at_vertex(std::string v);
  static DivisorPoint on_edge_at(EdgeId e, Rat off);

  friend bool operator==(const DivisorPoint& a, const DivisorPoint& b);
  friend bool operator<(const DivisorPoint& a, const DivisorPoint& b);
};

/// Formal Z-combination of points; equal points merge and zero terms drop.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(const std::vector<std::pair<DivisorPoint, Int>>& terms);

  const std::vector<std::pair<DivisorPoint, Int>>& terms() const { return terms_; }
  Int degree() const;
  bool empty() const { return terms_.empty(); }

  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator-(const Divisor& a, const Divisor& b);

 private:
  std::vector<std::pair<DivisorPoint, Int>> terms_;  // sorted by point
};

/// Principal divisor a - 2b + c of a tent function on one edge
/// (0 < a < b < c < length, b - a = c - b). Its Abel-Jacobi image vanishes.
Divisor tent_divisor(const MetricGraph& graph, EdgeId e, const Rat& a, const Rat& b,
                     const Rat& c);

/// Representative of AJ(D) in b-coordinates, routed through the tree of jac.
RVec abel_jacobi_rep(const JacobianData& jac, const Divisor& divisor);

/// Same map but with paths routed through a different spanning tree of the
/// same graph; the class in JH_{1,0} is independent of the route.
RVec abel_jacobi_rep_via(const JacobianData& jac, const SpanningTree& route,
                         const Divisor& divisor);

struct AJResult {
  RVec rep;
  RVec reduced;
  bool is_zero = false;
  std::optional<Int> torsion;
};

AJResult abel_jacobi(const JacobianData& jac, const Divisor& divisor);

}  // namespace tropcer
