#pragma once

/**
 * @file jacobian.hpp
 * @brief Jacobian-level data of a metric graph with a chosen spanning tree.
 *
 * Coordinates: all tensors live in the cotree basis b_eps (sorted cotree edge
 * ids), including the a-side, where each fundamental class a_i is expanded
 * through the polarization column Q[:, i]. A (p, q)-tensor is stored in the
 * TensorSpace(g, p, q) layout.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropcer/linalg.hpp"
#include "tropcer/multigraph.hpp"
#include "tropcer/rational.hpp"
#include "tropcer/tensor.hpp"

namespace tropcer {

class JacobianData {
 public:
  explicit JacobianData(SpanningTree st);

  const SpanningTree& tree() const { return st_; }
  int genus() const { return g_; }
  const RMat& polarization() const { return Q_; }
  const std::map<EdgeId, IVec>& b_rows() const { return B_; }
  const std::map<EdgeId, Rat>& edge_lengths() const { return ell_; }

  /// Fundamental class a_i in b-coordinates: column i of the polarization.
  RVec a_vec(int i) const;

  /// Wedge of the a-columns indexed by J, as minors over |J|-subsets.
  std::map<IndexTuple, Rat> a_wedge(const IndexTuple& J) const;

  /// Polarization class omega = sum_i,eps Q[i][eps] b_i tensor b_eps in (1,1).
  std::pair<TensorSpace, RVec> omega_class() const;

  /// Generators of L_{p,q}: the monodromy images phi^{p-q} of the integral
  /// a-b basis of weight (q, p), expanded in b-coordinates.
  std::vector<RVec> lattice_L(int p, int q) const;

  /// Generators of K_{p,q}: divided-power images phi^{p-q-1}/(p-q-1)! of the
  /// integral a-b basis of weight (q+1, p-1).
  std::vector<RVec> lattice_K(int p, int q) const;

  /// Pointed class representative v_b at a vertex basepoint, in (2,1).
  std::pair<TensorSpace, RVec> pointed_rep(const std::string& basepoint) const;

  /// Unpointed class representative v-bar, in (2,1).
  std::pair<TensorSpace, RVec> unpointed_rep() const;

  /// u tensor v |-> sign * u tensor (v wedge x): (1,1) -> (2,1).
  RVec wedge_with_h10(const RVec& x, const RVec& y11, int sign = +1) const;

  /// Intermediate-Jacobian quotient JH_{p,q} = H_{p,q}(R) / L_{p,q}.
  Quotient jh_quotient(int p, int q) const;

  /// JHbar_{2,1} = H_{2,1}(R) / (omega wedge H_{1,0}(R) + L_{2,1}).
  Quotient jhbar_quotient(int wedge_sign = +1) const;

  /// Q_{3,0} = H_{3,0}(R) / K_{3,0}, home of the w-class.
  Quotient q_quotient_30() const;

  /// Contraction N_+ applied to a (2,1) representative:
  /// u tensor v |-> u wedge v, halved when requested.
  RVec w_rep(const RVec& rep21, bool halved = true) const;

  /// JH_{1,0} = R^g / (column lattice of Q); target of the Abel-Jacobi map.
  Quotient jac_quotient() const;

 private:
  RVec assemble_sum(bool pointed, const std::string& basepoint) const;

  SpanningTree st_;
  int g_;
  RMat Q_;
  std::map<EdgeId, IVec> B_;
  std::map<EdgeId, Rat> ell_;
};

}  // namespace tropcer
