#pragma once

/**
 * @file tensor.hpp
 * @brief Coordinates on wedge-power tensor spaces and the monodromy operator.
 *
 * A TensorSpace(g, p, q) holds coordinates for (wedge^q Q^g) tensor
 * (wedge^p Q^g): the first factor ("a-side") is indexed by q-subsets J of
 * {0..g-1} in lexicographic order, the second ("b-side") by p-subsets K, and
 * a pair (J, K) maps to the flat index Jidx * |K-subsets| + Kidx.
 */

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tropcer/rational.hpp"

namespace tropcer {

using IndexTuple = std::vector<int>;

/// All k-subsets of {0..g-1} in lexicographic order (one empty tuple for k=0).
std::vector<IndexTuple> index_combinations(int g, int k);

class TensorSpace {
 public:
  TensorSpace(int g, int p, int q);

  int g() const { return g_; }
  int p() const { return p_; }
  int q() const { return q_; }
  const std::vector<IndexTuple>& Jsets() const { return J_; }
  const std::vector<IndexTuple>& Ksets() const { return K_; }
  std::size_t dim() const { return dim_; }

  std::size_t index(const IndexTuple& J, const IndexTuple& K) const;
  RVec zero() const { return RVec(dim_, Rat(0)); }

 private:
  int g_, p_, q_;
  std::vector<IndexTuple> J_, K_;
  std::map<IndexTuple, std::size_t> jidx_, kidx_;
  std::size_t dim_;
};

/// e_j wedge e_K resolved to (sign, sorted tuple); nullopt if j already in K.
struct WedgeInsert {
  int sign;
  IndexTuple indices;
};
std::optional<WedgeInsert> wedge_insert(int j, const IndexTuple& K);

/// Exact determinant by fraction-free-ish Gaussian elimination over Q.
Rat rational_det(RMat M);

/// Wedge of k vectors in Q^g as a map from k-subsets to minors (zeros omitted).
std::map<IndexTuple, Rat> wedge_vectors(const std::vector<RVec>& vecs, int g);

/**
 * Monodromy contraction phi: (wedge^q a) tensor (wedge^p b) ->
 * (wedge^{q-1} a) tensor (wedge^{p+1} b),
 *   phi(u_1^...^u_q tensor v) = sum_t (-1)^t (u minus u_t) tensor (u_t ^ v)
 * with t counted 1-based over the sorted factors, so phi(u tensor v) = -(u ^ v).
 */
std::pair<TensorSpace, RVec> monodromy_phi(const TensorSpace& space, const RVec& x);

}  // namespace tropcer
