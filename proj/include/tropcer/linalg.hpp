#pragma once

/**
 * @file linalg.hpp
 * @brief Exact integer normal forms and rational lattice / quotient machinery.
 *
 * Conventions used throughout:
 *  - matrices are row-major vectors of rows;
 *  - Hermite normal form is row-style with positive pivots and entries above
 *    each pivot reduced into [0, pivot);
 *  - Smith normal form returns U*M*V = S with a full divisibility chain.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "tropcer/rational.hpp"

namespace tropcer {

IMat identity_matrix(std::size_t n);
IMat matrix_product(const IMat& A, const IMat& B);

struct HnfResult {
  IMat H;                      ///< the Hermite normal form, H = U * M
  IMat U;                      ///< unimodular row transform
  std::vector<std::size_t> pivots;  ///< pivot column of each leading row
};

/// Row-style Hermite normal form via repeated gcd elimination (smallest
/// absolute nonzero entry as working pivot).
HnfResult hermite_normal_form(const IMat& M);

struct SnfResult {
  IMat S;  ///< diagonal with divisibility chain, S = U * M * V
  IMat U;  ///< unimodular row transform
  IMat V;  ///< unimodular column transform
};

/// Smith normal form; pivot rule: smallest absolute nonzero entry, ties
/// resolved row-major.
SnfResult smith_normal_form(const IMat& M);

/// Basis of the right integer kernel { x : M x = 0 }, one vector per entry.
std::vector<IVec> integer_kernel(const IMat& M);

/**
 * Finitely generated subgroup of Q^n, stored as an integer-matrix Hermite
 * basis at a common denominator ("scale").
 */
class Lattice {
 public:
  Lattice(std::size_t n, const std::vector<RVec>& generators);

  std::size_t dimension() const { return n_; }
  std::size_t rank() const { return basis_.size(); }

  /// Canonical representative of x modulo the lattice (greedy pivot reduction).
  RVec reduce(const RVec& x) const;

  /// Whether x lies in the lattice.
  bool contains(const RVec& x) const;

  /// Integer coordinates of x in the Hermite basis, when x is in the lattice.
  std::optional<IVec> contains_witness(const RVec& x) const;

  /// Rational coordinates of x in the Hermite basis when x lies in the
  /// rational span of the lattice; nullopt otherwise.
  std::optional<RVec> span_coords(const RVec& x) const;

  /// Smallest k >= 1 with k*x in the lattice, or nullopt (infinite order).
  std::optional<Int> torsion_order(const RVec& x) const;

  /// Hermite basis rows at the stored scale (integer entries).
  const IMat& scaled_basis() const { return basis_; }
  const Int& scale() const { return scale_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  /// Basis rows as rational vectors (scaled_basis / scale).
  RMat basis() const;

 private:
  std::size_t n_;
  Int scale_;
  IMat basis_;
  std::vector<std::size_t> pivots_;
};

/**
 * Quotient of Q^n by a rational subspace plus a lattice: Q^n / (V + Lambda).
 * Elements are compared by first projecting along V (canonical elimination of
 * the subspace pivots) and then reducing modulo the projected lattice.
 */
class Quotient {
 public:
  Quotient(std::size_t n, const std::vector<RVec>& subspace,
           const std::vector<RVec>& lattice_generators);

  std::size_t dimension() const { return n_; }

  /// Canonical representative modulo the subspace only.
  RVec project_subspace(const RVec& x) const;

  /// Canonical representative modulo subspace + lattice.
  RVec reduce(const RVec& x) const;

  bool class_eq(const RVec& x, const RVec& y) const;
  bool is_zero(const RVec& x) const;

  /// Order of the class of x in the quotient, or nullopt if infinite.
  std::optional<Int> torsion_order(const RVec& x) const;

  const Lattice& lattice() const { return lattice_; }

 private:
  std::size_t n_;
  RMat vrows_;
  std::vector<std::size_t> vpivots_;
  Lattice lattice_;
};

/**
 * The abelian group (span ambient) / (span relations) inside Q^n, presented
 * through Smith normal form. Invariant factors exclude trivial 1s; free_rank
 * counts the zero elementary divisors.
 */
class CokernelGroup {
 public:
  CokernelGroup(const std::vector<RVec>& relation_cols,
                const std::vector<RVec>& ambient_cols, std::size_t n);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }

  /// Image of x in the group: (torsion coordinates mod factors, free
  /// coordinates). Throws std::domain_error if x is not in the ambient group.
  std::pair<IVec, IVec> project(const RVec& x) const;

  bool is_zero(const RVec& x) const;

  /// lcm of the invariant factors (1 for a torsion-free or trivial group).
  Int exponent() const;

 private:
  IVec ambient_int_coords(const RVec& x) const;

  Lattice ambient_;
  std::size_t r_ = 0;  // ambient rank
  IMat U_;
  IVec diag_;
  std::vector<std::size_t> tor_idx_, free_idx_;
  std::vector<Int> factors_;
  std::size_t free_rank_ = 0;
};

}  // namespace tropcer
