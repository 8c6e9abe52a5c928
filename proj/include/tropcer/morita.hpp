#pragma once

/**
 * @file morita.hpp
 * @brief The finite group B-bar of the Dehn-twist product and its comparison
 *        with the unpointed class.
 *
 * For integral edge lengths the monodromy delta = [[I, 0], [Q, I]] acts on
 * H = Z^g alpha + Z^g beta. B-bar is the cokernel of the relations
 * (delta - I)(alpha_i ^ alpha_j tensor beta_k) and omega ^ beta_k inside
 * X tensor wedge^2 Y, where the class n(Gamma) lives. The embedding Phi sends
 * alpha_i to the Q-column a_i, landing in the same coordinates as v-bar.
 */

#include <optional>
#include <vector>

#include "tropcer/jacobian.hpp"
#include "tropcer/linalg.hpp"
#include "tropcer/rational.hpp"
#include "tropcer/tensor.hpp"

namespace tropcer {

class MoritaPipeline {
 public:
  /// Requires every entry of the polarization to be an integer.
  explicit MoritaPipeline(JacobianData jac);

  int genus() const { return jac_.genus(); }
  const JacobianData& jacobian() const { return jac_; }
  const TensorSpace& space() const { return sp_; }

  /// The 2g x 2g monodromy matrix [[I, 0], [Q, I]] on (alpha, beta).
  IMat delta_matrix() const;

  /// Columns spanning the relation subgroup of X tensor wedge^2 Y.
  std::vector<RVec> relation_columns() const;

  /// B-bar as a cokernel presentation (finite for integral lengths).
  CokernelGroup b_group() const;

  /// Integer coordinates of n(Gamma) in X tensor wedge^2 Y.
  RVec n_class_rep() const;

  /// Expand the alpha-index through Q columns into pure-b (2,1) coordinates.
  RVec phi_embed(const RVec& x) const;

 private:
  JacobianData jac_;
  IMat qint_;
  TensorSpace sp_;
};

struct MoritaComparison {
  bool matches = false;            // Phi(n) equals v-bar in JHbar_{2,1}
  std::optional<Int> vbar_torsion; // order of v-bar in JHbar_{2,1}
  Int exponent = 1;                // exponent of the torsion part of B-bar
  bool torsion_divides = false;    // vbar_torsion | exponent
};

MoritaComparison compare_morita_ceresa(const JacobianData& jac);

}  // namespace tropcer
