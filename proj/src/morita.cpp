#include "tropcer/morita.hpp"

#include <stdexcept>
#include <utility>

namespace tropcer {

MoritaPipeline::MoritaPipeline(JacobianData jac)
    : jac_(std::move(jac)), sp_(jac_.genus(), 2, 1) {
  const int g = jac_.genus();
  const RMat& Q = jac_.polarization();
  qint_.assign(g, IVec(g, Int(0)));
  for (int r = 0; r < g; ++r) {
    for (int c = 0; c < g; ++c) {
      if (!is_integral(Q[r][c])) {
        throw std::domain_error("the twist group requires integral edge lengths");
      }
      qint_[r][c] = rat_num(Q[r][c]);
    }
  }
}

IMat MoritaPipeline::delta_matrix() const {
  const int g = jac_.genus();
  IMat d(2 * g, IVec(2 * g, Int(0)));
  for (int r = 0; r < 2 * g; ++r) d[r][r] = 1;
  for (int r = 0; r < g; ++r) {
    for (int c = 0; c < g; ++c) d[g + r][c] = qint_[r][c];
  }
  return d;
}

std::vector<RVec> MoritaPipeline::relation_columns() const {
  const int g = jac_.genus();
  std::vector<RVec> cols;
  // (delta - I)(alpha_i ^ alpha_j tensor beta_k)
  //   = alpha_i tensor (Q a_j ^ b_k) - alpha_j tensor (Q a_i ^ b_k)
  for (const IndexTuple& ij : index_combinations(g, 2)) {
    const int i = ij[0], j = ij[1];
    for (int k = 0; k < g; ++k) {
      RVec x = sp_.zero();
      for (int m = 0; m < g; ++m) {
        const auto w = wedge_insert(m, {k});
        if (!w) continue;
        if (qint_[m][j] != 0) x[sp_.index({i}, w->indices)] += Rat(qint_[m][j] * w->sign);
        if (qint_[m][i] != 0) x[sp_.index({j}, w->indices)] -= Rat(qint_[m][i] * w->sign);
      }
      cols.push_back(std::move(x));
    }
  }
  // omega ^ beta_k = sum_i alpha_i tensor (beta_i ^ beta_k)
  for (int k = 0; k < g; ++k) {
    RVec x = sp_.zero();
    for (int i = 0; i < g; ++i) {
      const auto w = wedge_insert(i, {k});
      if (!w) continue;
      x[sp_.index({i}, w->indices)] += w->sign;
    }
    cols.push_back(std::move(x));
  }
  return cols;
}

CokernelGroup MoritaPipeline::b_group() const {
  const int n = static_cast<int>(sp_.dim());
  std::vector<RVec> ambient;
  ambient.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    RVec e(n, Rat(0));
    e[t] = 1;
    ambient.push_back(std::move(e));
  }
  return CokernelGroup(relation_columns(), ambient, n);
}

RVec MoritaPipeline::n_class_rep() const {
  const SpanningTree& st = jac_.tree();
  const int g = jac_.genus();
  const std::vector<EdgeId>& fc = st.cotree();
  RVec x = sp_.zero();
  for (const EdgeId e : st.tree()) {
    const Rat& le = jac_.edge_lengths().at(e);
    const IVec& brow = jac_.b_rows().at(e);
    for (int ei = 0; ei < g; ++ei) {
      const int s = st.sgn_unpointed(e, fc[ei]);
      if (s == 0) continue;
      for (int m = 0; m < g; ++m) {
        if (brow[m] == 0) continue;
        // b_ei ^ b_m = -(e_m ^ e_ei), hence the -sign on the insertion.
        const auto w = wedge_insert(m, {ei});
        if (!w) continue;
        x[sp_.index({ei}, w->indices)] += Rat(s) * le * Rat(brow[m] * Int(-w->sign));
      }
    }
  }
  return x;
}

RVec MoritaPipeline::phi_embed(const RVec& x) const {
  const int g = jac_.genus();
  const auto& Ks = sp_.Ksets();
  RVec out = sp_.zero();
  for (int i = 0; i < g; ++i) {
    const RVec avec = jac_.a_vec(i);
    for (const IndexTuple& K : Ks) {
      const Rat& c = x[sp_.index({i}, K)];
      if (c == 0) continue;
      for (int ai = 0; ai < g; ++ai) {
        if (avec[ai] != 0) out[sp_.index({ai}, K)] += c * avec[ai];
      }
    }
  }
  return out;
}

MoritaComparison compare_morita_ceresa(const JacobianData& jac) {
  const MoritaPipeline mp(jac);
  MoritaComparison cmp;
  const RVec embedded = mp.phi_embed(mp.n_class_rep());
  const RVec vbar = jac.unpointed_rep().second;
  const Quotient q = jac.jhbar_quotient();
  cmp.matches = q.class_eq(embedded, vbar);
  cmp.vbar_torsion = q.torsion_order(vbar);
  cmp.exponent = mp.b_group().exponent();
  cmp.torsion_divides =
      cmp.vbar_torsion.has_value() && *cmp.vbar_torsion != 0 && cmp.exponent % *cmp.vbar_torsion == 0;
  return cmp;
}

}  // namespace tropcer
