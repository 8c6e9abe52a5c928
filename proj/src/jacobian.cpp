#include "tropcer/jacobian.hpp"

#include <stdexcept>
#include <utility>

namespace tropcer {

JacobianData::JacobianData(SpanningTree st)
    : st_(std::move(st)),
      g_(st_.genus()),
      Q_(st_.polarization()),
      B_(st_.b_expansion()) {
  for (const auto& e : st_.graph().edges()) ell_[e.id] = e.length;
}

RVec JacobianData::a_vec(int i) const {
  RVec v(g_, Rat(0));
  for (int r = 0; r < g_; ++r) v[r] = Q_[r][i];
  return v;
}

std::map<IndexTuple, Rat> JacobianData::a_wedge(const IndexTuple& J) const {
  std::vector<RVec> vecs;
  vecs.reserve(J.size());
  for (const int j : J) vecs.push_back(a_vec(j));
  return wedge_vectors(vecs, g_);
}

std::pair<TensorSpace, RVec> JacobianData::omega_class() const {
  TensorSpace sp(g_, 1, 1);
  RVec x = sp.zero();
  for (int eps = 0; eps < g_; ++eps) {
    for (int i = 0; i < g_; ++i) {
      if (Q_[i][eps] != 0) x[sp.index({i}, {eps})] += Q_[i][eps];
    }
  }
  return {std::move(sp), std::move(x)};
}

std::vector<RVec> JacobianData::lattice_L(int p, int q) const {
  if (q < 0 || p < q) throw std::invalid_argument("lattice_L requires p >= q >= 0");
  TensorSpace src(g_, q, p);  // a-side degree p, b-side degree q
  std::vector<RVec> cols;
  for (const IndexTuple& J : index_combinations(g_, p)) {
    const auto aw = a_wedge(J);
    for (const IndexTuple& K : index_combinations(g_, q)) {
      TensorSpace sp = src;
      RVec y = src.zero();
      for (const auto& [S, c] : aw) y[src.index(S, K)] += c;
      for (int t = 0; t < p - q; ++t) {
        auto next = monodromy_phi(sp, y);
        sp = std::move(next.first);
        y = std::move(next.second);
      }
      cols.push_back(std::move(y));
    }
  }
  return cols;
}

std::vector<RVec> JacobianData::lattice_K(int p, int q) const {
  const int steps = p - q - 1;
  if (q < 0 || steps < 0) throw std::invalid_argument("lattice_K requires p > q >= 0");
  Int fact = 1;
  for (int t = 2; t <= steps; ++t) fact *= t;
  TensorSpace src(g_, q + 1, p - 1);  // a-side degree p-1, b-side degree q+1
  std::vector<RVec> cols;
  for (const IndexTuple& J : index_combinations(g_, p - 1)) {
    const auto aw = a_wedge(J);
    for (const IndexTuple& K : index_combinations(g_, q + 1)) {
      TensorSpace sp = src;
      RVec y = src.zero();
      for (const auto& [S, c] : aw) y[src.index(S, K)] += c;
      for (int t = 0; t < steps; ++t) {
        auto next = monodromy_phi(sp, y);
        sp = std::move(next.first);
        y = std::move(next.second);
      }
      if (fact != 1) {
        for (auto& v : y) v /= fact;
      }
      cols.push_back(std::move(y));
    }
  }
  return cols;
}

RVec JacobianData::assemble_sum(bool pointed, const std::string& basepoint) const {
  TensorSpace sp(g_, 2, 1);
  RVec x = sp.zero();
  const std::vector<EdgeId>& fc = st_.cotree();
  std::vector<RVec> avecs;
  avecs.reserve(static_cast<std::size_t>(g_));
  for (int i = 0; i < g_; ++i) avecs.push_back(a_vec(i));
  for (const EdgeId e : st_.tree()) {
    const Rat le = ell_.at(e);
    const IVec& brow = B_.at(e);
    for (int ei = 0; ei < g_; ++ei) {
      const int s =
          pointed ? st_.sgn_pointed(basepoint, e, fc[ei]) : st_.sgn_unpointed(e, fc[ei]);
      if (s == 0) continue;
      const RVec& avec = avecs[ei];
      for (int m = 0; m < g_; ++m) {
        if (brow[m] == 0) continue;
        // b_ei ^ b_m = -(e_m ^ e_ei), hence the -sign on the insertion.
        const auto w = wedge_insert(m, {ei});
        if (!w) continue;
        const Rat factor = Rat(s) * le * Rat(brow[m] * Int(-w->sign));
        for (int ai = 0; ai < g_; ++ai) {
          if (avec[ai] != 0) x[sp.index({ai}, w->indices)] += factor * avec[ai];
        }
      }
    }
  }
  return x;
}

std::pair<TensorSpace, RVec> JacobianData::pointed_rep(const std::string& basepoint) const {
  if (!st_.graph().has_vertex(basepoint)) {
    throw GraphError("unknown basepoint vertex: " + basepoint);
  }
  return {TensorSpace(g_, 2, 1), assemble_sum(true, basepoint)};
}

std::pair<TensorSpace, RVec> JacobianData::unpointed_rep() const {
  return {TensorSpace(g_, 2, 1), assemble_sum(false, std::string())};
}

RVec JacobianData::wedge_with_h10(const RVec& x, const RVec& y11, int sign) const {
  TensorSpace sp_in(g_, 1, 1);
  TensorSpace sp(g_, 2, 1);
  RVec out = sp.zero();
  for (int i = 0; i < g_; ++i) {
    for (int m = 0; m < g_; ++m) {
      const Rat& c = y11[sp_in.index({i}, {m})];
      if (c == 0) continue;
      for (int k = 0; k < g_; ++k) {
        if (x[k] == 0) continue;
        // v ^ x: e_m ^ e_k = -(e_k ^ e_m), hence the -sign on the insertion.
        const auto w = wedge_insert(k, {m});
        if (!w) continue;
        out[sp.index({i}, w->indices)] += Rat(sign) * c * x[k] * Rat(-w->sign);
      }
    }
  }
  return out;
}

Quotient JacobianData::jh_quotient(int p, int q) const {
  TensorSpace sp(g_, p, q);
  return Quotient(static_cast<int>(sp.dim()), {}, lattice_L(p, q));
}

Quotient JacobianData::jhbar_quotient(int wedge_sign) const {
  TensorSpace sp(g_, 2, 1);
  const auto om = omega_class();
  std::vector<RVec> sub;
  sub.reserve(static_cast<std::size_t>(g_));
  for (int k = 0; k < g_; ++k) {
    RVec ek(g_, Rat(0));
    ek[k] = 1;
    sub.push_back(wedge_with_h10(ek, om.second, wedge_sign));
  }
  return Quotient(static_cast<int>(sp.dim()), sub, lattice_L(2, 1));
}

Quotient JacobianData::q_quotient_30() const {
  TensorSpace sp(g_, 3, 0);
  return Quotient(static_cast<int>(sp.dim()), {}, lattice_K(3, 0));
}

RVec JacobianData::w_rep(const RVec& rep21, bool halved) const {
  TensorSpace sp_in(g_, 2, 1);
  TensorSpace sp_out(g_, 3, 0);
  RVec out = sp_out.zero();
  for (int i = 0; i < g_; ++i) {
    for (const IndexTuple& K : sp_in.Ksets()) {
      const Rat& c = rep21[sp_in.index({i}, K)];
      if (c == 0) continue;
      const auto w = wedge_insert(i, K);
      if (!w) continue;
      out[sp_out.index({}, w->indices)] += c * w->sign;
    }
  }
  if (halved) {
    for (auto& v : out) v /= 2;
  }
  return out;
}

Quotient JacobianData::jac_quotient() const {
  std::vector<RVec> cols;
  cols.reserve(static_cast<std::size_t>(g_));
  for (int i = 0; i < g_; ++i) cols.push_back(a_vec(i));
  return Quotient(g_, {}, cols);
}

}  // namespace tropcer
