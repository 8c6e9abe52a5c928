#include <doctest.h>

#include <map>
#include <vector>

#include "test_support.hpp"
#include "tropcer/jacobian.hpp"
#include "tropcer/tensor.hpp"
#include "tropcer/xorshift.hpp"

using namespace tropcer;
using namespace testsup;

namespace {

RVec rv(std::initializer_list<long long> xs) {
  RVec out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

RVec random_lengths(XorShift64Star& rng, int n) {
  RVec out;
  for (int i = 0; i < n; ++i) out.push_back(rng.rat());
  return out;
}

}  // namespace

TEST_CASE("polarization matches the closed forms") {
  XorShift64Star rng(0x51a7eULL);
  for (int trial = 0; trial < 4; ++trial) {
    const RVec kl = trial == 0 ? lens({1, 2, 3, 4, 5, 6}) : random_lengths(rng, 6);
    const JacobianData jac(k4(kl).spanning_tree());
    CHECK(jac.polarization() == k4_Q_symbolic(kl));

    const RVec tlv = trial == 0 ? lens({1, 2, 3, 4, 5, 6, 7, 8, 9}) : random_lengths(rng, 9);
    const JacobianData tj(tl3(tlv).spanning_tree({5, 6, 7, 8, 9}));
    CHECK(tj.polarization() == tl3_Q_symbolic(tlv));
  }

  const JacobianData lj(loop_graph(Rat(7, 3)).spanning_tree());
  CHECK(lj.polarization() == RMat{{Rat(7, 3)}});

  // Equilateral determinant counts the spanning trees of K4.
  CHECK(rational_det(JacobianData(k4(ones(6)).spanning_tree()).polarization()) == 16);
}

TEST_CASE("determinant of Q does not depend on tree or orientation") {
  const RVec l = lens({1, 2, 3, 4, 5, 6});
  const Rat d = rational_det(JacobianData(k4(l).spanning_tree()).polarization());
  CHECK(d > 0);
  CHECK(rational_det(JacobianData(k4(l).spanning_tree({1, 2, 4})).polarization()) == d);
  CHECK(rational_det(JacobianData(flip_edges(k4(l), {1, 5}).spanning_tree()).polarization()) == d);
}

TEST_CASE("fundamental classes and their wedges") {
  const JacobianData jac(k4(ones(6)).spanning_tree());
  const RMat& Q = jac.polarization();
  for (int i = 0; i < 3; ++i) {
    const RVec a = jac.a_vec(i);
    for (int t = 0; t < 3; ++t)
      CHECK(a[static_cast<std::size_t>(t)] == Q[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)]);
  }
  // a_0 ^ a_1 at unit lengths: minors of columns (3,-1,-1) and (-1,3,-1).
  const auto w = jac.a_wedge({0, 1});
  CHECK(w.size() == 3);
  CHECK(w.at(IndexTuple{0, 1}) == 8);
  CHECK(w.at(IndexTuple{0, 2}) == -4);
  CHECK(w.at(IndexTuple{1, 2}) == 4);
}

TEST_CASE("omega is the polarization viewed in (1,1)") {
  const RVec l = lens({1, 2, 3, 4, 5, 6});
  const JacobianData jac(k4(l).spanning_tree());
  const auto [sp, om] = jac.omega_class();
  const RMat& Q = jac.polarization();
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      CHECK(om[sp.index({j}, {i})] == Q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);

  const JacobianData lj(loop_graph(Rat(5, 2)).spanning_tree());
  CHECK(lj.omega_class().second == RVec{Rat(5, 2)});
}

TEST_CASE("pointed and unpointed representatives at fixed lengths") {
  const JacobianData jac(k4(lens({1, 2, 3, 4, 5, 6})).spanning_tree());
  const auto [sp, vp] = jac.pointed_rep("c");
  CHECK(vp == rv({36, -35, -44, 36, 50, 32, -54, -35, 32}));
  CHECK(jac.jh_quotient(2, 1).torsion_order(vp) == Int(282));

  const auto [spb, vb] = jac.unpointed_rep();
  CHECK(vb == rv({18, -18, -60, 36, 48, 36, -40, -52, 52}));
  CHECK(jac.jhbar_quotient().torsion_order(vb) == Int(94));

  const JacobianData eq(k4(ones(6)).spanning_tree());
  const RVec expected = rv({2, -2, -2, 2, 2, 2, -2, -2, 2});
  CHECK(eq.pointed_rep("c").second == expected);
  CHECK(eq.unpointed_rep().second == expected);
  CHECK(eq.jh_quotient(2, 1).torsion_order(expected) == Int(16));
  CHECK(eq.jhbar_quotient().torsion_order(expected) == Int(16));
}

TEST_CASE("rescaling the metric rescales the representative") {
  const RVec l = lens({1, 2, 3, 4, 5, 6});
  RVec doubled = l;
  for (auto& x : doubled) x *= 2;
  const JacobianData jac(k4(l).spanning_tree());
  const JacobianData big(k4(doubled).spanning_tree());
  // In pure-b coordinates both the edge-length weight and the a-side
  // expansion through Q scale, so the representative picks up lambda^2;
  // the class order is scale-invariant because the lattice scales with it.
  CHECK(big.pointed_rep("c").second == vscale(jac.pointed_rep("c").second, Rat(4)));
  CHECK(big.jh_quotient(2, 1).torsion_order(big.pointed_rep("c").second) == Int(282));
  CHECK(big.polarization() == k4_Q_symbolic(doubled));
}

TEST_CASE("pointed minus unpointed lies on the omega line") {
  for (const MetricGraph& g : {k4(lens({1, 2, 3, 4, 5, 6})),
                               tl3(lens({1, 2, 3, 4, 5, 6, 7, 8, 9})), theta(lens({1, 2, 3}))}) {
    const SpanningTree st = g.spanning_tree();
    const JacobianData jac(st);
    const int gen = jac.genus();
    const RVec om = jac.omega_class().second;
    const RVec vbar = jac.unpointed_rep().second;
    const EdgeId eps0 = st.cotree()[0];
    for (const auto& b : g.vertices()) {
      RVec x(static_cast<std::size_t>(gen), Rat(0));
      for (const EdgeId e : st.tree()) {
        const int alpha = st.sgn_pointed(b, e, eps0) - st.sgn_unpointed(e, eps0);
        x = vadd(std::move(x), vscale(to_rvec(st.b_expansion().at(e)),
                                      Rat(alpha) * jac.edge_lengths().at(e)));
      }
      CHECK(vsub(jac.pointed_rep(b).second, vbar) == jac.wedge_with_h10(x, om, +1));
    }
  }
}

TEST_CASE("the omega-wedge subspace has rank g") {
  for (const MetricGraph& g : {k4(lens({1, 2, 3, 4, 5, 6})), tl3(ones(9))}) {
    const JacobianData jac(g.spanning_tree());
    const int gen = jac.genus();
    const RVec om = jac.omega_class().second;
    std::vector<RVec> cols;
    for (int k = 0; k < gen; ++k) cols.push_back(jac.wedge_with_h10(unit(gen, k), om, +1));
    CHECK(Lattice(cols[0].size(), cols).rank() == static_cast<std::size_t>(gen));
  }
}

TEST_CASE("period lattices") {
  const JacobianData jac(k4(lens({1, 2, 3, 4, 5, 6})).spanning_tree());
  std::vector<RVec> qcols;
  for (int i = 0; i < 3; ++i) qcols.push_back(jac.a_vec(i));
  CHECK(lattices_equal(3, jac.lattice_L(1, 0), qcols));

  const auto l21 = jac.lattice_L(2, 1);
  CHECK(l21.size() == 9);
  CHECK(Lattice(9, l21).rank() == 9);
  CHECK(Lattice(3, jac.lattice_L(1, 0)).rank() == 3);

  const JacobianData tj(tl3(ones(9)).spanning_tree());
  CHECK(Lattice(24, tj.lattice_L(2, 1)).rank() == 24);
  CHECK(Lattice(4, tj.lattice_L(1, 0)).rank() == 4);

  // K_{3,0} of the equilateral K4 is the index-4 sublattice 4Z of H_{3,0}.
  const JacobianData eq(k4(ones(6)).spanning_tree());
  const Lattice k30(1, eq.lattice_K(3, 0));
  CHECK(k30.rank() == 1);
  CHECK(k30.contains({Rat(4)}));
  CHECK_FALSE(k30.contains({Rat(2)}));
}

TEST_CASE("degree-3 obstruction representatives") {
  const JacobianData eq(k4(ones(6)).spanning_tree());
  const RVec weq = eq.w_rep(eq.pointed_rep("c").second);
  CHECK(weq == RVec{Rat(-3)});
  CHECK(eq.q_quotient_30().torsion_order(weq) == Int(4));
  CHECK_FALSE(eq.q_quotient_30().is_zero(weq));

  const JacobianData jac(k4(lens({1, 2, 3, 4, 5, 6})).spanning_tree());
  const RVec w = jac.w_rep(jac.pointed_rep("c").second);
  CHECK(w == RVec{Rat(-74)});
  CHECK(jac.q_quotient_30().is_zero(w));
  CHECK(jac.q_quotient_30().torsion_order(w) == Int(1));

  // Without halving, the contraction gives twice the representative.
  CHECK(jac.w_rep(jac.pointed_rep("c").second, false) == RVec{Rat(-148)});
}

TEST_CASE("Jacobian quotient of the loop is R mod lZ") {
  const JacobianData lj(loop_graph(Rat(3, 2)).spanning_tree());
  const Quotient q = lj.jac_quotient();
  CHECK(q.reduce({Rat(7, 4)}) == RVec{Rat(1, 4)});
  CHECK(q.reduce({Rat(-3)}) == RVec{Rat(0)});
  CHECK(q.torsion_order({Rat(1, 2)}) == Int(3));
  CHECK(q.is_zero({Rat(3, 2)}));
}
