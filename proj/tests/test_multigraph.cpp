#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "tropcer/multigraph.hpp"

using namespace tropcer;
using namespace testsup;

namespace {

// Signed edge-weight vector of a tree walk, indexed by edge id.
std::map<EdgeId, int> walk_weights(const std::vector<PathStep>& path) {
  std::map<EdgeId, int> w;
  for (const PathStep& s : path) {
    w[s.edge] += s.sign;
    if (w[s.edge] == 0) w.erase(s.edge);
  }
  return w;
}

}  // namespace

TEST_CASE("construction validates the model") {
  CHECK_THROWS_AS(MetricGraph({"a", "a"}, {}), GraphError);
  CHECK_THROWS_AS(MetricGraph({"a", "b"},
                              {{1, "a", "b", Rat(1)}, {1, "a", "b", Rat(2)}}),
                  GraphError);
  CHECK_THROWS_AS(MetricGraph({"a", "b"}, {{1, "a", "z", Rat(1)}}), GraphError);
  CHECK_THROWS_AS(MetricGraph({"a", "b"}, {{1, "a", "b", Rat(0)}}), GraphError);
  CHECK_THROWS_AS(MetricGraph({"a", "b"}, {{1, "a", "b", Rat(-1, 2)}}), GraphError);
  // Disconnected: two vertices, no edge.
  CHECK_THROWS_AS(MetricGraph({"a", "b"}, {}), GraphError);
}

TEST_CASE("genus") {
  CHECK(k4(ones(6)).genus() == 3);
  CHECK(tl3(ones(9)).genus() == 4);
  CHECK(loop_graph(Rat(1)).genus() == 1);
  // A tree has genus 0.
  const MetricGraph path({"a", "b", "c"}, {{1, "a", "b", Rat(1)}, {2, "b", "c", Rat(1)}});
  CHECK(path.genus() == 0);
}

TEST_CASE("deterministic spanning tree") {
  CHECK(k4(lens({1, 2, 3, 4, 5, 6})).default_tree() == std::vector<EdgeId>{4, 5, 6});
  CHECK(theta(ones(3)).default_tree() == std::vector<EdgeId>{1});
  CHECK(loop_graph(Rat(2)).default_tree().empty());

  const SpanningTree st = k4(ones(6)).spanning_tree();
  CHECK(st.tree() == std::vector<EdgeId>{4, 5, 6});
  CHECK(st.cotree() == std::vector<EdgeId>{1, 2, 3});
  CHECK(st.root() == "c");
  CHECK(st.genus() == 3);

  // Loops never enter a tree; an explicit tree must be a spanning tree.
  CHECK_THROWS_AS(k4(ones(6)).spanning_tree({1, 2, 3}), GraphError);  // a triangle
  CHECK_THROWS_AS(k4(ones(6)).spanning_tree({4, 5}), GraphError);     // too small
}

TEST_CASE("fundamental cycles have zero boundary and unit cotree entries") {
  for (const MetricGraph& g :
       {k4(lens({1, 2, 3, 4, 5, 6})), tl3(lens({1, 2, 3, 4, 5, 6, 7, 8, 9})), theta(ones(3))}) {
    const SpanningTree st = g.spanning_tree();
    const auto [C, cols] = st.cycle_matrix();
    REQUIRE(C.size() == static_cast<std::size_t>(st.genus()));
    for (std::size_t r = 0; r < C.size(); ++r) {
      // Boundary: at every vertex, signed in/out weights cancel.
      std::map<std::string, Int> boundary;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const Edge& e = g.edge(cols[c]);
        boundary[e.dst] += C[r][c];
        boundary[e.src] -= C[r][c];
      }
      for (const auto& [v, b] : boundary) CHECK(b == 0);
      // The defining cotree edge appears with coefficient +1, others 0.
      for (std::size_t i = 0; i < st.cotree().size(); ++i) {
        const auto pos = std::find(cols.begin(), cols.end(), st.cotree()[i]) - cols.begin();
        CHECK(C[r][static_cast<std::size_t>(pos)] == (i == r ? 1 : 0));
      }
    }
  }

  // K4 fixture: a_1 traverses e1 (+), e5 (+), e6 (-).
  const SpanningTree st = k4(lens({1, 2, 3, 4, 5, 6})).spanning_tree();
  const auto [C, cols] = st.cycle_matrix();
  CHECK(cols == std::vector<EdgeId>{1, 2, 3, 4, 5, 6});
  CHECK(C[0] == IVec{1, 0, 0, 0, 1, -1});
}

TEST_CASE("b-expansions match the split-component formula") {
  const SpanningTree k4st = k4(lens({1, 2, 3, 4, 5, 6})).spanning_tree();
  const auto& B = k4st.b_expansion();
  CHECK(B.at(4) == IVec{0, -1, 1});   // b4 = b3 - b2
  CHECK(B.at(5) == IVec{1, 0, -1});   // b5 = b1 - b3
  CHECK(B.at(6) == IVec{-1, 1, 0});   // b6 = b2 - b1
  CHECK(B.at(1) == IVec{1, 0, 0});
  CHECK(B.at(2) == IVec{0, 1, 0});
  CHECK(B.at(3) == IVec{0, 0, 1});

  const SpanningTree tst = tl3(lens({1, 2, 3, 4, 5, 6, 7, 8, 9})).spanning_tree({5, 6, 7, 8, 9});
  const auto& TB = tst.b_expansion();
  CHECK(TB.at(5) == IVec{0, -1, 1, 1});  // b5 = -b2 + b3 + b4
  CHECK(TB.at(6) == IVec{-1, 0, 1, 1});  // b6 = -b1 + b3 + b4
  CHECK(TB.at(7) == IVec{0, 0, 1, 1});   // b7 = b8 = b9 = b3 + b4
  CHECK(TB.at(8) == IVec{0, 0, 1, 1});
  CHECK(TB.at(9) == IVec{0, 0, 1, 1});
}

TEST_CASE("b-expansion is the transpose of the cycle matrix") {
  for (const MetricGraph& g :
       {k4(lens({2, 3, 5, 7, 11, 13})), tl3(ones(9)), banana(4, lens({1, 2, 3, 4}))}) {
    const SpanningTree st = g.spanning_tree();
    const auto [C, cols] = st.cycle_matrix();
    const auto& B = st.b_expansion();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const IVec& row = B.at(cols[c]);
      for (std::size_t r = 0; r < C.size(); ++r) CHECK(row[r] == C[r][c]);
    }
  }
}

TEST_CASE("balancing: signed unit tangents cancel at every vertex") {
  for (const MetricGraph& g :
       {k4(lens({1, 2, 3, 4, 5, 6})), tl3(lens({1, 2, 3, 4, 5, 6, 7, 8, 9})), theta(ones(3))}) {
    const SpanningTree st = g.spanning_tree();
    const auto& B = st.b_expansion();
    const int gen = st.genus();
    for (const auto& v : g.vertices()) {
      IVec sum(static_cast<std::size_t>(gen), Int(0));
      for (const Edge& e : g.edges()) {
        if (e.src == v)
          for (int t = 0; t < gen; ++t) sum[static_cast<std::size_t>(t)] += B.at(e.id)[static_cast<std::size_t>(t)];
        if (e.dst == v)
          for (int t = 0; t < gen; ++t) sum[static_cast<std::size_t>(t)] -= B.at(e.id)[static_cast<std::size_t>(t)];
      }
      for (const Int& x : sum) CHECK(x == 0);
    }
  }
}

TEST_CASE("sign tables: ranges, zero cases, and the pointed/unpointed relation") {
  for (const MetricGraph& g :
       {k4(lens({1, 2, 3, 4, 5, 6})), tl3(lens({1, 2, 3, 4, 5, 6, 7, 8, 9})), theta(ones(3))}) {
    const SpanningTree st = g.spanning_tree();
    const auto [C, cols] = st.cycle_matrix();
    for (const auto& flat : g.vertices()) {
      for (const EdgeId e : st.tree()) {
        // The difference sgn_pointed - sgn_unpointed is the same for every
        // cotree edge: +1 when e points away from the basepoint, else -1.
        const int alpha = st.sgn_pointed(flat, e, st.cotree()[0]) -
                          st.sgn_unpointed(e, st.cotree()[0]);
        CHECK((alpha == 1 || alpha == -1));
        for (std::size_t i = 0; i < st.cotree().size(); ++i) {
          const EdgeId eps = st.cotree()[i];
          const int sp = st.sgn_pointed(flat, e, eps);
          const int su = st.sgn_unpointed(e, eps);
          CHECK(sp >= -2);
          CHECK(sp <= 2);
          CHECK(su >= -1);
          CHECK(su <= 1);
          CHECK(sp - su == alpha);
          // Unpointed sign vanishes exactly on the fundamental cycle of eps.
          const auto pos = std::find(cols.begin(), cols.end(), e) - cols.begin();
          CHECK((su == 0) == (C[i][static_cast<std::size_t>(pos)] != 0));
        }
      }
    }
  }
}

TEST_CASE("tree paths concatenate") {
  const MetricGraph g = k4(lens({1, 2, 3, 4, 5, 6}));
  const SpanningTree st = g.spanning_tree();
  CHECK(st.tree_path("p", "p").empty());
  for (const auto& u : g.vertices()) {
    for (const auto& v : g.vertices()) {
      for (const auto& w : g.vertices()) {
        auto lhs = walk_weights(st.tree_path(u, w));
        auto ab = st.tree_path(u, v);
        const auto bc = st.tree_path(v, w);
        ab.insert(ab.end(), bc.begin(), bc.end());
        CHECK(lhs == walk_weights(ab));
      }
    }
  }
  // Two-step path through the root.
  const auto path = st.tree_path("p", "q");
  REQUIRE(path.size() == 2);
  CHECK(path[0] == PathStep{4, -1});
  CHECK(path[1] == PathStep{5, +1});
}

TEST_CASE("bridges and contraction") {
  // Dumbbell: loops at a and b joined by a bridge.
  const MetricGraph dumbbell({"a", "b"},
                             {{1, "a", "a", Rat(1)}, {2, "b", "b", Rat(2)}, {3, "a", "b", Rat(3)}});
  CHECK(find_bridges(dumbbell) == std::set<EdgeId>{3});

  std::map<std::string, std::string> vmap;
  const auto [core, gone] = contract_bridges(dumbbell, &vmap);
  CHECK(gone == std::vector<EdgeId>{3});
  CHECK(core.vertices() == std::vector<std::string>{"a"});
  CHECK(core.genus() == dumbbell.genus());
  CHECK(vmap.at("b") == "a");

  // Bridgeless graphs are untouched.
  const auto [same, none] = contract_bridges(k4(ones(6)), nullptr);
  CHECK(none.empty());
  CHECK(same.edges().size() == 6);

  // A tree collapses to one vertex.
  const MetricGraph path({"x", "y", "z"}, {{1, "x", "y", Rat(1)}, {2, "y", "z", Rat(1)}});
  const auto [pt, both] = contract_bridges(path, nullptr);
  CHECK(pt.vertices().size() == 1);
  CHECK(pt.genus() == 0);
  CHECK(both == std::vector<EdgeId>{1, 2});

  // Contraction keeps the lexicographically smaller vertex name.
  const MetricGraph l3 = contract_edges(tl3(lens({1, 2, 3, 4, 5, 6, 7, 8, 9})), {7, 8, 9});
  CHECK(l3.vertices() == std::vector<std::string>{"A1", "A2", "B2"});
  CHECK(l3.genus() == 4);
  const SpanningTree l3st = l3.spanning_tree({5, 6});
  CHECK(l3st.cotree() == std::vector<EdgeId>{1, 2, 3, 4});
  CHECK(l3st.b_expansion().at(5) == IVec{0, -1, 1, 1});
  CHECK(l3st.b_expansion().at(6) == IVec{-1, 0, 1, 1});

  // Contracting a loop is rejected.
  CHECK_THROWS_AS(contract_edges(loop_graph(Rat(1)), {1}), GraphError);
}

TEST_CASE("subdivision keeps ids stable on the source side") {
  const MetricGraph g = theta(lens({2, 3, 5}));
  std::vector<std::string> names;
  const MetricGraph s = subdivide(g, {{2, Rat(1, 3)}}, &names);
  REQUIRE(names.size() == 1);
  CHECK(names[0] == "e2@1/3");
  CHECK(s.edges().size() == 4);
  CHECK(s.edge(2).src == "u");
  CHECK(s.edge(2).dst == "e2@1/3");
  CHECK(s.edge(2).length == Rat(1, 3));
  CHECK(s.edge(4).src == "e2@1/3");
  CHECK(s.edge(4).dst == "v");
  CHECK(s.edge(4).length == Rat(8, 3));
  CHECK(s.genus() == g.genus());

  // Two cuts on one edge: fresh ids in offset order, duplicates shared.
  std::vector<std::string> names2;
  const MetricGraph s2 = subdivide(g, {{1, Rat(1)}, {1, Rat(1, 2)}, {1, Rat(1)}}, &names2);
  REQUIRE(names2.size() == 3);
  CHECK(names2[0] == "e1@1");
  CHECK(names2[1] == "e1@1/2");
  CHECK(names2[2] == "e1@1");
  CHECK(s2.edge(1).dst == "e1@1/2");
  CHECK(s2.edge(1).length == Rat(1, 2));
  CHECK(s2.edge(4).src == "e1@1/2");
  CHECK(s2.edge(4).dst == "e1@1");
  CHECK(s2.edge(4).length == Rat(1, 2));
  CHECK(s2.edge(5).src == "e1@1");
  CHECK(s2.edge(5).dst == "v");
  CHECK(s2.edge(5).length == Rat(1));

  // Offsets must be interior.
  CHECK_THROWS_AS(subdivide(g, {{1, Rat(0)}}, nullptr), GraphError);
  CHECK_THROWS_AS(subdivide(g, {{1, Rat(2)}}, nullptr), GraphError);
  CHECK_THROWS_AS(subdivide(g, {{1, Rat(5, 2)}}, nullptr), GraphError);
}
