#include "doctest.h"
#include "fbc/torus.hpp"
#include "helpers.hpp"

using namespace fbc;
using fbc::test::fixture;
using fbc::test::mono;

namespace {

LaurentPoly amono(int64_t a_exp, long long c) { return mono({a_exp, 0}, c); }

}  // namespace

TEST_CASE("presentation of the circle maps") {
  auto id = fixture("circleId").map;
  TorusPresentation pres = compute_presentation(id);
  CHECK(pres.rank == 2);
  CHECK(pres.cocycle[0] == KVec{1});  // the loop generates K

  auto bs = fixture("bs12").map;
  TorusPresentation pres2 = compute_presentation(bs);
  CHECK(pres2.rank == 1);  // coker(2 - 1) = 0
  CHECK(pres2.cocycle[0].empty());

  TorusPresentation swp = compute_presentation(fixture("swapRose").map);
  CHECK(swp.rank == 2);
  CHECK(swp.cocycle[0] == KVec{1});
  CHECK(swp.cocycle[1] == KVec{1});

  // Rank collapses to 1 when f_* - 1 is nonsingular; torsion is discarded.
  CHECK(compute_presentation(fixture("oAndNone").map).rank == 1);    // det 3
  CHECK(compute_presentation(fixture("antiAnti").map).rank == 1);    // det 2
  CHECK(compute_presentation(fixture("oAndNoneInv").map).rank == 1);
  CHECK(compute_presentation(fixture("antiOInv").map).rank == 2);
}

TEST_CASE("presentation of the six-edge example") {
  auto f = fixture("antiO").map;
  TorusPresentation pres = compute_presentation(f);
  CHECK(pres.rank == 2);
  const Graph& g = f.graph;
  // Loop classes with respect to the tree {f}: a and c hit the generator,
  // b hits its inverse, d and e die.
  CHECK(pres.spanning_tree == std::vector<int>{g.edge_index("f")});
  CHECK(pres.cocycle[g.edge_index("a")] == KVec{1});
  CHECK(pres.cocycle[g.edge_index("b")] == KVec{-1});
  CHECK(pres.cocycle[g.edge_index("c")] == KVec{1});
  CHECK(pres.cocycle[g.edge_index("d")] == KVec{0});
  CHECK(pres.cocycle[g.edge_index("e")] == KVec{0});
  CHECK(pres.cocycle[g.edge_index("f")] == KVec{0});
  CHECK(pres.potentials[g.vertex_index("v")] == KVec{0});
  CHECK(pres.potentials[g.vertex_index("w")] == KVec{1});
  // q_K annihilates the image of f_* - 1.
  for (const auto& row : pres.project_K) CHECK(row.size() == 5);
}

TEST_CASE("lifted matrices of the six-edge example, entry exact") {
  auto f = fixture("antiO").map;
  TorusPresentation pres = compute_presentation(f);
  LiftedMatrices lm = lifted_matrices(pres, f);

  REQUIRE(lm.vertex_names == std::vector<std::string>{"v", "w"});
  CHECK(lm.vertex(0, 0).is_zero());
  CHECK(lm.vertex(0, 1) == amono(1, 1));  // image of w is alpha * v
  CHECK(lm.vertex(1, 0) == amono(0, 1));  // image of v is w
  CHECK(lm.vertex(1, 1).is_zero());

  // The displayed 6x6 matrix, rows/columns a..f.
  const long long kZero = 100;  // marker for an absent entry
  const long long C[6][6] = {
      // a_exp encoded as 0 or 1; coefficient with sign; kZero = zero entry
      {0, kZero, 0, 0, 0, kZero},      // row a: -1 0 -1 -1 -1 0
      {1, kZero, 1, 1, 1, kZero},      // row b: -alpha 0 -alpha -alpha -2alpha 0
      {kZero, kZero, kZero, 0, kZero, 0},
      {1, 0, kZero, 0, kZero, 0},
      {1, 0, kZero, 0, kZero, 0},
      {1, kZero, 1, kZero, kZero, kZero},
  };
  const long long coeff[6][6] = {
      {-1, 0, -1, -1, -1, 0},
      {-1, 0, -1, -1, -2, 0},
      {0, 0, 0, -1, 0, -1},
      {-1, -1, 0, -1, 0, -1},
      {-1, -2, 0, -1, 0, -1},
      {-1, 0, -1, 0, 0, 0},
  };
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (C[i][j] == kZero) {
        CHECK(lm.chain(i, j).is_zero());
      } else {
        CHECK(lm.chain(i, j) == amono(C[i][j], coeff[i][j]));
      }
    }
  }
  // A~ has the same monomials with positive coefficients.
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      CHECK(lm.transition(i, j) == -lm.chain(i, j));
    }
  }

  // det(zI - M~) is the displayed degree-six numerator.
  LaurentPoly num(2);
  for (auto& [e, c] : std::initializer_list<std::pair<ExpVec, long long>>{
           {{0, 6}, 1}, {{0, 5}, 2}, {{0, 4}, 1}, {{1, 4}, -8},
           {{2, 2}, 8}, {{1, 2}, -1}, {{2, 1}, -2}, {{3, 0}, -1}})
    num.add_term(e, c);
  CHECK(det_z_minus(lm.chain) == num);
}

TEST_CASE("column mass of the transition lift") {
  for (const char* name : {"antiO", "oAndNone", "antiAnti", "antiOInv"}) {
    auto f = fixture(name).map;
    TorusPresentation pres = compute_presentation(f);
    LiftedMatrices lm = lifted_matrices(pres, f);
    for (int e : f.graph.edges_by_name()) {
      int col = 0;
      for (size_t i = 0; i < lm.edge_names.size(); ++i)
        if (lm.edge_names[i] == f.graph.edges[e].name) col = static_cast<int>(i);
      Integer mass;
      for (int i = 0; i < static_cast<int>(lm.edge_names.size()); ++i) {
        for (const auto& [exp, c] : lm.transition(i, col).terms()) mass += c;
      }
      CHECK(mass == Integer(static_cast<long long>(f.edge_image[e].size())));
    }
  }
}

TEST_CASE("vertex cycles") {
  auto id = fixture("circleId").map;
  TorusPresentation pres = compute_presentation(id);
  auto cycles = vertex_cycles(pres, id);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].cls == ExpVec{0, -1});

  auto f = fixture("antiO").map;
  TorusPresentation pres2 = compute_presentation(f);
  auto cycles2 = vertex_cycles(pres2, f);
  REQUIRE(cycles2.size() == 1);
  CHECK(cycles2[0].orbit.size() == 2);
  CHECK(cycles2[0].cls == ExpVec{1, -2});  // alpha z^-2

  auto g = fixture("oAndNone").map;
  auto cycles3 = vertex_cycles(compute_presentation(g), g);
  CHECK(cycles3.size() == 2);  // two fixed vertices

  auto inv = fixture("antiOInv").map;
  auto cycles4 = vertex_cycles(compute_presentation(inv), inv);
  REQUIRE(cycles4.size() == 2);  // orbits (0 1 2) and (3 4)
  CHECK(cycles4[0].orbit.size() + cycles4[1].orbit.size() == 5);
}

TEST_CASE("the K projection is fixed by the induced action") {
  // For every edge loop gamma_e, the signed cocycle sum over f(gamma_e)
  // equals the sum over gamma_e; this is project_K (f_* - 1) = 0.
  for (const char* name : {"antiO", "oAndNone", "oAndNoneInv", "swapRose", "circleId",
                           "antiOInv"}) {
    auto f = fixture(name).map;
    TorusPresentation pres = compute_presentation(f);
    const Graph& g = f.graph;
    auto cocycle_sum = [&](const EdgePath& p) {
      KVec acc(pres.rank - 1, 0);
      for (const auto& s : p)
        for (int r = 0; r < pres.rank - 1; ++r) acc[r] += s.sign * pres.cocycle[s.edge][r];
      return acc;
    };
    for (int e = 0; e < g.num_edges(); ++e) {
      EdgePath loop = pres.tree_paths[g.edges[e].tail];
      loop.push_back({e, +1});
      EdgePath back = reverse_path(pres.tree_paths[g.edges[e].head]);
      loop.insert(loop.end(), back.begin(), back.end());
      CHECK(cocycle_sum(loop) == pres.cocycle[e]);
      EdgePath image;
      for (const auto& s : loop) {
        EdgePath part = f.image(s);
        image.insert(image.end(), part.begin(), part.end());
      }
      CHECK(cocycle_sum(image) == pres.cocycle[e]);
    }
  }
}

TEST_CASE("smith and hermite forms") {
  // coker([[−1,1],[1,−1]]) is Z: one zero diagonal entry.
  std::vector<std::vector<Integer>> m = {{Integer(-1), Integer(1)}, {Integer(1), Integer(-1)}};
  auto snf = smith_diagonalize(m);
  int zeros = 0;
  for (const auto& d : snf.diagonal) zeros += d.is_zero();
  CHECK(zeros == 1);

  auto hnf = row_hnf({{Integer(-2), Integer(4)}, {Integer(3), Integer(5)}});
  CHECK(hnf[0][0] > Integer(0));
}
