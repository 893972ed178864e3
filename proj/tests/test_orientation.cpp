#include "doctest.h"
#include "fbc/orientation.hpp"
#include "helpers.hpp"

using namespace fbc;
using fbc::test::fixture;

TEST_CASE("classification of the fixtures") {
  CHECK(classify_orientability(fixture("oAndNone").map).kind == Orientability::PosOrientable);
  CHECK(classify_orientability(fixture("oAndNoneInv").map).kind == Orientability::NonOrientable);
  CHECK(classify_orientability(fixture("antiAnti").map).kind == Orientability::NegOrientable);
  CHECK(classify_orientability(fixture("antiAntiInv").map).kind == Orientability::NegOrientable);
  CHECK(classify_orientability(fixture("antiO").map).kind == Orientability::NegOrientable);
  CHECK(classify_orientability(fixture("antiOInv").map).kind == Orientability::NegOrientable);
  CHECK(classify_orientability(fixture("reversal").map).kind == Orientability::NegOrientable);
  CHECK(classify_orientability(fixture("bs12").map).kind == Orientability::PosOrientable);
  CHECK(classify_orientability(fixture("circleId").map).kind == Orientability::PosOrientable);
  // Both systems are satisfiable for the swap; positive wins.
  CHECK(classify_orientability(fixture("swapRose").map).kind == Orientability::PosOrientable);
  CHECK_THROWS_AS(classify_orientability(fixture("disjointRose").map), ValidationError);

  // The positively orientable example needs no flips: every image is positive.
  auto pos = classify_orientability(fixture("oAndNone").map);
  REQUIRE(pos.assignment.has_value());
  for (int s : pos.assignment->flips) CHECK(s == 1);
}

TEST_CASE("reorienting realizes M = +-A") {
  for (const char* name : {"oAndNone", "antiAnti", "antiAntiInv", "antiO", "antiOInv",
                           "reversal", "bs12"}) {
    auto f = fixture(name).map;
    auto cls = classify_orientability(f);
    REQUIRE(cls.assignment.has_value());
    GraphMap g = reorient(f, *cls.assignment);
    IntMatrix a = transition_matrix(g), m = signed_chain_matrix(g);
    if (cls.kind == Orientability::PosOrientable) {
      CHECK(m.m == a.m);
    } else {
      CHECK(m.m == (-a.m).eval());
    }
  }
}

TEST_CASE("negative squares to positive") {
  for (const char* name : {"antiAnti", "antiAntiInv", "antiO", "reversal"}) {
    auto f = fixture(name).map;
    REQUIRE(classify_orientability(f).kind == Orientability::NegOrientable);
    CHECK(classify_orientability(iterate_map(f, 2)).kind == Orientability::PosOrientable);
  }
}

TEST_CASE("edge double of the circle maps") {
  // Reversal: the positive lift of a~ is a.n, so the lift swaps the sheets.
  EdgeDouble rev = oriented_edge_double(fixture("reversal").map);
  CHECK(rev.matrix.m(0, 0) == 0);
  CHECK(rev.matrix.m(1, 0) == 1);
  CHECK(rev.matrix.m(0, 1) == 1);
  CHECK(rev.matrix.m(1, 1) == 0);
  // Doubling: positive lifts stay in their sheet.
  EdgeDouble dbl = oriented_edge_double(fixture("bs12").map);
  CHECK(dbl.matrix.m(0, 0) == 2);
  CHECK(dbl.matrix.m(1, 1) == 2);
  CHECK(dbl.matrix.m(0, 1) == 0);
  CHECK(dbl.matrix.m(1, 0) == 0);
}

TEST_CASE("edge double structure") {
  for (const char* name : {"oAndNone", "oAndNoneInv", "antiAnti", "antiO", "reversal", "bs12"}) {
    auto f = fixture(name).map;
    EdgeDouble d = oriented_edge_double(f);
    const int n = f.graph.num_edges();
    REQUIRE(d.graph.num_edges() == 2 * n);

    // Every lifted image is a positive path (the lift is pos-orientable).
    for (const auto& img : d.lift.edge_image) {
      for (const auto& s : img) CHECK(s.sign == +1);
    }
    CHECK(signed_chain_matrix(d.lift).m == d.matrix.m);

    // p(sigma(x)) = reverse of p(x), and p(f^(x)) = f(p(x)) as paths.
    for (int x = 0; x < 2 * n; ++x) {
      EdgeStep px = d.projection[x];
      EdgeStep psx = d.projection[d.involution[x]];
      CHECK(psx.edge == px.edge);
      CHECK(psx.sign == -px.sign);
      EdgePath lift_img = d.lift.edge_image[x];
      EdgePath down;
      for (const auto& s : lift_img) {
        EdgeStep q = d.projection[s.edge];
        down.push_back({q.edge, q.sign * s.sign});
      }
      CHECK(down == f.image(px));
    }

    // sigma and the lift commute edgewise: the lift image of sigma(x),
    // reversed and run through sigma, is the lift image of x.
    for (int x = 0; x < 2 * n; ++x) {
      EdgePath a = d.lift.edge_image[d.involution[x]];
      EdgePath b;
      for (size_t i = a.size(); i-- > 0;) b.push_back({d.involution[a[i].edge], +1});
      CHECK(b == d.lift.edge_image[x]);
    }
  }
}

TEST_CASE("edge double detects the classification") {
  // Pos-orientable: the double's digraph splits into two components mapping
  // isomorphically to D(A); neg: irreducible with even period; none:
  // primitive.
  auto components = [](const IntMatrix& m) {
    const int n = static_cast<int>(m.m.rows());
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      comp[s] = count;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
          if ((m.m(v, w) != 0 || m.m(w, v) != 0) && comp[w] < 0) {
            comp[w] = count;
            stack.push_back(w);
          }
        }
      }
      ++count;
    }
    return count;
  };

  for (const char* name : {"oAndNone", "bs12", "swapRose", "circleId"}) {
    auto f = fixture(name).map;
    EdgeDouble d = oriented_edge_double(f);
    CHECK(components(d.matrix) == 2);
    // Each component carries one copy of every base edge, so it maps
    // isomorphically onto D(A).
    const int n = f.graph.num_edges();
    long long arcs = 0, base_arcs = 0;
    for (int i = 0; i < 2 * n; ++i)
      for (int j = 0; j < 2 * n; ++j) arcs += d.matrix.m(i, j);
    IntMatrix a = transition_matrix(f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) base_arcs += a.m(i, j);
    CHECK(arcs == 2 * base_arcs);
  }
  for (const char* name : {"antiAnti", "antiAntiInv", "antiO", "antiOInv", "reversal"}) {
    EdgeDouble d = oriented_edge_double(fixture(name).map);
    auto rep = irreducibility_report(d.matrix);
    CHECK(components(d.matrix) == 1);
    CHECK(rep.irreducible);
    CHECK(rep.period % 2 == 0);
  }
  {
    EdgeDouble d = oriented_edge_double(fixture("oAndNoneInv").map);
    CHECK(irreducibility_report(d.matrix).primitive);
  }
}

TEST_CASE("spectral dichotomy") {
  for (const char* name : {"oAndNone", "oAndNoneInv", "antiAnti", "antiAntiInv", "antiO",
                           "antiOInv", "circleId", "bs12", "reversal", "swapRose"}) {
    auto rep = verify_spectral_dichotomy(fixture(name).map);
    CHECK(rep.pass);
  }
  auto rep = verify_spectral_dichotomy(fixture("oAndNoneInv").map);
  CHECK(rep.kind == Orientability::NonOrientable);
  CHECK(rep.margin > 0.5);
  CHECK(rep.lambda == doctest::Approx(3.08).epsilon(1e-2));
  CHECK(rep.rho == doctest::Approx(2.15).epsilon(1e-2));
}
