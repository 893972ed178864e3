#include "doctest.h"
#include "fbc/pipeline.hpp"
#include "helpers.hpp"

using namespace fbc;
using fbc::test::fixture;
using fbc::test::l1;
using fbc::test::mono;

namespace {

Analysis run(const char* name) { return analyze(fixture(name)); }

LaurentPoly az(std::initializer_list<std::pair<ExpVec, long long>> terms) {
  LaurentPoly p(2);
  for (auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("alexander polynomial") {
  // Torus group Z^2: trivial polynomial.
  CHECK(unit_equivalent(run("circleId").bundle.alexander, LaurentPoly::constant(2, 1)));
  // BS(1,2): z - 2 (the rank-1 factor cancels the denominator).
  CHECK(unit_equivalent(run("bs12").bundle.alexander, l1({-2, 1})));
  // The six-edge example: z^4 + 2z^3 + (1-7a)z^2 + 2az + a^2.
  CHECK(unit_equivalent(run("antiO").bundle.alexander,
                        az({{{0, 4}, 1}, {{0, 3}, 2}, {{0, 2}, 1}, {{1, 2}, -7},
                            {{1, 1}, 2}, {{2, 0}, 1}})));
}

TEST_CASE("mcmullen polynomial") {
  CHECK(unit_equivalent(run("bs12").bundle.mcmullen, l1({-2, 1})));
  CHECK(run("bs12").bundle.mcmullen_normalized == l1({-2, 1}, -1));  // 1 - 2z^-1
  CHECK(unit_equivalent(run("reversal").bundle.mcmullen, l1({-1, 1})));
  CHECK(unit_equivalent(run("antiO").bundle.mcmullen,
                        az({{{0, 6}, 1}, {{0, 5}, -2}, {{0, 4}, 1}, {{1, 4}, -8},
                            {{2, 2}, 8}, {{1, 2}, -1}, {{2, 1}, 2}, {{3, 0}, -1}})));
  // m' carries 1 in its support and the dual class is positive on the rest.
  for (const char* name : {"antiO", "oAndNone", "oAndNoneInv", "antiAnti", "antiOInv"}) {
    Analysis a = run(name);
    ExpVec origin(a.presentation.rank, 0);
    CHECK(a.bundle.mcmullen_normalized.coeff(origin).is_one());
    for (const auto& s : a.bundle.mcmullen_normalized.support()) {
      if (s != origin) CHECK(a.presentation.dual_class(s) > 0);
    }
  }
}

TEST_CASE("vertex polynomial") {
  // Rank two for the identity circle: z - 1 read in the (a, z) coordinates.
  CHECK(unit_equivalent(run("circleId").bundle.vertex_poly,
                        az({{{0, 1}, 1}, {{0, 0}, -1}})));
  CHECK(unit_equivalent(run("antiO").bundle.vertex_poly,
                        az({{{0, 2}, 1}, {{1, 0}, -1}})));  // z^2 - a
  CHECK(unit_equivalent(run("oAndNone").bundle.vertex_poly, l1({1, -2, 1})));  // (z-1)^2
}

TEST_CASE("orientation class") {
  Analysis a = run("antiO");
  REQUIRE(a.eps.has_value());
  CHECK(a.eps->functional == std::vector<int64_t>{0, 1});  // eps(a)=+1, eps(z)=-1

  Analysis pos = run("oAndNone");
  REQUIRE(pos.eps.has_value());
  CHECK(pos.eps->functional == std::vector<int64_t>{0});  // identity involution

  CHECK(!run("oAndNoneInv").eps.has_value());
}

TEST_CASE("relations between the three polynomials") {
  // Positively orientable fixtures: m^ = alexander * vertex.
  for (const char* name : {"oAndNone", "bs12", "circleId", "swapRose"}) {
    Analysis a = run(name);
    auto rel = verify_relations(a.bundle, a.presentation, *a.orientability);
    CHECK(rel.pos_applicable);
    CHECK(rel.pos_ok);
    CHECK(rel.mod2_ok);
  }
  // Negatively orientable fixtures: iota(m) * r = alexander * vertex.
  for (const char* name : {"antiAnti", "antiAntiInv", "antiO", "antiOInv", "reversal"}) {
    Analysis a = run(name);
    auto rel = verify_relations(a.bundle, a.presentation, *a.orientability);
    CHECK(rel.neg_applicable);
    CHECK(rel.neg_ok);
    CHECK(rel.mod2_ok);
  }
  // The non-orientable fixture still satisfies the mod-2 relation.
  {
    Analysis a = run("oAndNoneInv");
    auto rel = verify_relations(a.bundle, a.presentation, *a.orientability);
    CHECK(!rel.pos_applicable);
    CHECK(!rel.neg_applicable);
    CHECK(rel.mod2_ok);
  }
}

TEST_CASE("denominator divides numerator") {
  for (const char* name : {"oAndNone", "oAndNoneInv", "antiAnti", "antiAntiInv", "antiO",
                           "antiOInv", "bs12", "circleId", "reversal", "swapRose"}) {
    Analysis a = run(name);
    LaurentPoly num = det_z_minus(a.lifted.chain);
    if (a.presentation.rank == 1) {
      LaurentPoly r = LaurentPoly::deck(1);
      r -= LaurentPoly::constant(1, 1);
      num *= r;
    }
    CHECK(div_exact(num, det_z_minus(a.lifted.vertex)).has_value());
  }
}

TEST_CASE("specialization identities at the dual class") {
  for (const char* name : {"oAndNone", "oAndNoneInv", "antiAnti", "antiAntiInv", "antiO",
                           "antiOInv", "bs12", "circleId", "reversal", "swapRose"}) {
    Analysis a = run(name);
    const CohomClass& u0 = a.presentation.dual_class;
    CHECK(unit_equivalent(specialize(a.bundle.mcmullen, u0),
                          reciprocal_char(char_poly(a.transition))));
    Laurent1 spec = specialize(a.bundle.alexander, u0);
    if (a.presentation.rank >= 2) spec = spec * l1({1, -1});
    CHECK(unit_equivalent(spec, reciprocal_char(monodromy_char_poly(a.doc.map))));
  }
  // Frozen values for the six-edge example.
  Analysis a = run("antiO");
  Laurent1 dspec = specialize(a.bundle.alexander, a.presentation.dual_class);
  CHECK(unit_equivalent(dspec, l1({1, 2, -6, 2, 1}, -4)));
  Laurent1 mspec = specialize(a.bundle.mcmullen, a.presentation.dual_class);
  CHECK(unit_equivalent(mspec, l1({1, -2, -7, 0, 7, 2, -1}, -6)));
}

TEST_CASE("support of the normalized mcmullen polynomial spans H") {
  for (const char* name : {"oAndNone", "oAndNoneInv", "antiAnti", "antiAntiInv", "antiO",
                           "antiOInv", "bs12"}) {
    Analysis a = run(name);
    std::vector<std::vector<Integer>> rows;
    for (const auto& e : a.bundle.mcmullen_normalized.support()) {
      std::vector<Integer> r;
      for (int64_t v : e) r.emplace_back(v);
      rows.push_back(std::move(r));
    }
    auto hnf = row_hnf(std::move(rows));
    int rank = 0;
    for (const auto& r : hnf) {
      bool nonzero = false;
      for (const auto& v : r) nonzero = nonzero || !v.is_zero();
      rank += nonzero;
    }
    CHECK(rank == a.presentation.rank);
  }
}

TEST_CASE("squared fixtures run the whole battery clean") {
  // The square of a map is a new graph map with its own mapping torus; all
  // mechanical identities must hold for it as well.  Squares of negatively
  // orientable maps come out positively orientable.
  for (const char* name : {"antiO", "oAndNone", "antiAnti"}) {
    GraphMapDocument doc = fixture(name);
    doc.map = iterate_map(doc.map, 2);
    doc.name += "^2";
    Analysis a = analyze(std::move(doc));
    VerifyReport rep = run_verify(a);
    for (const auto& check : rep.checks) {
      INFO(a.doc.name << ": " << check.name);
      CHECK(check.pass);
    }
    REQUIRE(a.orientability.has_value());
    CHECK(a.orientability->kind == Orientability::PosOrientable);
  }
}

TEST_CASE("basis independence of the invariants") {
  auto doc = fixture("antiO");
  Analysis canonical = analyze(doc);
  PresentationOptions alt;
  alt.basepoint = "w";
  alt.tree_edges = std::vector<std::string>{"a"};
  Analysis other = analyze(doc, alt);
  REQUIRE(other.presentation.rank == 2);

  // The two presentations differ by a group automorphism a -> a^s,
  // z -> a^k z; find it via the exactly-normalized mcmullen polynomial and
  // check that it carries all invariants across.
  auto transform = [](const LaurentPoly& p, int64_t s, int64_t k) {
    LaurentPoly out(2);
    for (const auto& [e, c] : p.terms()) out.add_term({s * e[0] + k * e[1], e[1]}, c);
    return out;
  };
  bool found = false;
  for (int64_t s : {1ll, -1ll}) {
    for (int64_t k = -8; k <= 8 && !found; ++k) {
      if (transform(other.bundle.mcmullen_normalized, s, k) !=
          canonical.bundle.mcmullen_normalized)
        continue;
      found = true;
      CHECK(unit_equivalent(transform(other.bundle.alexander, s, k),
                            canonical.bundle.alexander));
      CHECK(unit_equivalent(transform(other.bundle.vertex_poly, s, k),
                            canonical.bundle.vertex_poly));
      // Identical cone after the coordinate change.
      std::vector<ExpVec> mapped;
      for (const auto& v : other.cone.support_vectors) {
        LaurentPoly q = transform(mono(v, 1), s, k);
        mapped.push_back(q.min_term().first);
      }
      std::sort(mapped.begin(), mapped.end());
      auto want = canonical.cone.support_vectors;
      std::sort(want.begin(), want.end());
      CHECK(mapped == want);
    }
  }
  CHECK(found);
}
