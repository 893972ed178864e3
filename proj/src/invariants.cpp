#include "fbc/invariants.hpp"

namespace fbc {

namespace {

LaurentPoly z_minus_1(int rank) {
  LaurentPoly p = LaurentPoly::deck(rank);
  p -= LaurentPoly::constant(rank, 1);
  return p;
}

}  // namespace

LaurentPoly alexander_polynomial(const TorusPresentation& pres, const LiftedMatrices& lifted) {
  LaurentPoly num = det_z_minus(lifted.chain);
  LaurentPoly den = det_z_minus(lifted.vertex);
  if (pres.rank == 1) num *= z_minus_1(pres.rank);
  LaurentPoly q = monic_div_in_z(num, den);
  return unit_normal_form(q);
}

std::pair<LaurentPoly, LaurentPoly> mcmullen_polynomial(const TorusPresentation& pres,
                                                        const LiftedMatrices& lifted) {
  LaurentPoly det = det_z_minus(lifted.transition);
  ExpVec shift(pres.rank, 0);
  shift[pres.rank - 1] = -static_cast<int64_t>(lifted.edge_names.size());
  LaurentPoly normalized = det.shifted(shift);
  ExpVec origin(pres.rank, 0);
  if (!normalized.coeff(origin).is_one())
    throw TheoryError("MalformedNormalization",
                      "z^{-|E|} det(zI - A~) does not have constant term 1");
  return {unit_normal_form(det), normalized};
}

LaurentPoly vertex_polynomial(const TorusPresentation& pres, const GraphMap& f) {
  auto cycles = vertex_cycles(pres, f);  // asserts the det identity
  LaurentPoly prod = LaurentPoly::constant(pres.rank, 1);
  for (const auto& vc : cycles) {
    LaurentPoly factor = LaurentPoly::constant(pres.rank, 1);
    factor -= LaurentPoly::monomial(vc.cls, 1);
    prod *= factor;
  }
  return unit_normal_form(prod);
}

InvariantBundle invariant_bundle(const TorusPresentation& pres, const LiftedMatrices& lifted,
                                 const GraphMap& f) {
  InvariantBundle b;
  b.rank = pres.rank;
  b.r_is_z_minus_1 = pres.rank == 1;
  b.alexander = alexander_polynomial(pres, lifted);
  auto [m, mn] = mcmullen_polynomial(pres, lifted);
  b.mcmullen = std::move(m);
  b.mcmullen_normalized = std::move(mn);
  b.vertex_poly = vertex_polynomial(pres, f);
  return b;
}

std::optional<CohomClass> orientation_class(const TorusPresentation& pres,
                                            const OrientabilityClass& orient) {
  CohomClass eps;
  eps.functional.assign(pres.rank, 0);
  switch (orient.kind) {
    case Orientability::PosOrientable:
      return eps;
    case Orientability::NegOrientable:
      for (int i = 0; i < pres.rank; ++i) {
        int64_t v = pres.dual_class.functional[i] % 2;
        eps.functional[i] = v < 0 ? -v : v;
      }
      return eps;
    case Orientability::NonOrientable:
      return std::nullopt;
  }
  return std::nullopt;
}

RelationReport verify_relations(const InvariantBundle& bundle, const TorusPresentation& pres,
                                const OrientabilityClass& orient) {
  RelationReport rep;
  LaurentPoly rhs = bundle.alexander * bundle.vertex_poly;
  LaurentPoly rhat = bundle.r_is_z_minus_1 ? z_minus_1(pres.rank)
                                           : LaurentPoly::constant(pres.rank, 1);
  LaurentPoly mhat = bundle.mcmullen * rhat;

  if (orient.kind == Orientability::PosOrientable) {
    rep.pos_applicable = true;
    rep.pos_ok = unit_equivalent(mhat, rhs);
    if (!rep.pos_ok) rep.detail += "pos relation m^ = alexander*vertex failed; ";
  }
  if (orient.kind == Orientability::NegOrientable) {
    rep.neg_applicable = true;
    CohomClass eps = *orientation_class(pres, orient);
    LaurentPoly lhs = apply_involution(bundle.mcmullen, eps) * rhat;
    rep.neg_ok = unit_equivalent(lhs, rhs);
    if (!rep.neg_ok) rep.detail += "neg relation iota(m)*r = alexander*vertex failed; ";
  }
  rep.mod2_ok = mod2_equivalent(mhat, rhs);
  if (!rep.mod2_ok) rep.detail += "mod-2 relation failed; ";
  if (rep.detail.empty()) rep.detail = "ok";
  return rep;
}

}  // namespace fbc
