#include "fbc/pipeline.hpp"

#include "fbc/roots.hpp"

namespace fbc {

Analysis analyze(GraphMapDocument doc, const PresentationOptions& opts) {
  Analysis a;
  a.doc = std::move(doc);
  const GraphMap& f = a.doc.map;
  f.validate();
  a.transition = transition_matrix(f);
  a.chain = signed_chain_matrix(f);
  a.vertex_action = vertex_action_matrix(f);
  a.irreducibility = irreducibility_report(a.transition);
  a.train_track = is_train_track(f);
  if (a.irreducibility.irreducible) a.orientability = classify_orientability(f);
  a.presentation = compute_presentation(f, opts);
  a.lifted = lifted_matrices(a.presentation, f);
  a.bundle = invariant_bundle(a.presentation, a.lifted, f);
  a.cone = cone_of_sections(a.bundle.mcmullen_normalized);
  if (a.orientability) a.eps = orientation_class(a.presentation, *a.orientability);
  return a;
}

void VerifyReport::add(const std::string& name, bool pass, const std::string& detail) {
  checks.push_back({name, true, false, pass, detail});
  all_pass = all_pass && pass;
}

void VerifyReport::info(const std::string& name, bool value, const std::string& detail) {
  checks.push_back({name, true, true, value, detail});
}

void VerifyReport::skip(const std::string& name, const std::string& why) {
  checks.push_back({name, false, false, true, why});
}

VerifyReport run_verify(const Analysis& a, double gap_tolerance) {
  VerifyReport rep;
  const GraphMap& f = a.doc.map;
  // Structural facts about the input; no identity depends on them holding.
  rep.info("train_track", a.train_track.ok,
           a.train_track.ok ? "" : a.train_track.detail);
  rep.info("irreducible", a.irreducibility.irreducible,
           "period " + std::to_string(a.irreducibility.period) +
               (a.irreducibility.primitive ? ", primitive" : ""));

  if (a.orientability) {
    DichotomyReport th = verify_spectral_dichotomy(f, gap_tolerance);
    rep.add("spectral_dichotomy[" + to_string(th.kind) + "]", th.pass, th.detail);
    RelationReport rel = verify_relations(a.bundle, a.presentation, *a.orientability);
    if (rel.pos_applicable)
      rep.add("relation_pos", rel.pos_ok, "m^ = alexander*vertex up to unit");
    else
      rep.skip("relation_pos", "base map is not positively orientable");
    if (rel.neg_applicable)
      rep.add("relation_neg", rel.neg_ok, "iota(m)*r = alexander*vertex up to unit");
    else
      rep.skip("relation_neg", "base map is not negatively orientable");
    rep.add("relation_mod2", rel.mod2_ok, "m^ = alexander*vertex mod 2");
  } else {
    rep.skip("spectral_dichotomy", "transition matrix is reducible");
    rep.skip("relation_pos", "transition matrix is reducible");
    rep.skip("relation_neg", "transition matrix is reducible");
    RelationReport rel = verify_relations(a.bundle, a.presentation,
                                          OrientabilityClass{Orientability::NonOrientable, {}});
    rep.add("relation_mod2", rel.mod2_ok, "m^ = alexander*vertex mod 2");
  }

  // Specializations at the dual class recover the reciprocal characteristic
  // polynomials of the transition matrix and of the monodromy.
  const CohomClass& u0 = a.presentation.dual_class;
  rep.add("specialize_mcmullen",
          unit_equivalent(specialize(a.bundle.mcmullen, u0), reciprocal_char(char_poly(a.transition))),
          "m^{u0} = det(t^-1 I - A) up to unit");
  {
    Laurent1 spec = specialize(a.bundle.alexander, u0);
    if (a.presentation.rank >= 2) {
      Laurent1 one_minus_t(1);
      one_minus_t.add_term(ExpVec{0}, 1);
      one_minus_t.add_term(ExpVec{1}, -1);
      spec = spec * one_minus_t;
    }
    rep.add("specialize_alexander",
            unit_equivalent(spec, reciprocal_char(monodromy_char_poly(f))),
            "(1-t)^p alexander^{u0} = det(t^-1 I - f_*) up to unit");
  }

  if (f.graph.num_edges() <= 12) {
    OracleReport orc = compare_multicycle(a.lifted, a.bundle.mcmullen_normalized,
                                          f.graph.num_edges(), a.presentation.group);
    rep.add("oracle_multicycle", orc.pass,
            orc.pass ? "cycle expansion equals z^{-|E|} det(zI - A~)"
                     : "expected " + orc.expected + ", got " + orc.got);
  } else {
    rep.skip("oracle_multicycle", "more than 12 edges");
  }
  if (f.graph.num_edges() <= 8) {
    OracleReport orc = compare_char_poly(a.chain);
    rep.add("oracle_char_poly", orc.pass,
            orc.pass ? "permutation expansion equals char_poly"
                     : "expected " + orc.expected + ", got " + orc.got);
  } else {
    rep.skip("oracle_char_poly", "more than 8 edges");
  }

  // The Newton-polytope and support statements assume full irreducibility;
  // gate on the necessary conditions the artifact can check (primitive +
  // train track + connected Whitehead graphs).
  const bool fully_irreducible_shape =
      a.irreducibility.primitive && a.train_track.ok && whitehead_graphs_connected(f);

  if (fully_irreducible_shape && a.orientability &&
      a.orientability->kind != Orientability::NonOrientable && a.presentation.rank <= 2) {
    rep.add("newton_cone",
            newton_dual_cone_check(a.bundle.alexander, a.cone, u0, *a.orientability),
            "cone of sections is the dual cone of a Newton-polytope vertex");
  } else {
    rep.skip("newton_cone",
             "needs an orientable, fully-irreducible-shaped base map of rank <= 2");
  }

  if (fully_irreducible_shape) {
    std::vector<std::vector<Integer>> rows;
    for (const auto& e : a.bundle.mcmullen_normalized.support()) {
      std::vector<Integer> r;
      for (int64_t v : e) r.push_back(Integer(v));
      rows.push_back(std::move(r));
    }
    auto hnf = row_hnf(std::move(rows));
    int rank = 0;
    for (const auto& r : hnf) {
      bool nonzero = false;
      for (const auto& v : r) nonzero = nonzero || !v.is_zero();
      rank += nonzero;
    }
    rep.add("support_generates", rank == a.presentation.rank,
            "supp(m') spans a rank-" + std::to_string(rank) + " sublattice");
  } else {
    rep.skip("support_generates", "full-irreducibility preconditions not met");
  }
  return rep;
}

}  // namespace fbc
