#include "fbc/cones.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fbc/roots.hpp"

namespace fbc {

namespace {

// Extreme rays for an externally assembled rank-2 constraint set, via the
// same angular sweep as cone_of_sections.
ConeOfSections rays_of_constraints(const std::vector<ExpVec>& constraints);

}  // namespace

std::string to_string(ClassOrientability c) {
  switch (c) {
    case ClassOrientability::Pos: return "pos";
    case ClassOrientability::Neg: return "neg";
    case ClassOrientability::None: return "none";
    case ClassOrientability::NotApplicable: return "not-applicable";
  }
  return "?";
}

bool ConeOfSections::contains(const CohomClass& u) const {
  for (const auto& s : support_vectors) {
    if (u(s) <= 0) return false;
  }
  return true;
}

namespace {

std::vector<int64_t> primitive_ray(int64_t x, int64_t y) {
  int64_t g = std::gcd(x < 0 ? -x : x, y < 0 ? -y : y);
  if (g == 0) return {0, 0};
  return {x / g, y / g};
}

}  // namespace

ConeOfSections cone_of_sections(const LaurentPoly& mn) {
  ConeOfSections cone;
  cone.rank = mn.rank();
  ExpVec origin(cone.rank, 0);
  if (mn.coeff(origin).is_zero())
    throw ValidationError("MalformedNormalization",
                          "normalized polynomial lacks the origin in its support");
  for (const auto& [e, c] : mn.terms()) {
    if (e != origin) cone.support_vectors.push_back(e);
  }
  if (cone.rank == 2 && !cone.support_vectors.empty()) {
    // Candidate boundary rays are perpendicular to the support vectors; the
    // extreme rays are the feasible ones of maximal angular spread.
    std::vector<std::vector<int64_t>> feasible;
    for (const auto& s : cone.support_vectors) {
      for (auto r : {primitive_ray(-s[1], s[0]), primitive_ray(s[1], -s[0])}) {
        bool ok = true;
        for (const auto& t : cone.support_vectors) ok = ok && r[0] * t[0] + r[1] * t[1] >= 0;
        if (ok) feasible.push_back(r);
      }
    }
    std::sort(feasible.begin(), feasible.end());
    feasible.erase(std::unique(feasible.begin(), feasible.end()), feasible.end());
    // An open 2-d cone cut out by finitely many half-planes has exactly two
    // boundary rays; cross products order them.
    if (feasible.size() >= 2) {
      auto cross = [](const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
        return a[0] * b[1] - a[1] * b[0];
      };
      std::pair<std::vector<int64_t>, std::vector<int64_t>> best = {feasible[0], feasible[0]};
      for (const auto& a : feasible)
        for (const auto& b : feasible)
          if (cross(a, b) > cross(best.first, best.second)) best = {a, b};
      if (cross(best.first, best.second) > 0) cone.extreme_rays = best;
    }
  }
  return cone;
}

namespace {

void require_class(const ConeOfSections& cone, const CohomClass& u) {
  if (!u.is_primitive())
    throw ValidationError("NotPrimitive", "class is not a primitive integral vector");
  if (!cone.contains(u))
    throw ValidationError("NotInCone", "class is not in the cone of sections");
}

}  // namespace

double lambda_of_class(const InvariantBundle& bundle, const ConeOfSections& cone,
                       const CohomClass& u) {
  require_class(cone, u);
  Laurent1 spec = specialize(bundle.mcmullen, u);
  MinRoot r = min_modulus_root(spec);
  if (!r.real)
    throw TheoryError("ComplexPerron", "minimizing root of the specialization is not real");
  return 1.0 / r.modulus;
}

double rho_of_class(const InvariantBundle& bundle, const TorusPresentation& pres,
                    const ConeOfSections& cone, const CohomClass& u) {
  require_class(cone, u);
  Laurent1 spec = specialize(bundle.alexander, u);
  if (pres.rank >= 2) {
    Laurent1 one_minus_t(1);
    one_minus_t.add_term(ExpVec{0}, 1);
    one_minus_t.add_term(ExpVec{1}, -1);
    spec = spec * one_minus_t;
  }
  if (spec.is_unit()) return 0;
  MinRoot r = min_modulus_root(spec);
  return 1.0 / r.modulus;
}

ClassOrientability classify_class(const OrientabilityClass& orient_base, const CohomClass& u0,
                                  const ConeOfSections& cone, const CohomClass& u) {
  require_class(cone, u);
  switch (orient_base.kind) {
    case Orientability::PosOrientable:
      return ClassOrientability::Pos;
    case Orientability::NegOrientable: {
      for (size_t i = 0; i < u.functional.size(); ++i) {
        if (((u.functional[i] - u0.functional[i]) & 1) != 0) return ClassOrientability::None;
      }
      return ClassOrientability::Neg;
    }
    case Orientability::NonOrientable:
      return ClassOrientability::None;
  }
  return ClassOrientability::NotApplicable;
}

ClassReport class_report(const InvariantBundle& bundle, const TorusPresentation& pres,
                         const ConeOfSections& cone, const OrientabilityClass& orient_base,
                         const CohomClass& u) {
  ClassReport rep;
  rep.u = u.functional;
  rep.in_cone = u.is_primitive() && cone.contains(u);
  rep.spec_mcmullen = specialize(bundle.mcmullen, u);
  rep.spec_alexander = specialize(bundle.alexander, u);
  if (!rep.in_cone) return rep;
  rep.lambda = lambda_of_class(bundle, cone, u);
  rep.rho = rho_of_class(bundle, pres, cone, u);
  rep.orientability = classify_class(orient_base, pres.dual_class, cone, u);
  return rep;
}

bool newton_dual_cone_check(const LaurentPoly& alexander, const ConeOfSections& cone,
                            const CohomClass& u0, const OrientabilityClass& orient_base) {
  if (orient_base.kind == Orientability::NonOrientable)
    throw ValidationError("NotOrientableBase",
                          "the Newton-polytope characterization needs an orientable base map");
  const int rank = alexander.rank();
  // Points of N(inv(alexander)).
  std::vector<ExpVec> pts;
  for (const auto& [e, c] : alexander.terms()) {
    ExpVec neg(rank);
    for (int i = 0; i < rank; ++i) neg[i] = -e[i];
    pts.push_back(neg);
  }
  // Vertex maximizing u0; it must be the unique maximizer.
  int64_t best = u0(pts[0]);
  size_t arg = 0;
  int count = 1;
  for (size_t i = 1; i < pts.size(); ++i) {
    int64_t v = u0(pts[i]);
    if (v > best) {
      best = v;
      arg = i;
      count = 1;
    } else if (v == best) {
      ++count;
    }
  }
  if (count != 1)
    throw ValidationError("NotOrientableBase", "dual class does not pick a unique vertex");

  // Dual cone of the vertex: { u : u.(v - s) > 0 for every other support
  // point s } (points interior to the hull give redundant inequalities, so
  // the convex hull itself is not needed).
  std::vector<ExpVec> diffs;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i == arg) continue;
    ExpVec d(rank);
    bool zero = true;
    for (int j = 0; j < rank; ++j) {
      d[j] = pts[arg][j] - pts[i][j];
      zero = zero && d[j] == 0;
    }
    if (!zero) diffs.push_back(d);
  }

  if (rank == 1) {
    auto sign_of = [](const std::vector<ExpVec>& vs) {
      int s = 0;
      for (const auto& v : vs) {
        int t = v[0] > 0 ? 1 : (v[0] < 0 ? -1 : 0);
        if (s == 0) s = t;
        if (t != 0 && t != s) return 0;  // opposing constraints: empty cone
      }
      return s;
    };
    return sign_of(diffs) == sign_of(cone.support_vectors);
  }
  if (rank == 2) {
    ConeOfSections d2 = rays_of_constraints(diffs);
    if (!cone.extreme_rays || !d2.extreme_rays) return false;
    return *cone.extreme_rays == *d2.extreme_rays;
  }
  throw ValidationError("UnsupportedRank",
                        "exact cone comparison is implemented for rank <= 2");
}

namespace {

ConeOfSections rays_of_constraints(const std::vector<ExpVec>& constraints) {
  LaurentPoly stub(2);
  ExpVec origin(2, 0);
  stub.add_term(origin, 1);
  for (const auto& s : constraints) stub.add_term(s, 1);
  return cone_of_sections(stub);
}

}  // namespace

}  // namespace fbc
