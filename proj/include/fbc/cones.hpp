// The cone of cross sections, per-class stretch factors and orientability
// verdicts, and the Newton-polytope characterization of the cone.

#ifndef FBC_CONES_HPP
#define FBC_CONES_HPP

#include <optional>
#include <string>
#include <vector>

#include "fbc/invariants.hpp"

namespace fbc {

struct ConeOfSections {
  std::vector<ExpVec> support_vectors;  // supp(m') minus the origin
  int rank = 0;
  // Primitive integer extreme rays, computed for rank 2 only.
  std::optional<std::pair<std::vector<int64_t>, std::vector<int64_t>>> extreme_rays;

  bool contains(const CohomClass& u) const;  // all dot products strictly positive
};

ConeOfSections cone_of_sections(const LaurentPoly& mcmullen_normalized);

enum class ClassOrientability { Pos, Neg, None, NotApplicable };
std::string to_string(ClassOrientability c);

// Geometric stretch factor of a primitive integral class in the cone: the
// reciprocal of the smallest-modulus root of the specialized McMullen
// polynomial.  The minimizing root is asserted real (a Perron reciprocal).
double lambda_of_class(const InvariantBundle& bundle, const ConeOfSections& cone,
                       const CohomClass& u);

// Homological stretch factor: largest reciprocal root modulus of
// (1-t)^p * specialize(alexander, u), p = 1 when rank >= 2.
double rho_of_class(const InvariantBundle& bundle, const TorusPresentation& pres,
                    const ConeOfSections& cone, const CohomClass& u);

// Orientability of a class from the cone-level theorems: positive base maps
// orient the whole cone, negative ones exactly the residue class of the dual
// class mod 2, non-orientable ones nothing.
ClassOrientability classify_class(const OrientabilityClass& orient_base, const CohomClass& u0,
                                  const ConeOfSections& cone, const CohomClass& u);

struct ClassReport {
  std::vector<int64_t> u;
  bool in_cone = false;
  double lambda = 0;
  double rho = 0;
  ClassOrientability orientability = ClassOrientability::NotApplicable;
  Laurent1 spec_mcmullen;
  Laurent1 spec_alexander;
};

ClassReport class_report(const InvariantBundle& bundle, const TorusPresentation& pres,
                         const ConeOfSections& cone, const OrientabilityClass& orient_base,
                         const CohomClass& u);

// For an orientable base map, the cone of sections equals the dual cone of
// the vertex of the Newton polytope of inv(alexander) maximizing the dual
// class; verified exactly.  Rank <= 2 (rays); throws NotOrientableBase on a
// non-orientable base.
bool newton_dual_cone_check(const LaurentPoly& alexander, const ConeOfSections& cone,
                            const CohomClass& u0, const OrientabilityClass& orient_base);

}  // namespace fbc

#endif  // FBC_CONES_HPP
