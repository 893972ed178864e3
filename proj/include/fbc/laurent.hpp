// Exact arithmetic in the group ring Z[H] for H a finitely generated free
// abelian group.
//
// A LaurentPoly stores a finite map from exponent vectors (one slot per
// generator of H) to nonzero arbitrary-precision coefficients.  Exponent
// vectors are compared lexicographically, which makes term order, normal
// forms, and rendering deterministic.  By convention the last generator is
// the deck variable "z"; the generators before it form a basis of the
// vertical subgroup K.

#ifndef FBC_LAURENT_HPP
#define FBC_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fbc/errors.hpp"
#include "fbc/integer.hpp"

namespace fbc {

using ExpVec = std::vector<int64_t>;

struct AbelianGroup {
  int rank = 0;
  std::vector<std::string> names;  // names.size() == rank; K symbols first, then "z"

  // K-basis names a (single generator) or a1..a_{b-1}, deck variable z.
  static AbelianGroup with_deck(int rank);
};

// An integral cohomology class, acting on exponent vectors by dot product.
struct CohomClass {
  std::vector<int64_t> functional;

  int64_t operator()(const ExpVec& e) const;
  bool is_primitive() const;  // gcd of entries is 1
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int rank) : rank_(rank) {}

  static LaurentPoly zero(int rank) { return LaurentPoly(rank); }
  static LaurentPoly constant(int rank, Integer c);
  static LaurentPoly monomial(ExpVec e, Integer c);
  // The deck variable z as a polynomial of the given rank.
  static LaurentPoly deck(int rank);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, Integer>& terms() const { return terms_; }

  // True when the polynomial is c*h for a single group element h.
  bool is_monomial() const { return terms_.size() == 1; }
  // True when the polynomial is +-h (a unit of Z[H]).
  bool is_unit() const;

  Integer coeff(const ExpVec& e) const;
  void set_coeff(const ExpVec& e, Integer c);
  void add_term(const ExpVec& e, const Integer& c);

  std::vector<ExpVec> support() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Multiplication by the monomial h^e (shift of all exponents).
  LaurentPoly shifted(const ExpVec& e) const;

  // Lexicographically extremal terms.
  std::pair<ExpVec, Integer> min_term() const;
  std::pair<ExpVec, Integer> max_term() const;

  // Degree in the z (last) variable; nullopt for the zero polynomial.
  std::optional<int64_t> z_degree() const;

 private:
  int rank_ = 0;
  std::map<ExpVec, Integer> terms_;

  void promote(int rank);
  friend LaurentPoly promote_pair(const LaurentPoly&, int);
};

// One-variable integer Laurent polynomials (variable t) reuse the same
// representation with rank 1.
using Laurent1 = LaurentPoly;

// --- free functions -------------------------------------------------------

// Exact quotient a/b, or nullopt when b does not divide a in Z[H].
std::optional<LaurentPoly> div_exact(const LaurentPoly& a, const LaurentPoly& b);

// Quotient of num by den viewed as polynomials in z with Z[K]-coefficients;
// den must have unit leading z-coefficient.  Throws NonexactDivision when the
// remainder is nonzero.
LaurentPoly monic_div_in_z(const LaurentPoly& num, const LaurentPoly& den);

// Canonical representative of the unit-equivalence class of p: translate the
// lexicographically minimal support exponent to the origin and make its
// coefficient positive.  Two polynomials are equal up to +-h iff their normal
// forms coincide.  Throws ZeroPolynomial on 0.
LaurentPoly unit_normal_form(const LaurentPoly& p);

inline bool unit_equivalent(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return unit_normal_form(p) == unit_normal_form(q);
}

// Normal form with the sign flipped so the lexicographically maximal term is
// positive; nicer for display (prints z-2 rather than -z+2).
LaurentPoly display_form(const LaurentPoly& p);

// Ring involution h -> (-1)^{eps(h)} h.
LaurentPoly apply_involution(const LaurentPoly& p, const CohomClass& eps);

// Ring automorphism h -> h^{-1}.
LaurentPoly apply_inv(const LaurentPoly& p);

// Specialization P^u(t) = sum a_h t^{u(h)}.
Laurent1 specialize(const LaurentPoly& p, const CohomClass& u);

// Equality in (Z/2)[H] up to a monomial unit.
bool mod2_equivalent(const LaurentPoly& p, const LaurentPoly& q);

// Matrices of Laurent polynomials.
using PolyMat = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, Eigen::Dynamic>;

PolyMat poly_mat_zero(int n, int m, int rank);

// Exact determinant: fraction-free Bareiss elimination with exact division;
// cofactor expansion for dimension <= 4.
LaurentPoly laurent_det(const PolyMat& m);

// det(z*I - m) for a square matrix whose entries have z-exponent zero.
LaurentPoly det_z_minus(const PolyMat& m);

// --- single-variable helpers ----------------------------------------------

Laurent1 laurent1_from_coeffs(const std::vector<Integer>& ascending, int64_t min_exp = 0);
// Coefficients of t^min_exp .. t^max_exp after clearing denominators.
std::vector<Integer> laurent1_coeffs(const Laurent1& p, int64_t& min_exp);
// Substitute t -> -t.
Laurent1 laurent1_negate_var(const Laurent1& p);
// Substitute t -> t^{-1}.
inline Laurent1 laurent1_reciprocal(const Laurent1& p) { return apply_inv(p); }

// Text rendering such as "z^4+2*z^3+(1-7*a)*z^2+2*a*z+a^2"; terms grouped by
// descending z-power, K-part in parentheses when composite.
std::string render_poly(const LaurentPoly& p, const AbelianGroup& group);
std::string render_exp(const ExpVec& e, const AbelianGroup& group);

}  // namespace fbc

namespace Eigen {
template <>
struct NumTraits<fbc::LaurentPoly> : GenericNumTraits<fbc::LaurentPoly> {
  typedef fbc::LaurentPoly Real;
  typedef fbc::LaurentPoly NonInteger;
  typedef fbc::LaurentPoly Nested;
  typedef fbc::LaurentPoly Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256,
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif  // FBC_LAURENT_HPP
