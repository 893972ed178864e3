// Numeric layer: polynomial roots via companion-matrix eigenvalues refined by
// Aberth iteration, plus bracketed bisection/Newton for Perron roots.
//
// Exact integer polynomials are the source of truth; doubles only enter here.

#ifndef FBC_ROOTS_HPP
#define FBC_ROOTS_HPP

#include <complex>
#include <vector>

#include "fbc/laurent.hpp"

namespace fbc {

// Roots of sum coeffs[i] * t^i (ascending, coeffs.back() != 0, degree >= 1).
std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs);

// Nonzero roots of a one-variable Laurent polynomial (the t^k unit factor is
// cleared first, so zero roots never appear).
std::vector<std::complex<double>> laurent1_roots(const Laurent1& p);

double max_root_modulus(const Laurent1& p);

struct MinRoot {
  std::complex<double> root;
  double modulus;
  bool real;  // |Im| below tolerance at the extremum
};
MinRoot min_modulus_root(const Laurent1& p);

// Largest real root of an exact integer polynomial, isolated by a downward
// scan from `hi` followed by bisection and a Newton polish.  `lo`/`hi` are
// the column-sum bounds for a Perron root; tolerance 1e-9 absolute.
double perron_root(const Laurent1& char_poly, double lo, double hi);

}  // namespace fbc

#endif  // FBC_ROOTS_HPP
