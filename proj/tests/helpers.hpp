#ifndef FBC_TESTS_HELPERS_HPP
#define FBC_TESTS_HELPERS_HPP

#include <random>
#include <string>

#include "fbc/laurent.hpp"
#include "fbc/parse.hpp"

#ifndef FBC_FIXTURE_DIR
#define FBC_FIXTURE_DIR "tests/fixtures"
#endif

namespace fbc::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(FBC_FIXTURE_DIR) + "/" + name;
}

inline GraphMapDocument fixture(const std::string& name) {
  return load_graph_map(fixture_path(name + ".gm"));
}

// Ascending coefficients in one variable: l1({-2, 1}) is t - 2.
inline Laurent1 l1(std::initializer_list<long long> ascending, int64_t min_exp = 0) {
  std::vector<Integer> c;
  for (long long v : ascending) c.emplace_back(v);
  return laurent1_from_coeffs(c, min_exp);
}

inline LaurentPoly mono(ExpVec e, long long c) { return LaurentPoly::monomial(std::move(e), c); }

// Random sparse polynomial with small coefficients and exponents.
inline LaurentPoly random_poly(std::mt19937& rng, int rank, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int64_t> exp(-3, 3);
  std::uniform_int_distribution<long long> coeff(-5, 5);
  LaurentPoly p(rank);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    ExpVec e(rank);
    for (int j = 0; j < rank; ++j) e[j] = exp(rng);
    p.add_term(e, coeff(rng));
  }
  return p;
}

}  // namespace fbc::test

#endif  // FBC_TESTS_HELPERS_HPP
