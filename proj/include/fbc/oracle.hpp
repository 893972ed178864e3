// Independent brute-force computations used to validate the main pipeline:
// the multi-cycle expansion of det(I - z^{-1}A~), a permutation-sum
// characteristic polynomial, and raw iterated edge-image growth.

#ifndef FBC_ORACLE_HPP
#define FBC_ORACLE_HPP

#include <vector>

#include "fbc/graph_ops.hpp"
#include "fbc/torus.hpp"

namespace fbc {

// 1 + sum over families of vertex-disjoint simple directed cycles of
// (-1)^{#components} * (product of arc weights), where the digraph has one
// arc per monomial of A~[e',e] with weight monomial * z^{-1}.  Equals
// z^{-|E|} det(zI - A~).  Throws TooLarge for more than 12 edges.
LaurentPoly multicycle_expansion(const LiftedMatrices& lifted, int num_edges);

// det(tI - M) by permutation-sum expansion; dimension <= 8.
Laurent1 brute_char_poly(const IntMatrix& m);

// Lengths of the iterated images f^k(e) for k = 1..n (n <= 12).  Small
// iterates build the actual edge paths; once the projected length passes the
// cap the letter counts are advanced directly.
std::vector<long long> iterate_growth(const GraphMap& f, int edge, int n);

// A named oracle-vs-pipeline comparison.
struct OracleReport {
  std::string name;
  std::string expected;  // oracle value, rendered
  std::string got;       // pipeline value, rendered
  bool pass = false;
};

OracleReport compare_multicycle(const LiftedMatrices& lifted, const LaurentPoly& normalized,
                                int num_edges, const AbelianGroup& group);
OracleReport compare_char_poly(const IntMatrix& m);

}  // namespace fbc

#endif  // FBC_ORACLE_HPP
