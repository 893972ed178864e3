// Orientability of graph maps and the oriented edge-double.
//
// A map is positively (negatively) orientable when the edges can be
// reoriented so that every edge image becomes a positive (negative) path.
// Classification runs by sign propagation over the crossing constraints;
// the edge-double is constructed as a separate object for the covering-space
// characterizations.

#ifndef FBC_ORIENTATION_HPP
#define FBC_ORIENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "fbc/graph.hpp"
#include "fbc/graph_ops.hpp"

namespace fbc {

enum class Orientability { PosOrientable, NegOrientable, NonOrientable };

std::string to_string(Orientability o);

struct OrientationAssignment {
  std::vector<int> flips;  // per edge index: -1 reverses the stored orientation
};

struct OrientabilityClass {
  Orientability kind = Orientability::NonOrientable;
  std::optional<OrientationAssignment> assignment;
};

// Throws ValidationError("ReducibleInput") when the transition matrix is not
// irreducible.  When both sign systems are satisfiable (possible only for
// non-expanding maps, e.g. the edge swap on a rose) the positive one wins.
OrientabilityClass classify_orientability(const GraphMap& f);

// The map with edges reoriented by the assignment (tail/head swapped on
// flipped edges, images rewritten accordingly).
GraphMap reorient(const GraphMap& f, const OrientationAssignment& assignment);

struct EdgeDouble {
  Graph graph;            // edges e.p, e.n over the same vertices
  GraphMap lift;          // the positively orientable lift
  std::vector<int> involution;      // edge index -> edge index (sigma, with reversal)
  std::vector<EdgeStep> projection;  // double edge index -> oriented step of the base
  IntMatrix matrix;       // transition matrix of the lift
};

EdgeDouble oriented_edge_double(const GraphMap& f);

struct DichotomyReport {
  Orientability kind;
  bool pass = false;
  double lambda = 0;
  double rho = 0;
  double margin = 0;  // lambda - rho for the non-orientable strict gap
  std::string detail;
};

// Exact spectral identities of the orientability dichotomy:
//   pos: char(M) == char(A);  neg: char(M)(t) == (-1)^{|E|} char(A)(-t);
//   non-orientable: the Perron root strictly dominates every root of the
//   monodromy characteristic polynomial.  `gap_tolerance` only affects the
//   numeric strict-gap report, never the exact identities.
DichotomyReport verify_spectral_dichotomy(const GraphMap& f, double gap_tolerance = 1e-6);

}  // namespace fbc

#endif  // FBC_ORIENTATION_HPP
