// Matrices and structural reports attached to a graph self-map: transition
// and signed chain matrices, the vertex action, train-track and Whitehead
// checks, irreducibility, characteristic polynomials, and stretch factors.

#ifndef FBC_GRAPH_OPS_HPP
#define FBC_GRAPH_OPS_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

#include "fbc/graph.hpp"
#include "fbc/laurent.hpp"

namespace fbc {

// Integer matrix with named row/column index sets (edge or vertex names,
// always in lexicographic name order).
struct IntMatrix {
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> m;

  long long at(const std::string& r, const std::string& c) const;
};

// A[e', e] = number of times the image of e crosses e' with either
// orientation.  Rows/columns indexed by edge names.
IntMatrix transition_matrix(const GraphMap& f);

// M[e', e] = signed crossing count (the action on simplicial 1-chains).
IntMatrix signed_chain_matrix(const GraphMap& f);

// P[v, w] = 1 iff f(w) = v (the action on 0-chains).
IntMatrix vertex_action_matrix(const GraphMap& f);

struct TrainTrackReport {
  bool ok = false;
  // On failure: the edge whose image first crosses the dying turn and how
  // many iterations of the direction map collapse it (0 = the image itself
  // backtracks).
  int witness_edge = -1;
  int witness_iterate = -1;
  std::string detail;
};
TrainTrackReport is_train_track(const GraphMap& f);

struct IrreducibilityReport {
  bool irreducible = false;
  long long period = 0;  // gcd of directed cycle lengths (0 for acyclic)
  bool primitive = false;
};
IrreducibilityReport irreducibility_report(const IntMatrix& a);

struct WhiteheadReport {
  bool all_connected = false;
  // Per vertex: the direction ids at that vertex and the turn edges between
  // them.  A direction id is 2*edge for the outgoing and 2*edge+1 for the
  // incoming end of an edge.
  std::vector<std::vector<int>> directions;
  std::vector<std::vector<std::pair<int, int>>> turns;
  std::vector<bool> connected;
};
WhiteheadReport whitehead_graphs(const GraphMap& f);
bool whitehead_graphs_connected(const GraphMap& f);

// det(tI - M), exact integer coefficients (variable t).
Laurent1 char_poly(const IntMatrix& m);

// Characteristic polynomial of the action on H_1(G), computed exactly as
// (t-1) * char_poly(M) / char_poly(P); the division is asserted exact.
Laurent1 monodromy_char_poly(const GraphMap& f);

struct StretchValue {
  double value = 0;
  bool primitive = false;  // false means the Perron hypotheses failed; the
                           // value is still the spectral radius
};
StretchValue geometric_stretch(const GraphMap& f);
double homological_stretch(const GraphMap& f);

}  // namespace fbc

#endif  // FBC_GRAPH_OPS_HPP
