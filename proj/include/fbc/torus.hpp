// Homology of the mapping torus: H = H_1(X)/torsion, the splitting
// H = K (+) <z> induced by a pinned lift of the map, and the lifted matrices
// over Z[K].
//
// Conventions (they pin the lift, hence the splitting):
//   * basepoint = lexicographically smallest vertex unless overridden;
//   * spanning tree = BFS from the basepoint scanning edges in reverse name
//     order (this gauge reproduces the classical matrix normalizations);
//   * potentials are normalized so the basepoint's potential vanishes;
//   * z is the last coordinate and the dual class sends it to -1.

#ifndef FBC_TORUS_HPP
#define FBC_TORUS_HPP

#include <optional>
#include <vector>

#include "fbc/graph_ops.hpp"
#include "fbc/laurent.hpp"

namespace fbc {

// K-coordinate vector (length b-1).
using KVec = std::vector<int64_t>;

struct TorusPresentation {
  AbelianGroup group;        // rank b; names a/a1.. then z
  int rank = 0;              // b
  // q_K in loop-basis coordinates: (b-1) x (#non-tree edges).
  std::vector<std::vector<Integer>> project_K;
  std::vector<int> loop_edges;      // non-tree edges in name order
  std::vector<int> spanning_tree;   // edge indices
  std::vector<EdgePath> tree_paths;  // basepoint -> v within the tree (empty at basepoint)
  int basepoint = 0;
  std::vector<KVec> cocycle;        // per edge index; zero on tree edges
  std::vector<KVec> potentials;     // per vertex index
  ExpVec zbar;                      // (0,..,0,1)
  CohomClass dual_class;            // u0 = (0,..,0,-1)

  bool is_tree_edge(int e) const;
  // Lift of the K-vector into H-exponents (z-exponent zero).
  ExpVec embed(const KVec& k, int64_t z_exp = 0) const;
};

// Overrides for the basis-independence checks.
struct PresentationOptions {
  std::optional<std::string> basepoint;
  std::optional<std::vector<std::string>> tree_edges;
};

TorusPresentation compute_presentation(const GraphMap& f,
                                       const PresentationOptions& opts = {});

struct LiftedMatrices {
  // Rows/columns in edge (resp. vertex) name order, entries supported in the
  // K-coordinates (z-exponent zero).
  PolyMat chain;       // lift of M
  PolyMat transition;  // lift of A
  PolyMat vertex;      // lift of P
  std::vector<std::string> edge_names;
  std::vector<std::string> vertex_names;
};

LiftedMatrices lifted_matrices(const TorusPresentation& pres, const GraphMap& f);

struct VertexCycle {
  std::vector<int> orbit;  // periodic vertices in cycle order
  ExpVec cls;              // K part = potential sum, z-exponent = -length
};

// Periodic orbits of the vertex action; the product identity
// prod(1 - c_i) = det(zI - P~) (up to a unit) is asserted.
std::vector<VertexCycle> vertex_cycles(const TorusPresentation& pres, const GraphMap& f);

// --- integer lattice helpers -------------------------------------------------

// Diagonalization U*M*V = D over Z (Smith form without the divisibility
// chain).  Returns the diagonal and the left transform U.
struct SmithResult {
  std::vector<Integer> diagonal;                  // min(n,m) entries
  std::vector<std::vector<Integer>> left;         // n x n unimodular
};
SmithResult smith_diagonalize(std::vector<std::vector<Integer>> m);

// Row Hermite normal form (positive pivots, echelon, reduced above pivots)
// of a full-row-rank integer matrix.
std::vector<std::vector<Integer>> row_hnf(std::vector<std::vector<Integer>> rows);

}  // namespace fbc

#endif  // FBC_TORUS_HPP
