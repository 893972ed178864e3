#include "fbc/torus.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace fbc {

bool TorusPresentation::is_tree_edge(int e) const {
  return std::find(spanning_tree.begin(), spanning_tree.end(), e) != spanning_tree.end();
}

ExpVec TorusPresentation::embed(const KVec& k, int64_t z_exp) const {
  ExpVec e(rank, 0);
  for (size_t i = 0; i < k.size(); ++i) e[i] = k[i];
  e[rank - 1] = z_exp;
  return e;
}

// --- Smith / Hermite ----------------------------------------------------------

SmithResult smith_diagonalize(std::vector<std::vector<Integer>> m) {
  const int n = static_cast<int>(m.size());
  const int cols = n == 0 ? 0 : static_cast<int>(m[0].size());
  SmithResult out;
  out.left.assign(n, std::vector<Integer>(n, Integer()));
  for (int i = 0; i < n; ++i) out.left[i][i] = 1;

  auto row_sub = [&](int i, int j, const Integer& q) {
    // row_i -= q * row_j (in both m and left)
    for (int c = 0; c < cols; ++c) m[i][c] -= q * m[j][c];
    for (int c = 0; c < n; ++c) out.left[i][c] -= q * out.left[j][c];
  };
  auto col_sub = [&](int i, int j, const Integer& q) {
    for (int r = 0; r < n; ++r) m[r][i] -= q * m[r][j];
  };

  int t = 0;
  while (t < n && t < cols) {
    // Pivot of minimal absolute value in the remaining block.
    int pi = -1, pj = -1;
    for (int i = t; i < n; ++i) {
      for (int j = t; j < cols; ++j) {
        if (m[i][j].is_zero()) continue;
        if (pi < 0 || m[i][j].abs() < m[pi][pj].abs()) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    std::swap(out.left[t], out.left[pi]);
    for (int r = 0; r < n; ++r) std::swap(m[r][t], m[r][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (m[i][t].is_zero()) continue;
        Integer q = m[i][t] / m[t][t];
        if (!q.is_zero()) row_sub(i, t, q);
        if (!m[i][t].is_zero()) {
          std::swap(m[t], m[i]);  // smaller remainder becomes the pivot
          std::swap(out.left[t], out.left[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j].is_zero()) continue;
        Integer q = m[t][j] / m[t][t];
        if (!q.is_zero()) col_sub(j, t, q);
        if (!m[t][j].is_zero()) {
          for (int r = 0; r < n; ++r) std::swap(m[r][t], m[r][j]);
          clean = false;
        }
      }
    }
    ++t;
  }
  for (int i = 0; i < std::min(n, cols); ++i) out.diagonal.push_back(m[i][i]);
  return out;
}

std::vector<std::vector<Integer>> row_hnf(std::vector<std::vector<Integer>> rows) {
  const int k = static_cast<int>(rows.size());
  const int n = k == 0 ? 0 : static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < n && r < k; ++c) {
    // Euclid down the column.
    while (true) {
      int pivot = -1;
      for (int i = r; i < k; ++i) {
        if (rows[i][c].is_zero()) continue;
        if (pivot < 0 || rows[i][c].abs() < rows[pivot][c].abs()) pivot = i;
      }
      if (pivot < 0) break;
      std::swap(rows[r], rows[pivot]);
      bool done = true;
      for (int i = r + 1; i < k; ++i) {
        if (rows[i][c].is_zero()) continue;
        Integer q = rows[i][c] / rows[r][c];
        for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (!rows[i][c].is_zero()) done = false;
      }
      if (done) break;
    }
    if (rows[r][c].is_zero()) continue;
    if (rows[r][c].sgn() < 0) {
      for (int j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      Integer q = rows[i][c] / rows[r][c];
      if ((rows[i][c] - q * rows[r][c]).sgn() < 0) q -= 1;
      if (!q.is_zero()) {
        for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
      }
    }
    ++r;
  }
  return rows;
}

// --- presentation -------------------------------------------------------------

namespace {

struct TreeData {
  std::vector<int> tree;           // edge indices
  std::vector<EdgePath> to_vertex; // tree path basepoint -> v (empty for basepoint)
};

TreeData build_tree(const Graph& g, int basepoint,
                    const std::optional<std::vector<std::string>>& forced) {
  TreeData td;
  td.to_vertex.resize(g.num_vertices());
  std::vector<int> candidates;
  if (forced) {
    for (const auto& name : *forced) {
      int e = g.edge_index(name);
      if (e < 0) throw ValidationError("UnknownEdge", "tree edge " + name + " does not exist");
      candidates.push_back(e);
    }
  } else {
    // Reverse name order; this is the gauge that matches the standard
    // normalizations of the lifted matrices.
    candidates = g.edges_by_name();
    std::reverse(candidates.begin(), candidates.end());
  }
  std::vector<int> seen(g.num_vertices(), 0);
  seen[basepoint] = 1;
  std::queue<int> bfs;
  bfs.push(basepoint);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int e : candidates) {
      int t = g.edges[e].tail, h = g.edges[e].head;
      int w = -1, sign = 0;
      if (t == v && !seen[h]) {
        w = h;
        sign = +1;
      } else if (h == v && !seen[t]) {
        w = t;
        sign = -1;
      }
      if (w < 0) continue;
      seen[w] = 1;
      td.tree.push_back(e);
      td.to_vertex[w] = td.to_vertex[v];
      td.to_vertex[w].push_back({e, sign});
      bfs.push(w);
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != g.num_vertices())
    throw ValidationError("DisconnectedGraph",
                          forced ? "forced tree does not span the graph" : "graph is not connected");
  if (forced && static_cast<int>(td.tree.size()) != g.num_vertices() - 1)
    throw ValidationError("BadTree", "forced tree has the wrong number of edges");
  return td;
}

// Signed incidence vector in Z^E of an edge path.
std::vector<long long> path_chain(const Graph& g, const EdgePath& p) {
  std::vector<long long> c(g.num_edges(), 0);
  for (const auto& s : p) c[s.edge] += s.sign;
  return c;
}

}  // namespace

TorusPresentation compute_presentation(const GraphMap& f, const PresentationOptions& opts) {
  f.validate();
  const Graph& g = f.graph;
  TorusPresentation pres;

  if (opts.basepoint) {
    pres.basepoint = g.vertex_index(*opts.basepoint);
    if (pres.basepoint < 0)
      throw ValidationError("UnknownName", "basepoint " + *opts.basepoint + " does not exist");
  } else {
    pres.basepoint = g.vertices_by_name().front();
  }
  TreeData td = build_tree(g, pres.basepoint, opts.tree_edges);
  pres.spanning_tree = td.tree;
  pres.tree_paths = td.to_vertex;

  // Loop basis: non-tree edges in name order.  The basis cycle of e is
  // tau_{tail} + e - tau_{head} as a 1-chain.
  for (int e : g.edges_by_name()) {
    if (std::find(td.tree.begin(), td.tree.end(), e) == td.tree.end())
      pres.loop_edges.push_back(e);
  }
  const int nl = static_cast<int>(pres.loop_edges.size());

  auto basis_cycle = [&](int e) {
    std::vector<long long> c = path_chain(g, {{e, +1}});
    auto tadd = path_chain(g, td.to_vertex[g.edges[e].tail]);
    auto tsub = path_chain(g, td.to_vertex[g.edges[e].head]);
    for (int i = 0; i < g.num_edges(); ++i) c[i] += tadd[i] - tsub[i];
    return c;
  };

  // Action on H_1(G) in the loop basis: coordinates of M * cycle on the
  // non-tree edges.
  IntMatrix chain = signed_chain_matrix(f);
  auto pos = g.edges_by_name();
  std::vector<int> where(g.num_edges());
  for (size_t i = 0; i < pos.size(); ++i) where[pos[i]] = static_cast<int>(i);

  std::vector<std::vector<Integer>> fstar_minus_id(nl, std::vector<Integer>(nl, Integer()));
  for (int j = 0; j < nl; ++j) {
    auto cyc = basis_cycle(pres.loop_edges[j]);
    for (int i = 0; i < nl; ++i) {
      long long v = 0;
      for (int e = 0; e < g.num_edges(); ++e)
        v += chain.m(where[pres.loop_edges[i]], where[e]) * cyc[e];
      fstar_minus_id[i][j] = Integer(v) - Integer(i == j ? 1 : 0);
    }
  }

  SmithResult snf = smith_diagonalize(fstar_minus_id);
  std::vector<std::vector<Integer>> free_rows;
  for (int i = 0; i < nl; ++i) {
    bool zero = i >= static_cast<int>(snf.diagonal.size()) || snf.diagonal[i].is_zero();
    if (zero) free_rows.push_back(snf.left[i]);
  }
  free_rows = row_hnf(std::move(free_rows));
  // Canonical sign: leading nonzero entry of each row positive (row_hnf
  // already guarantees this for pivot columns).
  pres.project_K = free_rows;
  const int kb = static_cast<int>(free_rows.size());
  pres.rank = kb + 1;
  pres.group = AbelianGroup::with_deck(pres.rank);
  pres.zbar = ExpVec(pres.rank, 0);
  pres.zbar[pres.rank - 1] = 1;
  pres.dual_class.functional.assign(pres.rank, 0);
  pres.dual_class.functional[pres.rank - 1] = -1;

  // Cocycle: q_K of the basis cycle; zero on tree edges by construction.
  pres.cocycle.assign(g.num_edges(), KVec(kb, 0));
  bool fits = true;
  for (int j = 0; j < nl; ++j) {
    for (int r = 0; r < kb; ++r) {
      bool ok = true;
      pres.cocycle[pres.loop_edges[j]][r] = free_rows[r][j].to_ll(ok);
      fits = fits && ok;
    }
  }
  if (!fits) throw ValidationError("Overflow", "cocycle exponents exceed 64 bits");

  // Potentials: signed cocycle sum along the image of the tree path.
  pres.potentials.assign(g.num_vertices(), KVec(kb, 0));
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v == pres.basepoint) continue;
    KVec acc(kb, 0);
    for (const auto& s : td.to_vertex[v]) {
      for (const auto& t : f.image(s)) {
        for (int r = 0; r < kb; ++r) acc[r] += t.sign * pres.cocycle[t.edge][r];
      }
    }
    pres.potentials[v] = std::move(acc);
  }
  return pres;
}

LiftedMatrices lifted_matrices(const TorusPresentation& pres, const GraphMap& f) {
  const Graph& g = f.graph;
  const int n = g.num_edges();
  const int nv = g.num_vertices();
  const int rank = pres.rank;
  const int kb = rank - 1;
  auto epos = g.edges_by_name();
  std::vector<int> ewhere(n);
  for (size_t i = 0; i < epos.size(); ++i) ewhere[epos[i]] = static_cast<int>(i);
  auto vpos = g.vertices_by_name();
  std::vector<int> vwhere(nv);
  for (size_t i = 0; i < vpos.size(); ++i) vwhere[vpos[i]] = static_cast<int>(i);

  LiftedMatrices out;
  for (int e : epos) out.edge_names.push_back(g.edges[e].name);
  for (int v : vpos) out.vertex_names.push_back(g.vertices[v]);
  out.chain = poly_mat_zero(n, n, rank);
  out.transition = poly_mat_zero(n, n, rank);
  out.vertex = poly_mat_zero(nv, nv, rank);

  for (int e = 0; e < n; ++e) {
    KVec k = pres.potentials[g.edges[e].tail];
    for (const auto& s : f.edge_image[e]) {
      if (s.sign < 0) {
        for (int r = 0; r < kb; ++r) k[r] -= pres.cocycle[s.edge][r];
      }
      ExpVec mono = pres.embed(k);
      out.transition(ewhere[s.edge], ewhere[e]).add_term(mono, 1);
      out.chain(ewhere[s.edge], ewhere[e]).add_term(mono, s.sign);
      if (s.sign > 0) {
        for (int r = 0; r < kb; ++r) k[r] += pres.cocycle[s.edge][r];
      }
    }
  }
  for (int v = 0; v < nv; ++v)
    out.vertex(vwhere[f.vertex_image[v]], vwhere[v]).add_term(pres.embed(pres.potentials[v]), 1);

  // Augmentation (all K-variables -> 1) must recover M, A and P.
  IntMatrix M = signed_chain_matrix(f), A = transition_matrix(f), P = vertex_action_matrix(f);
  auto augment = [](const LaurentPoly& p) {
    Integer s;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (augment(out.chain(i, j)) != Integer(M.m(i, j)) ||
          augment(out.transition(i, j)) != Integer(A.m(i, j)))
        throw TheoryError("AugmentationMismatch", "lifted matrices do not specialize to M/A");
    }
  }
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      if (augment(out.vertex(i, j)) != Integer(P.m(i, j)))
        throw TheoryError("AugmentationMismatch", "lifted vertex matrix does not specialize to P");
    }
  }
  return out;
}

std::vector<VertexCycle> vertex_cycles(const TorusPresentation& pres, const GraphMap& f) {
  const Graph& g = f.graph;
  const int nv = g.num_vertices();
  std::vector<VertexCycle> out;
  std::vector<int> state(nv, 0);  // 0 unseen, 1 on stack, 2 done
  for (int start : g.vertices_by_name()) {
    if (state[start]) continue;
    std::vector<int> path;
    int v = start;
    while (state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = f.vertex_image[v];
    }
    if (state[v] == 1) {
      // Found a new cycle: the tail of `path` from v onward.
      auto it = std::find(path.begin(), path.end(), v);
      VertexCycle vc;
      vc.orbit.assign(it, path.end());
      KVec sum(pres.rank - 1, 0);
      for (int w : vc.orbit) {
        for (int r = 0; r < pres.rank - 1; ++r) sum[r] += pres.potentials[w][r];
      }
      vc.cls = pres.embed(sum, -static_cast<int64_t>(vc.orbit.size()));
      out.push_back(std::move(vc));
    }
    for (int w : path) state[w] = 2;
  }

  // prod (1 - c_i) must agree with det(zI - P~) up to a unit.
  LaurentPoly prod = LaurentPoly::constant(pres.rank, 1);
  for (const auto& vc : out) {
    LaurentPoly factor = LaurentPoly::constant(pres.rank, 1);
    factor -= LaurentPoly::monomial(vc.cls, 1);
    prod *= factor;
  }
  LiftedMatrices lm = lifted_matrices(pres, f);
  LaurentPoly detp = det_z_minus(lm.vertex);
  if (!unit_equivalent(prod, detp))
    throw TheoryError("VertexCycleMismatch",
                      "vertex-cycle product does not match det(zI - P~)");
  return out;
}

}  // namespace fbc
