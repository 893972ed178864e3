#include "fbc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fbc {

namespace {

struct Arc {
  int from = 0;
  int to = 0;
  LaurentPoly weight;  // crossing monomial times z^{-1}
};

// All simple directed cycles anchored at their smallest node, as arc lists.
void cycles_from(int anchor, int node, const std::vector<std::vector<int>>& out_arcs,
                 const std::vector<Arc>& arcs, std::vector<int>& arc_stack,
                 std::vector<char>& on_path, std::vector<std::vector<int>>& found) {
  for (int ai : out_arcs[node]) {
    int next = arcs[ai].to;
    if (next == anchor) {
      arc_stack.push_back(ai);
      found.push_back(arc_stack);
      arc_stack.pop_back();
    } else if (next > anchor && !on_path[next]) {
      on_path[next] = 1;
      arc_stack.push_back(ai);
      cycles_from(anchor, next, out_arcs, arcs, arc_stack, on_path, found);
      arc_stack.pop_back();
      on_path[next] = 0;
    }
  }
}

}  // namespace

LaurentPoly multicycle_expansion(const LiftedMatrices& lifted, int num_edges) {
  if (num_edges > 12)
    throw ValidationError("TooLarge", "multicycle expansion is limited to 12 edges");
  const int n = num_edges;
  const int rank = lifted.transition(0, 0).rank();
  ExpVec zinv(rank, 0);
  zinv[rank - 1] = -1;

  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out_arcs(n);
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < n; ++row) {
      for (const auto& [e, c] : lifted.transition(row, col).terms()) {
        // One arc per unit of crossing multiplicity.
        bool ok = true;
        long long mult = c.to_ll(ok);
        if (!ok || mult <= 0)
          throw TheoryError("BadTransition", "transition monomials must have positive counts");
        for (long long k = 0; k < mult; ++k) {
          Arc a;
          a.from = col;
          a.to = row;
          ExpVec w = e;
          w[rank - 1] -= 1;
          a.weight = LaurentPoly::monomial(w, 1);
          out_arcs[col].push_back(static_cast<int>(arcs.size()));
          arcs.push_back(std::move(a));
        }
      }
    }
  }

  // Simple cycles grouped by anchor (smallest node on the cycle).
  std::vector<std::vector<std::vector<int>>> by_anchor(n);
  for (int anchor = 0; anchor < n; ++anchor) {
    std::vector<int> arc_stack;
    std::vector<char> on_path(n, 0);
    on_path[anchor] = 1;
    cycles_from(anchor, anchor, out_arcs, arcs, arc_stack, on_path, by_anchor[anchor]);
  }
  struct Cycle {
    int anchor;
    unsigned mask;
    LaurentPoly weight;
  };
  std::vector<Cycle> cycles;
  for (int anchor = 0; anchor < n; ++anchor) {
    for (const auto& arc_list : by_anchor[anchor]) {
      Cycle c;
      c.anchor = anchor;
      c.mask = 0;
      c.weight = LaurentPoly::constant(rank, 1);
      for (int ai : arc_list) {
        c.mask |= 1u << arcs[ai].from;
        c.weight *= arcs[ai].weight;
      }
      cycles.push_back(std::move(c));
    }
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.anchor < b.anchor; });

  // Sum over vertex-disjoint families, anchors strictly increasing.
  LaurentPoly total = LaurentPoly::constant(rank, 1);
  std::function<void(size_t, unsigned, const LaurentPoly&, int)> extend =
      [&](size_t start, unsigned used, const LaurentPoly& acc, int components) {
        for (size_t i = start; i < cycles.size(); ++i) {
          const Cycle& c = cycles[i];
          if (used & c.mask) continue;
          LaurentPoly next = acc * c.weight;
          if ((components + 1) & 1)
            total -= next;
          else
            total += next;
          extend(i + 1, used | c.mask, next, components + 1);
        }
      };
  extend(0, 0u, LaurentPoly::constant(rank, 1), 0);
  return total;
}

Laurent1 brute_char_poly(const IntMatrix& m) {
  const int n = static_cast<int>(m.m.rows());
  if (n > 8) throw ValidationError("TooLarge", "permutation expansion is limited to 8x8");
  // det(tI - M) as a sum over permutations of products of (tI - M) entries;
  // each entry is a degree <= 1 polynomial in t.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Laurent1 det(1);
  auto entry = [&](int i, int j) {
    Laurent1 p(1);
    if (i == j) p.add_term(ExpVec{1}, 1);
    p.add_term(ExpVec{0}, Integer(-m.m(i, j)));
    return p;
  };
  do {
    // Permutation sign by counting inversions.
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    Laurent1 prod = laurent1_from_coeffs({Integer(1)});
    for (int i = 0; i < n; ++i) prod = prod * entry(i, perm[i]);
    if (inv & 1)
      det -= prod;
    else
      det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

OracleReport compare_multicycle(const LiftedMatrices& lifted, const LaurentPoly& normalized,
                                int num_edges, const AbelianGroup& group) {
  OracleReport rep;
  rep.name = "multicycle_expansion";
  LaurentPoly oracle = multicycle_expansion(lifted, num_edges);
  rep.expected = render_poly(oracle, group);
  rep.got = render_poly(normalized, group);
  rep.pass = oracle == normalized;
  return rep;
}

OracleReport compare_char_poly(const IntMatrix& m) {
  OracleReport rep;
  rep.name = "brute_char_poly";
  AbelianGroup tvar{1, {"t"}};
  Laurent1 oracle = brute_char_poly(m);
  Laurent1 got = char_poly(m);
  rep.expected = render_poly(oracle, tvar);
  rep.got = render_poly(got, tvar);
  rep.pass = oracle == got;
  return rep;
}

std::vector<long long> iterate_growth(const GraphMap& f, int edge, int n) {
  if (n > 12) throw ValidationError("TooLarge", "iterate_growth is limited to 12 iterations");
  const Graph& g = f.graph;
  std::vector<long long> lengths;
  EdgePath word = f.edge_image[edge];
  bool words_ok = true;
  std::vector<long long> counts(g.num_edges(), 0);
  for (const auto& s : word) counts[s.edge] += 1;
  lengths.push_back(static_cast<long long>(word.size()));
  for (int k = 1; k < n; ++k) {
    if (words_ok) {
      long long projected = 0;
      for (int e = 0; e < g.num_edges(); ++e)
        projected += counts[e] * static_cast<long long>(f.edge_image[e].size());
      if (projected <= 2'000'000) {
        EdgePath next;
        next.reserve(static_cast<size_t>(projected));
        for (const auto& s : word) {
          EdgePath part = f.image(s);
          next.insert(next.end(), part.begin(), part.end());
        }
        word = std::move(next);
        counts.assign(g.num_edges(), 0);
        for (const auto& s : word) counts[s.edge] += 1;
        lengths.push_back(static_cast<long long>(word.size()));
        continue;
      }
      words_ok = false;
    }
    std::vector<long long> next_counts(g.num_edges(), 0);
    for (int e = 0; e < g.num_edges(); ++e) {
      for (const auto& s : f.edge_image[e]) next_counts[s.edge] += counts[e];
    }
    counts = std::move(next_counts);
    lengths.push_back(std::accumulate(counts.begin(), counts.end(), 0ll));
  }
  return lengths;
}

}  // namespace fbc
