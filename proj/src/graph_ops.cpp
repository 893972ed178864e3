#include "fbc/graph_ops.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "fbc/roots.hpp"

namespace fbc {

long long IntMatrix::at(const std::string& r, const std::string& c) const {
  auto ri = std::find(row_names.begin(), row_names.end(), r);
  auto ci = std::find(col_names.begin(), col_names.end(), c);
  if (ri == row_names.end() || ci == col_names.end())
    throw ValidationError("UnknownName", "no matrix entry (" + r + ", " + c + ")");
  return m(ri - row_names.begin(), ci - col_names.begin());
}

namespace {

// Position of each edge (by index) in the name-sorted matrix ordering.
std::vector<int> edge_positions(const Graph& g) {
  auto order = g.edges_by_name();
  std::vector<int> pos(order.size());
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return pos;
}

std::vector<int> vertex_positions(const Graph& g) {
  auto order = g.vertices_by_name();
  std::vector<int> pos(order.size());
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return pos;
}

std::vector<std::string> edge_names_sorted(const Graph& g) {
  std::vector<std::string> names;
  for (int e : g.edges_by_name()) names.push_back(g.edges[e].name);
  return names;
}

std::vector<std::string> vertex_names_sorted(const Graph& g) {
  std::vector<std::string> names;
  for (int v : g.vertices_by_name()) names.push_back(g.vertices[v]);
  return names;
}

}  // namespace

IntMatrix transition_matrix(const GraphMap& f) {
  const Graph& g = f.graph;
  const int n = g.num_edges();
  auto pos = edge_positions(g);
  IntMatrix out;
  out.row_names = out.col_names = edge_names_sorted(g);
  out.m.setZero(n, n);
  for (int e = 0; e < n; ++e) {
    for (const auto& step : f.edge_image[e]) out.m(pos[step.edge], pos[e]) += 1;
  }
  return out;
}

IntMatrix signed_chain_matrix(const GraphMap& f) {
  const Graph& g = f.graph;
  const int n = g.num_edges();
  auto pos = edge_positions(g);
  IntMatrix out;
  out.row_names = out.col_names = edge_names_sorted(g);
  out.m.setZero(n, n);
  for (int e = 0; e < n; ++e) {
    for (const auto& step : f.edge_image[e]) out.m(pos[step.edge], pos[e]) += step.sign;
  }
  return out;
}

IntMatrix vertex_action_matrix(const GraphMap& f) {
  const Graph& g = f.graph;
  const int n = g.num_vertices();
  auto pos = vertex_positions(g);
  IntMatrix out;
  out.row_names = out.col_names = vertex_names_sorted(g);
  out.m.setZero(n, n);
  for (int v = 0; v < n; ++v) out.m(pos[f.vertex_image[v]], pos[v]) += 1;
  return out;
}

// Directions are oriented edge ends: 2e = edge e traversed positively
// (based at its tail), 2e+1 = traversed negatively (based at its head).
namespace {

int direction_vertex(const Graph& g, int d) {
  return (d & 1) ? g.edges[d >> 1].head : g.edges[d >> 1].tail;
}

int step_direction(const EdgeStep& s) { return 2 * s.edge + (s.sign > 0 ? 0 : 1); }

// First step of the image of the direction d.
int direction_map(const GraphMap& f, int d) {
  EdgeStep s{d >> 1, (d & 1) ? -1 : 1};
  EdgePath img = f.image(s);
  return step_direction(img.front());
}

// Turns crossed by a path: for consecutive steps s,t the pair of directions
// {reverse(s), t} at their common vertex.
std::vector<std::pair<int, int>> path_turns(const EdgePath& p) {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    int a = step_direction({p[i].edge, -p[i].sign});
    int b = step_direction(p[i + 1]);
    out.push_back(std::minmax(a, b));
  }
  return out;
}

}  // namespace

TrainTrackReport is_train_track(const GraphMap& f) {
  TrainTrackReport rep;
  const Graph& g = f.graph;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!path_is_reduced(f.edge_image[e])) {
      rep.witness_edge = e;
      rep.witness_iterate = 0;
      rep.detail = "image of " + g.edges[e].name + " backtracks";
      return rep;
    }
  }
  // Close the set of taken turns under the direction map; a turn collapsing
  // to a single direction is an illegal turn crossed by some iterate.
  struct State {
    std::pair<int, int> turn;
    int origin;
    int depth;
  };
  std::map<std::pair<int, int>, int> seen;
  std::queue<State> work;
  for (int e = 0; e < g.num_edges(); ++e) {
    for (auto t : path_turns(f.edge_image[e])) {
      if (seen.emplace(t, e).second) work.push({t, e, 0});
    }
  }
  while (!work.empty()) {
    State s = work.front();
    work.pop();
    int a = direction_map(f, s.turn.first);
    int b = direction_map(f, s.turn.second);
    if (a == b) {
      rep.witness_edge = s.origin;
      rep.witness_iterate = s.depth + 1;
      rep.detail = "turn crossed by the image of " + g.edges[s.origin].name +
                   " collapses after " + std::to_string(s.depth + 1) + " iterations";
      return rep;
    }
    auto t = std::minmax(a, b);
    if (seen.emplace(t, s.origin).second) work.push({t, s.origin, s.depth + 1});
  }
  rep.ok = true;
  return rep;
}

IrreducibilityReport irreducibility_report(const IntMatrix& a) {
  const int n = static_cast<int>(a.m.rows());
  IrreducibilityReport rep;
  if (n == 0) return rep;
  if (n == 1 && a.m(0, 0) == 0) return rep;  // no cycle through the only node
  std::vector<std::vector<int>> adj(n), radj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a.m(i, j) != 0) {
        // Arc j -> i: the image of j crosses i.
        adj[j].push_back(i);
        radj[i].push_back(j);
      }
    }
  }
  auto reach = [&](const std::vector<std::vector<int>>& adj_) {
    std::vector<int> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return std::count(seen.begin(), seen.end(), 1) == n;
  };
  rep.irreducible = reach(adj) && reach(radj);
  if (!rep.irreducible) return rep;

  // Period = gcd of directed cycle lengths, from BFS level residues.
  std::vector<long long> level(n, -1);
  std::queue<int> q;
  q.push(0);
  level[0] = 0;
  long long g = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (level[w] < 0) {
        level[w] = level[v] + 1;
        q.push(w);
      } else {
        g = std::gcd(g, std::llabs(level[v] + 1 - level[w]));
      }
    }
  }
  rep.period = g == 0 ? 0 : g;
  rep.primitive = rep.irreducible && rep.period == 1;
  return rep;
}

WhiteheadReport whitehead_graphs(const GraphMap& f) {
  const Graph& g = f.graph;
  const int nv = g.num_vertices();
  WhiteheadReport rep;
  rep.directions.resize(nv);
  rep.turns.resize(nv);
  rep.connected.resize(nv, false);
  for (int e = 0; e < g.num_edges(); ++e) {
    rep.directions[g.edges[e].tail].push_back(2 * e);
    rep.directions[g.edges[e].head].push_back(2 * e + 1);
  }
  // Closure of the taken turns under the direction map.
  std::set<std::pair<int, int>> turns;
  std::queue<std::pair<int, int>> work;
  for (int e = 0; e < g.num_edges(); ++e) {
    for (auto t : path_turns(f.edge_image[e])) {
      if (turns.insert(t).second) work.push(t);
    }
  }
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop();
    int ia = direction_map(f, a), ib = direction_map(f, b);
    if (ia == ib) continue;  // illegal turn; the train track check reports it
    auto t = std::minmax(ia, ib);
    if (turns.insert(t).second) work.push(t);
  }
  for (auto& [a, b] : turns) rep.turns[direction_vertex(g, a)].push_back({a, b});

  rep.all_connected = true;
  for (int v = 0; v < nv; ++v) {
    const auto& nodes = rep.directions[v];
    std::map<int, int> comp;
    for (int d : nodes) comp[d] = d;
    std::function<int(int)> find = [&](int x) {
      return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    for (auto& [a, b] : rep.turns[v]) comp[find(a)] = find(b);
    std::set<int> roots;
    for (int d : nodes) roots.insert(find(d));
    rep.connected[v] = roots.size() <= 1;
    rep.all_connected = rep.all_connected && rep.connected[v];
  }
  return rep;
}

bool whitehead_graphs_connected(const GraphMap& f) { return whitehead_graphs(f).all_connected; }

Laurent1 char_poly(const IntMatrix& m) {
  const int n = static_cast<int>(m.m.rows());
  PolyMat p = poly_mat_zero(n, n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i, j) = LaurentPoly::constant(1, m.m(i, j));
  return det_z_minus(p);
}

Laurent1 monodromy_char_poly(const GraphMap& f) {
  Laurent1 cm = char_poly(signed_chain_matrix(f));
  Laurent1 cp = char_poly(vertex_action_matrix(f));
  Laurent1 t_minus_1 = laurent1_from_coeffs({Integer(-1), Integer(1)});
  auto q = div_exact(t_minus_1 * cm, cp);
  if (!q)
    throw TheoryError("NonexactDivision",
                      "(t-1)*char(M) is not divisible by char(P)");
  return *q;
}

StretchValue geometric_stretch(const GraphMap& f) {
  IntMatrix a = transition_matrix(f);
  auto rep = irreducibility_report(a);
  Laurent1 cp = char_poly(a);
  const int n = static_cast<int>(a.m.rows());
  double lo = 0, hi = 0;
  for (int j = 0; j < n; ++j) {
    double s = 0;
    for (int i = 0; i < n; ++i) s += static_cast<double>(a.m(i, j));
    lo = j == 0 ? s : std::min(lo, s);
    hi = std::max(hi, s);
  }
  StretchValue out;
  out.primitive = rep.primitive;
  out.value = perron_root(cp, lo, hi);
  return out;
}

double homological_stretch(const GraphMap& f) {
  Laurent1 p = monodromy_char_poly(f);
  // Degree-0 monodromy polynomial means trivial homology action.
  if (p.term_count() <= 1) return 0;
  return max_root_modulus(p);
}

}  // namespace fbc
