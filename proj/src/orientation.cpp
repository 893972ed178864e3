#include "fbc/orientation.hpp"

#include <algorithm>
#include <queue>

#include "fbc/roots.hpp"

namespace fbc {

std::string to_string(Orientability o) {
  switch (o) {
    case Orientability::PosOrientable: return "PosOrientable";
    case Orientability::NegOrientable: return "NegOrientable";
    case Orientability::NonOrientable: return "NonOrientable";
  }
  return "?";
}

namespace {

// Solve x_{e'} = target * s * x_e over all crossings (image of e crosses e'
// with sign s) by propagation from a seed; target is +1 for the positive
// system and -1 for the negative one.
std::optional<OrientationAssignment> solve_signs(const GraphMap& f, int target, int seed) {
  const Graph& g = f.graph;
  const int n = g.num_edges();
  std::vector<int> x(n, 0);
  x[seed] = 1;
  std::queue<int> work;
  work.push(seed);
  // Constraints are scanned repeatedly from the worklist; each edge's sign is
  // fixed once, so a conflict is a hard failure.
  std::vector<std::vector<std::pair<int, int>>> outgoing(n);  // e -> (e', s)
  std::vector<std::vector<std::pair<int, int>>> incoming(n);  // e' -> (e, s)
  for (int e = 0; e < n; ++e) {
    for (const auto& step : f.edge_image[e]) {
      outgoing[e].push_back({step.edge, step.sign});
      incoming[step.edge].push_back({e, step.sign});
    }
  }
  while (!work.empty()) {
    int e = work.front();
    work.pop();
    auto visit = [&](int other, int forced) -> bool {
      if (x[other] == 0) {
        x[other] = forced;
        work.push(other);
        return true;
      }
      return x[other] == forced;
    };
    for (auto [ep, s] : outgoing[e]) {
      if (!visit(ep, target * s * x[e])) return std::nullopt;
    }
    for (auto [ep, s] : incoming[e]) {
      if (!visit(ep, target * s * x[e])) return std::nullopt;
    }
  }
  if (std::count(x.begin(), x.end(), 0) != 0) return std::nullopt;
  return OrientationAssignment{std::move(x)};
}

}  // namespace

OrientabilityClass classify_orientability(const GraphMap& f) {
  auto rep = irreducibility_report(transition_matrix(f));
  if (!rep.irreducible)
    throw ValidationError("ReducibleInput",
                          "orientability classification requires an irreducible transition matrix");
  int seed = f.graph.edges_by_name().front();
  OrientabilityClass out;
  if (auto a = solve_signs(f, +1, seed)) {
    out.kind = Orientability::PosOrientable;
    out.assignment = std::move(*a);
  } else if (auto b = solve_signs(f, -1, seed)) {
    out.kind = Orientability::NegOrientable;
    out.assignment = std::move(*b);
  } else {
    out.kind = Orientability::NonOrientable;
  }
  return out;
}

GraphMap reorient(const GraphMap& f, const OrientationAssignment& assignment) {
  GraphMap h = f;
  const int n = f.graph.num_edges();
  for (int e = 0; e < n; ++e) {
    if (assignment.flips[e] < 0) std::swap(h.graph.edges[e].tail, h.graph.edges[e].head);
  }
  for (int e = 0; e < n; ++e) {
    EdgePath img = f.edge_image[e];
    if (assignment.flips[e] < 0) img = reverse_path(img);
    for (auto& step : img) step.sign *= assignment.flips[step.edge];
    h.edge_image[e] = std::move(img);
  }
  h.validate();
  return h;
}

EdgeDouble oriented_edge_double(const GraphMap& f) {
  const Graph& g = f.graph;
  const int n = g.num_edges();
  EdgeDouble d;
  d.graph.vertices = g.vertices;
  d.projection.resize(2 * n);
  d.involution.resize(2 * n);
  for (int e = 0; e < n; ++e) {
    // 2e = positive lift of e, 2e+1 = positive lift of the reversed edge.
    d.graph.edges.push_back({g.edges[e].name + ".p", g.edges[e].tail, g.edges[e].head});
    d.graph.edges.push_back({g.edges[e].name + ".n", g.edges[e].head, g.edges[e].tail});
    d.projection[2 * e] = {e, +1};
    d.projection[2 * e + 1] = {e, -1};
    d.involution[2 * e] = 2 * e + 1;
    d.involution[2 * e + 1] = 2 * e;
  }
  auto positive_lift = [&](const EdgePath& p) {
    EdgePath out;
    out.reserve(p.size());
    for (const auto& s : p) out.push_back({2 * s.edge + (s.sign > 0 ? 0 : 1), +1});
    return out;
  };
  d.lift.graph = d.graph;
  d.lift.vertex_image = f.vertex_image;
  d.lift.edge_image.resize(2 * n);
  for (int e = 0; e < n; ++e) {
    d.lift.edge_image[2 * e] = positive_lift(f.edge_image[e]);
    d.lift.edge_image[2 * e + 1] = positive_lift(reverse_path(f.edge_image[e]));
  }
  d.lift.validate();
  d.matrix = transition_matrix(d.lift);
  return d;
}

DichotomyReport verify_spectral_dichotomy(const GraphMap& f, double gap_tolerance) {
  DichotomyReport rep;
  OrientabilityClass cls = classify_orientability(f);
  rep.kind = cls.kind;
  IntMatrix a = transition_matrix(f);
  Laurent1 ca = char_poly(a);
  Laurent1 cm = char_poly(signed_chain_matrix(f));
  rep.lambda = geometric_stretch(f).value;
  rep.rho = homological_stretch(f);
  switch (cls.kind) {
    case Orientability::PosOrientable: {
      rep.pass = cm == ca;
      rep.detail = rep.pass ? "char(M) = char(A)" : "char(M) != char(A)";
      break;
    }
    case Orientability::NegOrientable: {
      Laurent1 want = laurent1_negate_var(ca);
      if (f.graph.num_edges() & 1) want = -want;
      rep.pass = cm == want;
      rep.detail = rep.pass ? "char(M)(t) = (-1)^E char(A)(-t)"
                            : "char(M)(t) != (-1)^E char(A)(-t)";
      break;
    }
    case Orientability::NonOrientable: {
      rep.margin = rep.lambda - rep.rho;
      rep.pass = rep.margin > gap_tolerance;
      rep.detail = "Perron gap " + std::to_string(rep.margin);
      break;
    }
  }
  return rep;
}

}  // namespace fbc
