// One-call orchestration of the full analysis of a graph self-map, shared by
// the command-line tool and the test suites.

#ifndef FBC_PIPELINE_HPP
#define FBC_PIPELINE_HPP

#include <optional>

#include "fbc/cones.hpp"
#include "fbc/invariants.hpp"
#include "fbc/oracle.hpp"
#include "fbc/orientation.hpp"
#include "fbc/parse.hpp"
#include "fbc/torus.hpp"

namespace fbc {

struct Analysis {
  GraphMapDocument doc;
  IntMatrix transition;
  IntMatrix chain;
  IntMatrix vertex_action;
  IrreducibilityReport irreducibility;
  TrainTrackReport train_track;
  std::optional<OrientabilityClass> orientability;  // absent when reducible
  TorusPresentation presentation;
  LiftedMatrices lifted;
  InvariantBundle bundle;
  ConeOfSections cone;
  std::optional<CohomClass> eps;  // orientation class
};

Analysis analyze(GraphMapDocument doc, const PresentationOptions& opts = {});
inline Analysis analyze_text(const std::string& text) {
  return analyze(parse_graph_map(text));
}
inline Analysis analyze_file(const std::string& path) { return analyze(load_graph_map(path)); }

struct VerifyCheck {
  std::string name;
  bool applicable = true;
  bool informational = false;  // reported status, not a verified identity
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass = true;

  void add(const std::string& name, bool pass, const std::string& detail = "");
  void info(const std::string& name, bool value, const std::string& detail = "");
  void skip(const std::string& name, const std::string& why);
};

// Mechanical verification of the identities the theory guarantees for this
// map: train-track/irreducibility status, the orientability dichotomy, the
// polynomial relations, the specialization identities at the dual class, the
// brute-force oracles, and the Newton-polytope cone characterization.
VerifyReport run_verify(const Analysis& a, double gap_tolerance = 1e-6);

// det(t^{-1} I - X) for a matrix with characteristic polynomial cp.
inline Laurent1 reciprocal_char(const Laurent1& cp) { return apply_inv(cp); }

}  // namespace fbc

#endif  // FBC_PIPELINE_HPP
