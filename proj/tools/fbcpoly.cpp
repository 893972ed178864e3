// Command-line front end: parse a graph-map description, run the analysis
// pipeline, and emit text, JSON, or SVG reports.
//
// Exit codes: 0 success, 2 validation failure (bad input, class outside the
// cone, ...), 3 violated theory assertion (always a bug upstream).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fbc/pipeline.hpp"
#include "fbc/roots.hpp"

using json = nlohmann::ordered_json;
using namespace fbc;

namespace {

struct Options {
  std::string file;
  std::string format = "text";
  std::string klass;
  std::string out;
  double tolerance = 1e-6;
};

std::ostream& output(const Options& opt, std::ofstream& file_out) {
  if (opt.out.empty()) return std::cout;
  file_out.open(opt.out);
  if (!file_out) throw ValidationError("FileError", "cannot write " + opt.out);
  return file_out;
}

CohomClass parse_class(const std::string& text, int rank) {
  CohomClass u;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      u.functional.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw ValidationError("BadClass", "class entries must be integers: " + part);
    }
  }
  if (static_cast<int>(u.functional.size()) != rank)
    throw ValidationError("BadClass", "class needs " + std::to_string(rank) +
                                          " entries, got " + std::to_string(u.functional.size()));
  return u;
}

json poly_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    bool ok = true;
    long long v = c.to_ll(ok);
    json term;
    if (ok)
      term["coeff"] = v;
    else
      term["coeff"] = c.to_string();
    term["exp"] = e;
    terms.push_back(term);
  }
  return terms;
}

json base_report(const Analysis& a) {
  json j;
  j["name"] = a.doc.name;
  j["vars"] = a.presentation.group.names;
  j["polynomials"]["alexander"] = poly_to_json(a.bundle.alexander);
  j["polynomials"]["mcmullen"] = poly_to_json(a.bundle.mcmullen);
  j["polynomials"]["vertex"] = poly_to_json(a.bundle.vertex_poly);
  json ineqs = json::array();
  for (const auto& s : a.cone.support_vectors) ineqs.push_back(s);
  j["cone"]["inequalities"] = ineqs;
  json rays = json::array();
  if (a.cone.extreme_rays) {
    rays.push_back(a.cone.extreme_rays->first);
    rays.push_back(a.cone.extreme_rays->second);
  }
  j["cone"]["rays"] = rays;
  j["classes"] = json::array();
  return j;
}

json class_to_json(const ClassReport& r) {
  json j;
  j["u"] = r.u;
  j["in_cone"] = r.in_cone;
  if (r.in_cone) {
    j["lambda"] = r.lambda;
    j["rho"] = r.rho;
    j["orientability"] = to_string(r.orientability);
  }
  j["spec_m"] = poly_to_json(r.spec_mcmullen);
  j["spec_delta"] = poly_to_json(r.spec_alexander);
  return j;
}

std::string fmt6(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

void emit(const Options& opt, const json& j, const std::string& text) {
  std::ofstream file_out;
  std::ostream& os = output(opt, file_out);
  if (opt.format == "json")
    os << j.dump(2) << "\n";
  else
    os << text;
}

int cmd_validate(const Options& opt) {
  Analysis a = analyze_file(opt.file);
  json j = base_report(a);
  j["valid"] = true;
  j["vertices"] = a.doc.map.graph.num_vertices();
  j["edges"] = a.doc.map.graph.num_edges();
  j["train_track"] = a.train_track.ok;
  j["irreducible"] = a.irreducibility.irreducible;
  j["primitive"] = a.irreducibility.primitive;
  std::ostringstream t;
  t << "valid graph map";
  if (!a.doc.name.empty()) t << " \"" << a.doc.name << "\"";
  t << ": " << a.doc.map.graph.num_vertices() << " vertices, " << a.doc.map.graph.num_edges()
    << " edges\n"
    << "train track: " << (a.train_track.ok ? "yes" : "no: " + a.train_track.detail) << "\n"
    << "irreducible: " << (a.irreducibility.irreducible ? "yes" : "no")
    << ", period " << a.irreducibility.period
    << ", primitive: " << (a.irreducibility.primitive ? "yes" : "no") << "\n";
  emit(opt, j, t.str());
  return 0;
}

int cmd_orient(const Options& opt) {
  Analysis a = analyze_file(opt.file);
  if (!a.orientability)
    throw ValidationError("ReducibleInput", "orientability needs an irreducible map");
  json j = base_report(a);
  j["orientability"] = to_string(a.orientability->kind);
  std::ostringstream t;
  t << to_string(a.orientability->kind) << "\n";
  if (a.orientability->assignment) {
    json flips = json::array();
    t << "orientation: ";
    const auto& g = a.doc.map.graph;
    for (int e : g.edges_by_name()) {
      bool flip = a.orientability->assignment->flips[e] < 0;
      flips.push_back({{"edge", g.edges[e].name}, {"reverse", flip}});
      t << g.edges[e].name << (flip ? "-" : "+") << " ";
    }
    t << "\n";
    j["assignment"] = flips;
  }
  emit(opt, j, t.str());
  return 0;
}

int cmd_stretch(const Options& opt) {
  Analysis a = analyze_file(opt.file);
  StretchValue lam = geometric_stretch(a.doc.map);
  double rho = homological_stretch(a.doc.map);
  json j = base_report(a);
  j["lambda"] = lam.value;
  j["lambda_primitive"] = lam.primitive;
  j["rho"] = rho;
  std::ostringstream t;
  t << "lambda = " << fmt6(lam.value);
  if (!lam.primitive) t << " (transition matrix not primitive; spectral radius reported)";
  t << "\nrho = " << fmt6(rho) << "\n";
  emit(opt, j, t.str());
  return 0;
}

int cmd_homology(const Options& opt) {
  Analysis a = analyze_file(opt.file);
  const auto& pres = a.presentation;
  const auto& g = a.doc.map.graph;
  json j = base_report(a);
  j["rank"] = pres.rank;
  json coc = json::array();
  for (int e : g.edges_by_name())
    coc.push_back({{"edge", g.edges[e].name}, {"k_class", pres.cocycle[e]}});
  j["cocycle"] = coc;
  json pot = json::array();
  for (int v : g.vertices_by_name())
    pot.push_back({{"vertex", g.vertices[v]}, {"k_class", pres.potentials[v]}});
  j["potentials"] = pot;
  json cycles = json::array();
  auto vcs = vertex_cycles(pres, a.doc.map);
  for (const auto& vc : vcs) {
    json c;
    json orbit = json::array();
    for (int v : vc.orbit) orbit.push_back(g.vertices[v]);
    c["orbit"] = orbit;
    c["class"] = vc.cls;
    cycles.push_back(c);
  }
  j["vertex_cycles"] = cycles;
  std::ostringstream t;
  t << "rank(H) = " << pres.rank << ", K rank = " << pres.rank - 1 << ", variables:";
  for (const auto& n : pres.group.names) t << " " << n;
  t << "\nbasepoint " << g.vertices[pres.basepoint] << ", spanning tree:";
  for (int e : pres.spanning_tree) t << " " << g.edges[e].name;
  t << "\ncocycle:";
  for (int e : g.edges_by_name()) {
    t << " " << g.edges[e].name << "=(";
    for (size_t i = 0; i < pres.cocycle[e].size(); ++i)
      t << (i ? "," : "") << pres.cocycle[e][i];
    t << ")";
  }
  t << "\nvertex cycles:";
  for (const auto& vc : vcs) {
    t << " [";
    for (size_t i = 0; i < vc.orbit.size(); ++i) t << (i ? " " : "") << g.vertices[vc.orbit[i]];
    t << "] class " << render_exp(vc.cls, pres.group);
  }
  t << "\n";
  emit(opt, j, t.str());
  return 0;
}

int cmd_poly(const Options& opt, const std::string& which) {
  Analysis a = analyze_file(opt.file);
  const LaurentPoly* p = nullptr;
  if (which == "alexander") p = &a.bundle.alexander;
  if (which == "mcmullen") p = &a.bundle.mcmullen;
  if (which == "vertexpoly") p = &a.bundle.vertex_poly;
  json j = base_report(a);
  emit(opt, j, render_poly(display_form(*p), a.presentation.group) + "\n");
  return 0;
}

int cmd_cone(const Options& opt) {
  Analysis a = analyze_file(opt.file);
  json j = base_report(a);
  std::ostringstream t;
  t << "cone of sections: u.s > 0 for s in:\n";
  for (const auto& s : a.cone.support_vectors) {
    t << "  (";
    for (size_t i = 0; i < s.size(); ++i) t << (i ? "," : "") << s[i];
    t << ")\n";
  }
  if (a.cone.extreme_rays) {
    auto& [r1, r2] = *a.cone.extreme_rays;
    t << "extreme rays: (" << r1[0] << "," << r1[1] << ") and (" << r2[0] << "," << r2[1]
      << ")\n";
  }
  emit(opt, j, t.str());
  return 0;
}

int cmd_specialize(const Options& opt) {
  Analysis a = analyze_file(opt.file);
  CohomClass u = parse_class(opt.klass, a.presentation.rank);
  if (!a.orientability)
    throw ValidationError("ReducibleInput", "per-class reports need an irreducible map");
  ClassReport r = class_report(a.bundle, a.presentation, a.cone, *a.orientability, u);
  json j = base_report(a);
  j["classes"].push_back(class_to_json(r));
  std::ostringstream t;
  AbelianGroup tvar{1, {"t"}};
  if (!r.in_cone) {
    t << "class is not a primitive class in the cone of sections\n";
  } else {
    t << "lambda = " << fmt6(r.lambda) << ", rho = " << fmt6(r.rho) << ", verdict "
      << to_string(r.orientability) << "\n";
  }
  t << "m^u     = " << render_poly(r.spec_mcmullen, tvar) << "\n";
  t << "delta^u = " << render_poly(r.spec_alexander, tvar) << "\n";
  emit(opt, j, t.str());
  return 0;
}

int cmd_classify(const Options& opt) {
  Analysis a = analyze_file(opt.file);
  CohomClass u = parse_class(opt.klass, a.presentation.rank);
  if (!a.orientability)
    throw ValidationError("ReducibleInput", "per-class reports need an irreducible map");
  ClassOrientability v =
      classify_class(*a.orientability, a.presentation.dual_class, a.cone, u);
  json j = base_report(a);
  j["classes"].push_back({{"u", u.functional}, {"orientability", to_string(v)}});
  emit(opt, j, to_string(v) + "\n");
  return 0;
}

int cmd_verify(const Options& opt) {
  Analysis a = analyze_file(opt.file);
  VerifyReport rep = run_verify(a, opt.tolerance);
  json j = base_report(a);
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name},
                      {"applicable", c.applicable},
                      {"informational", c.informational},
                      {"pass", c.pass},
                      {"detail", c.detail}});
  }
  j["checks"] = checks;
  j["all_pass"] = rep.all_pass;
  std::ostringstream t;
  for (const auto& c : rep.checks) {
    const char* tag = !c.applicable ? "SKIP "
                      : c.informational ? "INFO "
                      : (c.pass ? "PASS " : "FAIL ");
    t << tag << c.name;
    if (c.informational) t << (c.pass ? " yes" : " no");
    if (!c.detail.empty()) t << "  (" << c.detail << ")";
    t << "\n";
  }
  t << (rep.all_pass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  emit(opt, j, t.str());
  return rep.all_pass ? 0 : 3;
}

int cmd_plot_cone(const Options& opt) {
  Analysis a = analyze_file(opt.file);
  if (a.presentation.rank != 2)
    throw ValidationError("UnsupportedRank", "plot-cone needs rank 2");
  // Support of inv(m) and the two boundary rays.
  std::vector<std::pair<double, double>> pts;
  double extent = 4;
  for (const auto& e : a.bundle.mcmullen.support()) {
    pts.push_back({static_cast<double>(-e[0]), static_cast<double>(-e[1])});
    extent = std::max({extent, std::abs(pts.back().first), std::abs(pts.back().second)});
  }
  extent += 1;
  const double w = 480, c = w / 2, scale = (w / 2 - 20) / extent;
  auto X = [&](double x) { return c + scale * x; };
  auto Y = [&](double y) { return c - scale * y; };
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << w << "\">\n";
  s << "<rect width=\"" << w << "\" height=\"" << w << "\" fill=\"white\"/>\n";
  if (a.cone.extreme_rays) {
    auto& [r1, r2] = *a.cone.extreme_rays;
    auto norm = [&](const std::vector<int64_t>& r) {
      double n = std::hypot(static_cast<double>(r[0]), static_cast<double>(r[1]));
      return std::pair<double, double>{r[0] / n * extent, r[1] / n * extent};
    };
    auto [x1, y1] = norm(r1);
    auto [x2, y2] = norm(r2);
    s << "<path d=\"M " << X(0) << " " << Y(0) << " L " << X(1.5 * x1) << " " << Y(1.5 * y1)
      << " L " << X(1.5 * (x1 + x2)) << " " << Y(1.5 * (y1 + y2)) << " L " << X(1.5 * x2) << " "
      << Y(1.5 * y2) << " Z\" fill=\"#cde8ff\" stroke=\"none\"/>\n";
    for (auto [x, y] : {std::pair{x1, y1}, std::pair{x2, y2}}) {
      s << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(x) << "\" y2=\""
        << Y(y) << "\" stroke=\"#1166bb\" stroke-width=\"2\" stroke-dasharray=\"6 3\"/>\n";
    }
  }
  s << "<line x1=\"0\" y1=\"" << Y(0) << "\" x2=\"" << w << "\" y2=\"" << Y(0)
    << "\" stroke=\"#999\"/>\n";
  s << "<line x1=\"" << X(0) << "\" y1=\"0\" x2=\"" << X(0) << "\" y2=\"" << w
    << "\" stroke=\"#999\"/>\n";
  s << "<text x=\"" << w - 18 << "\" y=\"" << Y(0) - 6 << "\" font-size=\"14\">"
    << a.presentation.group.names[0] << "*</text>\n";
  s << "<text x=\"" << X(0) + 6 << "\" y=\"14\" font-size=\"14\">"
    << a.presentation.group.names[1] << "*</text>\n";
  for (auto [x, y] : pts) {
    s << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y)
      << "\" r=\"4\" fill=\"#116611\"/>\n";
  }
  s << "</svg>\n";
  std::ofstream file_out;
  std::ostream& os = output(opt, file_out);
  os << s.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial invariants of graph-map mapping tori"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_class) {
    sub->add_option("file", opt.file, "graph map description")->required();
    sub->add_option("--format", opt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", opt.out, "write output to a file");
    sub->add_option("--tolerance", opt.tolerance, "numeric report tolerance");
    if (with_class)
      sub->add_option("--class", opt.klass, "comma separated integer class")->required();
  };

  std::vector<std::pair<std::string, std::string>> subs = {
      {"validate", "parse and validate a graph map"},
      {"orient", "orientability classification"},
      {"stretch", "geometric and homological stretch factors"},
      {"homology", "rank, cocycle table and vertex cycles of the mapping torus"},
      {"alexander", "Alexander polynomial"},
      {"mcmullen", "McMullen polynomial"},
      {"vertexpoly", "vertex polynomial"},
      {"cone", "cone of cross sections"},
      {"specialize", "per-class stretch factors and specializations"},
      {"classify", "orientability of a cohomology class"},
      {"verify", "run every mechanical identity check"},
      {"plot-cone", "SVG picture of the cone (rank 2 only)"},
  };
  for (auto& [name, help] : subs) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, name == "specialize" || name == "classify");
  }

  CLI11_PARSE(app, argc, argv);
  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "validate") return cmd_validate(opt);
    if (cmd == "orient") return cmd_orient(opt);
    if (cmd == "stretch") return cmd_stretch(opt);
    if (cmd == "homology") return cmd_homology(opt);
    if (cmd == "alexander" || cmd == "mcmullen" || cmd == "vertexpoly")
      return cmd_poly(opt, cmd);
    if (cmd == "cone") return cmd_cone(opt);
    if (cmd == "specialize") return cmd_specialize(opt);
    if (cmd == "classify") return cmd_classify(opt);
    if (cmd == "verify") return cmd_verify(opt);
    if (cmd == "plot-cone") return cmd_plot_cone(opt);
  } catch (const TheoryError& err) {
    if (opt.format == "json")
      std::cout << json{{"error", {{"code", err.code}, {"message", err.what()}}}}.dump(2)
                << "\n";
    else
      std::cerr << "theory violation [" << err.code << "]: " << err.what() << "\n";
    return 3;
  } catch (const ValidationError& err) {
    if (opt.format == "json")
      std::cout << json{{"error", {{"code", err.code}, {"message", err.what()}}}}.dump(2)
                << "\n";
    else
      std::cerr << "error [" << err.code << "]: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
