#include "fbc/parse.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace fbc {

namespace {

struct Token {
  std::string text;
  int col = 0;
};

std::vector<Token> split_line(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

}  // namespace

GraphMapDocument parse_graph_map(const std::string& text, const std::string& source) {
  GraphMapDocument doc;
  doc.source = source;
  Graph& g = doc.map.graph;
  struct PendingImage {
    std::string edge;
    std::vector<Token> tokens;
    int line;
  };
  std::vector<PendingImage> images;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#')
      doc.comments.push_back(line.substr(first + 1));
    auto toks = split_line(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (kw == "name") {
      if (toks.size() != 2) throw syntax_error(lineno, toks[0].col, "name takes one identifier");
      doc.name = toks[1].text;
    } else if (kw == "vertex") {
      if (toks.size() != 2) throw syntax_error(lineno, toks[0].col, "vertex takes one name");
      if (g.vertex_index(toks[1].text) >= 0)
        throw syntax_error(lineno, toks[1].col, "duplicate vertex " + toks[1].text);
      g.vertices.push_back(toks[1].text);
    } else if (kw == "edge") {
      if (toks.size() != 4)
        throw syntax_error(lineno, toks[0].col, "edge takes a name, a tail and a head");
      int t = g.vertex_index(toks[2].text), h = g.vertex_index(toks[3].text);
      if (t < 0) throw syntax_error(lineno, toks[2].col, "unknown vertex " + toks[2].text);
      if (h < 0) throw syntax_error(lineno, toks[3].col, "unknown vertex " + toks[3].text);
      if (g.edge_index(toks[1].text) >= 0 || g.vertex_index(toks[1].text) >= 0)
        throw syntax_error(lineno, toks[1].col, "duplicate name " + toks[1].text);
      g.edges.push_back({toks[1].text, t, h});
    } else if (kw == "image") {
      if (toks.size() < 3)
        throw syntax_error(lineno, toks[0].col, "image takes an edge and at least one step");
      images.push_back({toks[1].text, {toks.begin() + 2, toks.end()}, lineno});
    } else {
      throw syntax_error(lineno, toks[0].col, "unknown directive " + kw);
    }
  }

  doc.map.edge_image.assign(g.num_edges(), {});
  std::vector<bool> have_image(g.num_edges(), false);
  for (const auto& pi : images) {
    int e = g.edge_index(pi.edge);
    if (e < 0)
      throw ValidationError("UnknownEdge", "line " + std::to_string(pi.line) +
                                               ": image of unknown edge " + pi.edge);
    if (have_image[e])
      throw syntax_error(pi.line, pi.tokens[0].col, "duplicate image for " + pi.edge);
    EdgePath path;
    for (const auto& tok : pi.tokens) {
      std::string name = tok.text;
      int sign = 1;
      if (name.size() >= 2 && name[0] == '~') {
        sign = -1;
        name = name.substr(1);
      } else if (name.size() == 1 && std::isupper(static_cast<unsigned char>(name[0]))) {
        // Single-uppercase sugar: A means ~a when edge a exists.
        std::string lower(1, static_cast<char>(std::tolower(name[0])));
        if (g.edge_index(lower) >= 0 && g.edge_index(name) < 0) {
          sign = -1;
          name = lower;
        }
      }
      int idx = g.edge_index(name);
      if (idx < 0)
        throw ValidationError("UnknownEdge", "line " + std::to_string(pi.line) + ", column " +
                                                 std::to_string(tok.col) + ": unknown edge " +
                                                 tok.text + " in image word");
      path.push_back({idx, sign});
    }
    doc.map.edge_image[e] = std::move(path);
    have_image[e] = true;
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!have_image[e])
      throw ValidationError("MissingImage", "no image given for edge " + g.edges[e].name);
  }
  g.validate();

  // Infer vertex images from edge-image endpoints and cross-check.
  doc.map.vertex_image.assign(g.num_vertices(), -1);
  auto assign = [&](int v, int img, const std::string& edge) {
    if (doc.map.vertex_image[v] < 0) {
      doc.map.vertex_image[v] = img;
    } else if (doc.map.vertex_image[v] != img) {
      throw ValidationError("InconsistentEndpoints",
                            "edge " + edge + " forces vertex " + g.vertices[v] +
                                " to have two different images");
    }
  };
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& p = doc.map.edge_image[e];
    validate_path(g, p, "image of " + g.edges[e].name);
    assign(g.edges[e].tail, path_start(g, p), g.edges[e].name);
    assign(g.edges[e].head, path_end(g, p), g.edges[e].name);
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (doc.map.vertex_image[v] < 0)
      throw ValidationError("IsolatedVertex",
                            "vertex " + g.vertices[v] + " is not an endpoint of any edge");
  }
  doc.map.validate();
  return doc;
}

GraphMapDocument load_graph_map(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("FileError", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_map(buf.str(), path);
}

std::string render_graph_map(const GraphMapDocument& doc) {
  const Graph& g = doc.map.graph;
  std::ostringstream out;
  if (!doc.name.empty()) out << "name " << doc.name << "\n";
  for (const auto& v : g.vertices) out << "vertex " << v << "\n";
  for (const auto& e : g.edges)
    out << "edge " << e.name << " " << g.vertices[e.tail] << " " << g.vertices[e.head] << "\n";
  for (int e = 0; e < g.num_edges(); ++e) {
    out << "image " << g.edges[e].name;
    for (const auto& s : doc.map.edge_image[e]) {
      out << " " << (s.sign < 0 ? "~" : "") << g.edges[s.edge].name;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace fbc
