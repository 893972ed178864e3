// Line-oriented description format for graph self-maps:
//
//   # comment
//   name <identifier>            (optional)
//   vertex <name>
//   edge <name> <tail> <head>
//   image <edge> <tok> <tok> ...
//
// A token is an edge name, ~name for the reversed edge, or -- for edges with
// single-letter lowercase names -- the single uppercase letter (A means ~a).
// Vertex images are inferred from the edge-image endpoints and cross-checked.

#ifndef FBC_PARSE_HPP
#define FBC_PARSE_HPP

#include <string>

#include "fbc/graph.hpp"

namespace fbc {

struct GraphMapDocument {
  std::string name;                   // empty when the file does not declare one
  std::string source;                 // path or "<inline>"
  std::vector<std::string> comments;  // full-line comments, in order
  GraphMap map;
};

GraphMapDocument parse_graph_map(const std::string& text, const std::string& source = "<inline>");
GraphMapDocument load_graph_map(const std::string& path);

// Canonical rendering; parse(render(doc)) reconstructs an identical map.
std::string render_graph_map(const GraphMapDocument& doc);

}  // namespace fbc

#endif  // FBC_PARSE_HPP
