// Finite graphs, edge paths, and graph self-maps.
//
// Vertices and edges are referred to by index internally; names are kept for
// IO and for the canonical orderings (lexicographic name order) used by the
// homology conventions.

#ifndef FBC_GRAPH_HPP
#define FBC_GRAPH_HPP

#include <string>
#include <vector>

#include "fbc/errors.hpp"

namespace fbc {

struct Graph {
  struct Edge {
    std::string name;
    int tail = 0;
    int head = 0;
  };

  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }

  int vertex_index(const std::string& name) const;  // -1 when absent
  int edge_index(const std::string& name) const;

  // Throws ValidationError on duplicate names, dangling endpoints, or a
  // disconnected graph (every downstream invariant assumes connectedness).
  void validate() const;

  // Vertex and edge indices sorted by name.
  std::vector<int> vertices_by_name() const;
  std::vector<int> edges_by_name() const;
};

// One oriented step along an edge: sign +1 traverses tail->head.
struct EdgeStep {
  int edge = 0;
  int sign = 1;

  bool operator==(const EdgeStep& o) const = default;
};

using EdgePath = std::vector<EdgeStep>;

int path_start(const Graph& g, const EdgeStep& s);
int path_end(const Graph& g, const EdgeStep& s);
int path_start(const Graph& g, const EdgePath& p);
int path_end(const Graph& g, const EdgePath& p);

// Consecutive steps must be composable; paths are nonempty.
void validate_path(const Graph& g, const EdgePath& p, const std::string& context);

EdgePath reverse_path(const EdgePath& p);

// Path with immediate backtracks (e followed by its reverse) cancelled.
bool path_is_reduced(const EdgePath& p);

struct GraphMap {
  Graph graph;
  std::vector<int> vertex_image;        // per vertex index
  std::vector<EdgePath> edge_image;     // per edge index

  // Checks that every edge image runs from vertex_image[tail] to
  // vertex_image[head] and is a nondegenerate composable path.
  void validate() const;

  const EdgePath& image(int edge) const { return edge_image[edge]; }
  // Image of an oriented step, i.e. f(e) or f(e) reversed.
  EdgePath image(const EdgeStep& s) const;
};

// f after g (apply g first).  Requires both maps on the same graph.
GraphMap compose(const GraphMap& f, const GraphMap& g);
GraphMap iterate_map(const GraphMap& f, int n);

}  // namespace fbc

#endif  // FBC_GRAPH_HPP
