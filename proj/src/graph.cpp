#include "fbc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fbc {

int Graph::vertex_index(const std::string& name) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices[i] == name) return i;
  return -1;
}

int Graph::edge_index(const std::string& name) const {
  for (int i = 0; i < num_edges(); ++i)
    if (edges[i].name == name) return i;
  return -1;
}

void Graph::validate() const {
  std::set<std::string> names;
  for (const auto& v : vertices) {
    if (!names.insert(v).second)
      throw ValidationError("DuplicateName", "duplicate vertex name: " + v);
  }
  for (const auto& e : edges) {
    if (!names.insert(e.name).second)
      throw ValidationError("DuplicateName", "duplicate name: " + e.name);
    if (e.tail < 0 || e.tail >= num_vertices() || e.head < 0 || e.head >= num_vertices())
      throw ValidationError("DanglingEdge", "edge " + e.name + " has a missing endpoint");
  }
  if (vertices.empty()) throw ValidationError("EmptyGraph", "graph has no vertices");
  // Connectivity of the underlying undirected graph.
  std::vector<int> seen(num_vertices(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : edges) {
      for (int w : {e.tail == v ? e.head : -1, e.head == v ? e.tail : -1}) {
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != num_vertices())
    throw ValidationError("DisconnectedGraph", "graph is not connected");
}

std::vector<int> Graph::vertices_by_name() const {
  std::vector<int> idx(vertices.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return vertices[a] < vertices[b]; });
  return idx;
}

std::vector<int> Graph::edges_by_name() const {
  std::vector<int> idx(edges.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return edges[a].name < edges[b].name; });
  return idx;
}

int path_start(const Graph& g, const EdgeStep& s) {
  return s.sign > 0 ? g.edges[s.edge].tail : g.edges[s.edge].head;
}

int path_end(const Graph& g, const EdgeStep& s) {
  return s.sign > 0 ? g.edges[s.edge].head : g.edges[s.edge].tail;
}

int path_start(const Graph& g, const EdgePath& p) { return path_start(g, p.front()); }
int path_end(const Graph& g, const EdgePath& p) { return path_end(g, p.back()); }

void validate_path(const Graph& g, const EdgePath& p, const std::string& context) {
  if (p.empty())
    throw ValidationError("DegenerateImage", context + ": empty edge path");
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    if (path_end(g, p[i]) != path_start(g, p[i + 1]))
      throw ValidationError("InconsistentEndpoints",
                            context + ": steps " + std::to_string(i) + "," +
                                std::to_string(i + 1) + " are not composable");
  }
}

EdgePath reverse_path(const EdgePath& p) {
  EdgePath r;
  r.reserve(p.size());
  for (size_t i = p.size(); i-- > 0;) r.push_back({p[i].edge, -p[i].sign});
  return r;
}

bool path_is_reduced(const EdgePath& p) {
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i].edge == p[i + 1].edge && p[i].sign != p[i + 1].sign) return false;
  }
  return true;
}

void GraphMap::validate() const {
  graph.validate();
  if (static_cast<int>(vertex_image.size()) != graph.num_vertices() ||
      static_cast<int>(edge_image.size()) != graph.num_edges())
    throw ValidationError("BadMap", "vertex or edge image tables have the wrong size");
  for (int v : vertex_image) {
    if (v < 0 || v >= graph.num_vertices())
      throw ValidationError("BadMap", "vertex image out of range");
  }
  for (int e = 0; e < graph.num_edges(); ++e) {
    const auto& name = graph.edges[e].name;
    validate_path(graph, edge_image[e], "image of " + name);
    if (path_start(graph, edge_image[e]) != vertex_image[graph.edges[e].tail] ||
        path_end(graph, edge_image[e]) != vertex_image[graph.edges[e].head])
      throw ValidationError("InconsistentEndpoints",
                            "image of " + name + " does not respect the vertex images");
  }
}

EdgePath GraphMap::image(const EdgeStep& s) const {
  return s.sign > 0 ? edge_image[s.edge] : reverse_path(edge_image[s.edge]);
}

GraphMap compose(const GraphMap& f, const GraphMap& g) {
  GraphMap h;
  h.graph = f.graph;
  h.vertex_image.resize(f.graph.num_vertices());
  for (int v = 0; v < f.graph.num_vertices(); ++v)
    h.vertex_image[v] = f.vertex_image[g.vertex_image[v]];
  h.edge_image.resize(f.graph.num_edges());
  for (int e = 0; e < f.graph.num_edges(); ++e) {
    EdgePath out;
    for (const auto& step : g.edge_image[e]) {
      EdgePath part = f.image(step);
      out.insert(out.end(), part.begin(), part.end());
    }
    h.edge_image[e] = std::move(out);
  }
  return h;
}

GraphMap iterate_map(const GraphMap& f, int n) {
  GraphMap h = f;
  for (int k = 1; k < n; ++k) h = compose(f, h);
  return h;
}

}  // namespace fbc
