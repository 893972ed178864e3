#include "doctest.h"
#include "fbc/parse.hpp"
#include "helpers.hpp"

using namespace fbc;

TEST_CASE("basic parsing and sugar") {
  auto doc = parse_graph_map("vertex v\nedge a v v\nimage a a a\n");
  CHECK(doc.map.graph.num_vertices() == 1);
  CHECK(doc.map.graph.num_edges() == 1);
  CHECK(doc.map.edge_image[0].size() == 2);

  // Uppercase sugar A = ~a, mixed with explicit ~.
  auto doc2 = parse_graph_map("vertex v\nedge a v v\nedge b v v\nimage a B ~a\nimage b ~b A\n");
  CHECK(doc2.map.edge_image[0][0].sign == -1);
  CHECK(doc2.map.edge_image[0][0].edge == 1);
  CHECK(doc2.map.edge_image[0][1].sign == -1);
  CHECK(doc2.map.edge_image[0][1].edge == 0);
}

TEST_CASE("the six-edge fixture parses to the displayed data") {
  auto doc = fbc::test::fixture("antiO");
  CHECK(doc.name == "antiO");
  CHECK(doc.map.graph.num_vertices() == 2);
  CHECK(doc.map.graph.num_edges() == 6);
  // g(a) = DEABF.
  const auto& img = doc.map.edge_image[doc.map.graph.edge_index("a")];
  REQUIRE(img.size() == 5);
  CHECK(doc.map.graph.edges[img[0].edge].name == "d");
  CHECK(img[0].sign == -1);
  CHECK(doc.map.graph.edges[img[4].edge].name == "f");
  // Vertex images are inferred: the map swaps v and w.
  CHECK(doc.map.vertex_image[doc.map.graph.vertex_index("v")] ==
        doc.map.graph.vertex_index("w"));
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_graph_map("vertex v\nedg a v v\n");
    FAIL("expected a syntax error");
  } catch (const ValidationError& e) {
    CHECK(e.code == "SyntaxError");
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph_map("vertex v\nvertex v\n"), ValidationError);
  CHECK_THROWS_AS(parse_graph_map("vertex v\nedge a v v\nimage a a\nimage a a\n"),
                  ValidationError);
}

TEST_CASE("unknown edges and inconsistent endpoints") {
  try {
    parse_graph_map("vertex v\nedge a v v\nimage a a q\n");
    FAIL("expected UnknownEdge");
  } catch (const ValidationError& e) {
    CHECK(e.code == "UnknownEdge");
  }
  // Image of a is not a composable path.
  try {
    parse_graph_map(
        "vertex u\nvertex v\nedge a u u\nedge b u v\nimage a a ~b\nimage b b\n");
    FAIL("expected InconsistentEndpoints");
  } catch (const ValidationError& e) {
    CHECK(e.code == "InconsistentEndpoints");
  }
  // Conflicting inferred vertex images.
  try {
    parse_graph_map("vertex u\nvertex v\nedge a u v\nedge b u v\nimage a a\nimage b ~a\n");
    FAIL("expected InconsistentEndpoints");
  } catch (const ValidationError& e) {
    CHECK(e.code == "InconsistentEndpoints");
  }
  // Degenerate image.
  CHECK_THROWS_AS(parse_graph_map("vertex v\nedge a v v\nimage a\n"), ValidationError);
  // Disconnected graph.
  try {
    parse_graph_map(
        "vertex u\nvertex v\nedge a u u\nedge b v v\nimage a a\nimage b b\n");
    FAIL("expected DisconnectedGraph");
  } catch (const ValidationError& e) {
    CHECK(e.code == "DisconnectedGraph");
  }
}

TEST_CASE("render and reparse round trip") {
  for (const char* name : {"antiO", "oAndNone", "oAndNoneInv", "antiAnti", "bs12"}) {
    auto doc = fbc::test::fixture(name);
    auto again = parse_graph_map(render_graph_map(doc));
    CHECK(again.map.graph.vertices == doc.map.graph.vertices);
    REQUIRE(again.map.graph.num_edges() == doc.map.graph.num_edges());
    for (int e = 0; e < doc.map.graph.num_edges(); ++e) {
      CHECK(again.map.graph.edges[e].name == doc.map.graph.edges[e].name);
      CHECK(again.map.edge_image[e] == doc.map.edge_image[e]);
    }
    CHECK(again.map.vertex_image == doc.map.vertex_image);
  }
}
