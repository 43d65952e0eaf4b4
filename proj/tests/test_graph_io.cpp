#include "cosmoface/errors.hpp"
#include "cosmoface/graph_io.hpp"
#include "doctest.h"

using namespace cosmoface;

TEST_CASE("text format: comments, node header, parallel edges, labels") {
  Multigraph g = parse_graph(
      "# a banana with a tail\n"
      "nodes: z\n"
      "a b left\n"
      "a b right\n"
      "b c\n");
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.node_label(0) == "z");
  CHECK(g.edge(0).id == "left");
  CHECK(g.edge(1).id == "right");
  CHECK(g.edge(2).id == "e3");
  CHECK(g.isolated_nodes().size() == 1);
  CHECK(!g.is_simple());
}

TEST_CASE("text format errors") {
  CHECK_THROWS_AS(parse_graph("a a\n"), InputError);               // loop
  CHECK_THROWS_AS(parse_graph("a b c d\n"), InputError);           // too many tokens
  CHECK_THROWS_AS(parse_graph("a b x\na b x\n"), InputError);      // duplicate edge id
  CHECK_THROWS_AS(parse_graph("nodes: a\nnodes: a\n"), InputError);
}

TEST_CASE("json format") {
  Multigraph g = parse_graph(R"({
    "nodes": ["x"],
    "edges": [["a","b"], ["a","b","par"], ["b","c"]]
  })");
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(1).id == "par");
  CHECK_THROWS_AS(parse_graph(R"({"edges": [["a"]]})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"edges": [["a","a"]]})"), InputError);
  CHECK_THROWS_AS(parse_graph("{not json"), InputError);
}

TEST_CASE("whitespace-only input is the empty graph") {
  Multigraph g = parse_graph("  \n\t\n");
  CHECK(g.node_count() == 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("missing file raises an input error") {
  CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.txt"), InputError);
}
