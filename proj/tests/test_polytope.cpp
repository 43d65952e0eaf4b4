#include <numeric>

#include "cosmoface/errors.hpp"
#include "cosmoface/polytope.hpp"
#include "doctest.h"
#include "graph_catalog.hpp"

using namespace cosmoface;

TEST_CASE("single edge gives the three labeled triangle points") {
  CosmoPolytope poly(catalog::path(2));
  REQUIRE(poly.vertex_count() == 3);
  CHECK(poly.ambient_dimension() == 3);
  CHECK(poly.vertex(0).label == "E(e1)");
  CHECK(poly.vertex(0).coords == std::vector<int>{1, 1, -1});
  CHECK(poly.vertex(1).label == "D(e1;a)");
  CHECK(poly.vertex(1).coords == std::vector<int>{1, -1, 1});
  CHECK(poly.vertex(2).label == "D(e1;b)");
  CHECK(poly.vertex(2).coords == std::vector<int>{-1, 1, 1});
}

TEST_CASE("banana B2 has six vertices in ambient dimension four") {
  CosmoPolytope poly(catalog::banana(2));
  CHECK(poly.vertex_count() == 6);
  CHECK(poly.ambient_dimension() == 4);
}

TEST_CASE("node points appear only for isolated nodes") {
  Multigraph g;
  g.add_node("x");
  g.add_edge("a", "b");
  CosmoPolytope poly(g);
  REQUIRE(poly.vertex_count() == 4);  // 3 edge points + N(x)
  CHECK(poly.vertex(3).label == "N(x)");
  CHECK(poly.vertex(3).coords == std::vector<int>{1, 0, 0, 0});

  Multigraph lone;
  lone.add_node("v");
  CosmoPolytope point(lone);
  REQUIRE(point.vertex_count() == 1);
  CHECK(point.vertex(0).label == "N(v)");
}

TEST_CASE("every generator satisfies sum x + sum y = 1") {
  for (const Multigraph& g :
       {catalog::path(4), catalog::cycle(4), catalog::banana(3), catalog::star(3),
        catalog::banana_chain(), catalog::triangle_pendant()}) {
    CosmoPolytope poly(g);
    CHECK(poly.vertex_count() == 3 * g.edge_count());
    for (const PolytopeVertex& v : poly.vertices())
      CHECK(std::accumulate(v.coords.begin(), v.coords.end(), 0) == 1);
  }
}

TEST_CASE("coordinate rows come back in face order") {
  CosmoPolytope poly(catalog::path(2));
  FaceSet mid = poly.face_from_labels({"E(e1)"});
  auto rows = poly.coordinates(mid);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == std::vector<int>{1, 1, -1});
  CHECK_THROWS_AS(poly.face_from_labels({"E(zz)"}), InputError);
  CHECK_THROWS_AS(poly.face_from_labels({"E(e1)", "E(e1)"}), InputError);
}

TEST_CASE("labels round-trip and sort lexicographically") {
  CosmoPolytope poly(catalog::banana(2));
  FaceSet all = poly.full_face();
  auto labels = poly.labels_of(all);
  CHECK(std::is_sorted(labels.begin(), labels.end()));
  CHECK(poly.face_from_labels(labels) == all);
  CHECK(poly.coordinate_name(0) == "x(a)");
  CHECK(poly.coordinate_name(2) == "y(e1)");
}
