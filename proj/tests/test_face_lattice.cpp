#include <algorithm>
#include <set>

#include "cosmoface/errors.hpp"
#include "cosmoface/face_lattice.hpp"
#include "doctest.h"
#include "graph_catalog.hpp"

using namespace cosmoface;

TEST_CASE("triangle lattice for the single edge") {
  FaceEngine eng(catalog::path(2));
  FaceLattice lat = FaceLattice::build(eng);
  CHECK(lat.face_count() == 8);
  CHECK(lat.polytope_dimension() == 2);
  CHECK(lat.f_polynomial() == FPolynomial::of({1, 3, 3, 1}));
}

TEST_CASE("B2 is the triangular prism") {
  FaceEngine eng(catalog::banana(2));
  FaceLattice lat = FaceLattice::build(eng);
  CHECK(lat.face_count() == 22);
  CHECK(lat.polytope_dimension() == 3);
  CHECK(lat.f_polynomial() == FPolynomial::of({1, 6, 9, 5, 1}));
}

TEST_CASE("path on three nodes has 40 faces") {
  FaceEngine eng(catalog::path(3));
  FaceLattice lat = FaceLattice::build(eng);
  CHECK(lat.face_count() == 40);
  CHECK(lat.f_polynomial() == FPolynomial::of({1, 6, 13, 13, 6, 1}));
  CHECK(lat.polytope_dimension() == 4);  // |V|+|E|-1
}

TEST_CASE("face dimensions by exact rank") {
  FaceEngine eng(catalog::banana(2));
  FaceSet triangle = eng.polytope().face_from_labels({"E(e2)", "D(e1;a)", "D(e1;b)"});
  CHECK(face_dimension(eng, triangle) == 2);
  CHECK(face_dimension(eng, {}) == -1);
  CHECK_THROWS_AS(face_dimension(eng, eng.polytope().face_from_labels({"E(e1)", "D(e1;a)"})),
                  InputError);

  FaceEngine p3(catalog::path(3));
  CHECK(face_dimension(p3, p3.polytope().full_face()) == 4);
}

TEST_CASE("lattice members pass the criterion and close under intersection") {
  for (const Multigraph& g : {catalog::banana(2), catalog::path(3), catalog::cycle(3)}) {
    FaceEngine eng(g);
    FaceLattice lat = FaceLattice::build(eng);
    std::set<FaceSet> members;
    for (const Face& f : lat.faces()) {
      CHECK(eng.is_face(f.vertices));
      members.insert(f.vertices);
    }
    for (const Face& a : lat.faces())
      for (const Face& b : lat.faces()) {
        FaceSet meet;
        std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                              b.vertices.end(), std::back_inserter(meet));
        CHECK(members.count(meet) == 1);
      }
  }
}

TEST_CASE("every criterion-positive subset appears in the lattice (3 edges and below)") {
  for (const Multigraph& g :
       {catalog::path(2), catalog::banana(2), catalog::path(3), catalog::cycle(3),
        catalog::star(3), catalog::banana(3)}) {
    FaceEngine eng(g);
    FaceLattice lat = FaceLattice::build(eng);
    const int n = eng.polytope().vertex_count();
    std::int64_t criterion_count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      FaceSet x;
      for (int i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) x.push_back(i);
      if (eng.is_face(x)) {
        ++criterion_count;
        CHECK(lat.contains(x));
      }
    }
    CHECK(criterion_count == lat.face_count());
  }
}

TEST_CASE("f-vector endpoints: vertices, facets, improper face") {
  for (const Multigraph& g : {catalog::banana(2), catalog::path(4), catalog::cycle(3)}) {
    FaceEngine eng(g);
    FaceLattice lat = FaceLattice::build(eng);
    FPolynomial f = lat.f_polynomial();
    CHECK(f.coeff(0) == 1);
    CHECK(f.coeff(1) == eng.polytope().vertex_count());
    CHECK(f.coeff(lat.polytope_dimension()) == g.connected_subgraphs().size());
    CHECK(f.coeff(lat.polytope_dimension() + 1) == 1);
    CHECK(f.evaluate(-1) == 0);
  }
}

TEST_CASE("graded structure: faces are intersections of the facets above them") {
  FaceEngine eng(catalog::banana(2));
  FaceLattice lat = FaceLattice::build(eng);
  auto facets = eng.all_facets();
  for (const Face& f : lat.faces()) {
    if (f.dim < 0 || f.dim == lat.polytope_dimension()) continue;
    FaceSet meet = eng.polytope().full_face();
    for (const Facet& top : facets) {
      if (!std::includes(top.vertex_set.begin(), top.vertex_set.end(), f.vertices.begin(),
                         f.vertices.end()))
        continue;
      FaceSet next;
      std::set_intersection(meet.begin(), meet.end(), top.vertex_set.begin(),
                            top.vertex_set.end(), std::back_inserter(next));
      meet = std::move(next);
    }
    CHECK(meet == f.vertices);
  }
}

TEST_CASE("deterministic face order: by dimension then labels") {
  FaceEngine eng(catalog::banana(2));
  FaceLattice lat = FaceLattice::build(eng);
  const auto& faces = lat.faces();
  for (size_t i = 1; i < faces.size(); ++i) {
    CHECK(faces[i - 1].dim <= faces[i].dim);
    if (faces[i - 1].dim == faces[i].dim)
      CHECK(eng.polytope().labels_of(faces[i - 1].vertices) <
            eng.polytope().labels_of(faces[i].vertices));
  }
}

TEST_CASE("upper f-polynomial matches the deletion polytope") {
  // Middle node of the 3-path: two isolated nodes remain.
  FaceEngine p3(catalog::path(3));
  FaceLattice lat3 = FaceLattice::build(p3);
  CHECK(lat3.upper_f_polynomial(p3, 1) == FPolynomial::of({1, 2, 1}));
  // End node: a single edge remains.
  CHECK(lat3.upper_f_polynomial(p3, 0) == FPolynomial::of({1, 3, 3, 1}));
}

TEST_CASE("face cap raises") {
  Caps caps;
  caps.max_faces = 10;
  FaceEngine eng(catalog::path(3), caps);
  CHECK_THROWS_AS(FaceLattice::build(eng), CapError);
}

TEST_CASE("vertex face of a degree-d node is a d-cross-polytope") {
  FaceEngine star3(catalog::star(3));
  FaceLattice lat = FaceLattice::build(star3);
  int idx = lat.find(star3.vertex_face(0));
  REQUIRE(idx >= 0);
  CHECK(lat.faces()[idx].dim == 3);
  // Octahedron counts: f_k = 2^{k+1} C(3, k+1).
  CHECK(lat.face_f_polynomial(idx) == FPolynomial::of({1, 6, 12, 8, 1}));

  FaceEngine b2(catalog::banana(2));
  FaceLattice latb = FaceLattice::build(b2);
  int quad = latb.find(b2.vertex_face(0));
  REQUIRE(quad >= 0);
  CHECK(latb.faces()[quad].dim == 2);
  CHECK(latb.face_f_polynomial(quad) == FPolynomial::of({1, 4, 4, 1}));
}

TEST_CASE("cycle face of C3 is the cyclic polytope C(6,4)") {
  FaceEngine c3(catalog::cycle(3));
  FaceLattice lat = FaceLattice::build(c3);
  auto cycles = c3.graph().simple_cycles();
  int idx = lat.find(c3.cycle_face(cycles[0]));
  REQUIRE(idx >= 0);
  CHECK(lat.faces()[idx].dim == 4);
  // Its facets in the lattice are exactly the nine Gale complements.
  auto expected = c3.cycle_face_facets(cycles[0]);
  std::set<FaceSet> expected_set(expected.begin(), expected.end());
  std::set<FaceSet> actual;
  for (int qi : lat.facets_of(idx)) {
    const Face& q = lat.faces()[qi];
    CHECK(static_cast<int>(q.vertices.size()) == q.dim + 1);  // simplex facets
    actual.insert(q.vertices);
  }
  CHECK(actual == expected_set);
}
