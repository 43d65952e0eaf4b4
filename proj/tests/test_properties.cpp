// Property-style checks over generated graphs: structural invariants that
// must hold for every loopless multigraph, driven by a seeded generator.

#include <numeric>
#include <random>
#include <set>

#include "cosmoface/counting.hpp"
#include "cosmoface/differential.hpp"
#include "cosmoface/face_lattice.hpp"
#include "cosmoface/oracle.hpp"
#include "cosmoface/tree_recursion.hpp"
#include "doctest.h"
#include "graph_catalog.hpp"

using namespace cosmoface;

namespace {

// Random connected loopless multigraph: a random tree plus extra edges
// (parallel edges allowed).
Multigraph random_connected(std::mt19937_64& rng, int nodes, int extra_edges) {
  Multigraph g;
  g.add_node(catalog::node_name(0));
  for (int v = 1; v < nodes; ++v) {
    int anchor = static_cast<int>(rng() % v);
    g.add_edge(catalog::node_name(anchor), catalog::node_name(v));
  }
  for (int k = 0; k < extra_edges; ++k) {
    int a = static_cast<int>(rng() % nodes);
    int b = static_cast<int>(rng() % nodes);
    if (a == b) b = (b + 1) % nodes;
    g.add_edge(catalog::node_name(a), catalog::node_name(b));
  }
  return g;
}

}  // namespace

TEST_CASE("generated graphs: degree sum, generators, subgraph validity") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    int nodes = 2 + static_cast<int>(rng() % 4);
    int extra = static_cast<int>(rng() % 3);
    Multigraph g = random_connected(rng, nodes, extra);

    int degree_sum = 0;
    for (int v = 0; v < g.node_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());

    CosmoPolytope poly(g);
    CHECK(poly.vertex_count() == 3 * g.edge_count());
    for (const PolytopeVertex& v : poly.vertices())
      CHECK(std::accumulate(v.coords.begin(), v.coords.end(), 0) == 1);
    CHECK(affine_rank(poly.coordinates(poly.full_face())) ==
          g.node_count() + g.edge_count() - 1);

    for (const Subgraph& h : g.connected_subgraphs())
      CHECK_NOTHROW(g.validate_connected_subgraph(h));
    for (const CycleDescriptor& c : g.simple_cycles()) CHECK_NOTHROW(g.validate_cycle(c));
  }
}

TEST_CASE("generated graphs: lattice invariants and formula agreement") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    int nodes = 2 + static_cast<int>(rng() % 3);
    int extra = static_cast<int>(rng() % 2);
    Multigraph g = random_connected(rng, nodes, extra);
    if (g.edge_count() > 4) continue;

    FaceEngine engine(g);
    FaceLattice lattice = FaceLattice::build(engine);
    FPolynomial f = lattice.f_polynomial();
    CHECK(f.evaluate(-1) == 0);
    CHECK(f.is_valid_f_polynomial());
    CHECK(f.coeff(1) == engine.polytope().vertex_count());
    CHECK(f.coeff(2) == count_edges(g));
    CHECK(f.coeff(lattice.polytope_dimension()) == g.connected_subgraphs().size());

    // Minimal non-simplex faces really are non-simplex faces.
    for (const FaceSet& x : engine.minimal_nonsimplex_faces()) {
      CHECK(engine.is_face(x));
      CHECK(!engine.is_simplex_face(x));
    }
  }
}

TEST_CASE("generated graphs: criterion agrees with the LP oracle on samples") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 6; ++trial) {
    int nodes = 2 + static_cast<int>(rng() % 3);
    int extra = 1 + static_cast<int>(rng() % 2);
    Multigraph g = random_connected(rng, nodes, extra);
    DifferentialResult r = verify_sampled(FaceEngine(g), 150, rng());
    CHECK(r.mismatches == 0);
  }
}

TEST_CASE("volume invariance under edge insertion order and pulling order") {
  // The same tree built with shuffled edge order keeps its volume.
  std::mt19937_64 rng(31);
  std::vector<std::pair<const char*, const char*>> edges = {
      {"a", "b"}, {"b", "c"}, {"b", "d"}};
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(edges.begin(), edges.end(), rng);
    Multigraph g;
    g.add_node("a");
    g.add_node("b");
    for (auto [u, w] : edges) g.add_edge(u, w);
    CHECK(normalized_volume(g) == 64);
  }
  // Three pulling orders on both 3-edge tree shapes.
  for (const Multigraph& g : {catalog::path(4), catalog::star(3)}) {
    CosmoPolytope poly(g);
    const int n = poly.vertex_count();
    std::vector<int> forward(n), backward(n), shuffled(n);
    std::iota(forward.begin(), forward.end(), 0);
    for (int i = 0; i < n; ++i) backward[i] = n - 1 - i;
    shuffled = forward;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(normalized_volume(g, Caps{}, &forward) == 64);
    CHECK(normalized_volume(g, Caps{}, &backward) == 64);
    CHECK(normalized_volume(g, Caps{}, &shuffled) == 64);
  }
}

TEST_CASE("forest f-polynomials from random forests satisfy the product rule") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 8; ++trial) {
    // Two random trees on disjoint labels.
    Multigraph forest;
    int n1 = 1 + static_cast<int>(rng() % 4), n2 = 1 + static_cast<int>(rng() % 4);
    forest.add_node("a0");
    for (int v = 1; v < n1; ++v)
      forest.add_edge("a" + std::to_string(rng() % v), "a" + std::to_string(v));
    forest.add_node("b0");
    for (int v = 1; v < n2; ++v)
      forest.add_edge("b" + std::to_string(rng() % v), "b" + std::to_string(v));

    Multigraph first = forest.induced_on(forest.components()[0]);
    Multigraph second = forest.induced_on(forest.components()[1]);
    CHECK(tree_f_polynomial(forest) ==
          tree_f_polynomial(first) * tree_f_polynomial(second));
    CHECK(tree_f_polynomial(forest).evaluate(-1) == 0);
  }
}
