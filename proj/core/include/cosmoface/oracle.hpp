#pragma once

#include <optional>
#include <vector>

#include "cosmoface/caps.hpp"
#include "cosmoface/face_engine.hpp"
#include "cosmoface/face_lattice.hpp"
#include "cosmoface/polytope.hpp"
#include "cosmoface/types.hpp"

namespace cosmoface {

/// Affine dimension of a nonempty point set: exact integer rank of the
/// rows minus the first row. A triangle's three corners give 2.
int affine_rank(const std::vector<std::vector<int>>& points);

/// Outcome of the geometric face decision. On a positive answer,
/// `certificate` vanishes on X and evaluates to at least `margin` (> 0) on
/// every other polytope vertex, i.e. -certificate.coeffs is the maximizing
/// functional and certificate.offset its maximum. On a negative answer,
/// either `witness_vertex` names a vertex outside X inside the affine hull
/// of X, or the LP optimum `margin` is 0.
struct LpDecision {
  bool is_face = false;
  std::optional<LinearFunctional> certificate;
  Rational margin = 0;
  std::optional<int> witness_vertex;
};

/// Geometric ground truth for "X is the vertex set of a face of P_G",
/// independent of the graph criterion. Solves, by exact rational simplex,
///   maximize t  s.t.  phi.x = c (x in X), phi.y + t <= c (y outside X),
///                     -1 <= phi_i <= 1,
/// and answers true iff the optimum is strictly positive. The empty set and
/// the full vertex set are faces by convention. A vertex outside X but
/// inside aff(X) forces optimum 0, so that exact rank test short-circuits
/// the simplex.
LpDecision lp_is_face(const CosmoPolytope& poly, const FaceSet& x);

/// All subsets of V(P_G) that lp_is_face accepts, in increasing bitmask
/// order. Guarded by caps.max_bf_vertices (2^n subsets are scanned).
std::vector<FaceSet> brute_force_faces(const CosmoPolytope& poly, const Caps& caps = {});

struct Triangulation {
  std::vector<FaceSet> simplices;  // each simplex has dim(P)+1 vertices
};

/// Pulling triangulation from a complete face lattice: each face is coned
/// from its least vertex over the triangulations of its facets avoiding
/// that vertex. `vertex_rank` permutes the pulling priority (tests use it
/// to check volume invariance); by default the lexicographically least
/// label is pulled.
Triangulation pulling_triangulation(const FaceLattice& lattice, const CosmoPolytope& poly,
                                    const std::vector<int>* vertex_rank = nullptr);

/// Triangulation of a single lattice face (the polytope itself is the top
/// face).
std::vector<FaceSet> face_pulling_triangulation(const FaceLattice& lattice,
                                                const CosmoPolytope& poly, int face_index,
                                                const std::vector<int>* vertex_rank = nullptr);

/// Normalized lattice volume: sum over pulling-triangulation simplices of
/// |det| of their edge vectors in a basis of span(P_G - v0) intersected
/// with the integer lattice. A primitive simplex has volume 1.
BigInt normalized_volume(const Multigraph& g, const Caps& caps = {},
                         const std::vector<int>* vertex_rank = nullptr);

}  // namespace cosmoface
