#pragma once

#include <cstdint>
#include <vector>

#include "cosmoface/face_engine.hpp"
#include "cosmoface/fpolynomial.hpp"

namespace cosmoface {

struct Face {
  FaceSet vertices;
  int dim = -1;  // -1 for the empty face
};

/// All faces of P_G, computed as the closure of the facets under pairwise
/// intersection (every proper face is an intersection of the facets that
/// contain it), plus the empty and improper faces. Faces are ordered by
/// (dimension, lexicographic sorted-label list) and dimensions come from
/// exact integer rank.
class FaceLattice {
 public:
  static FaceLattice build(const FaceEngine& engine);

  const std::vector<Face>& faces() const { return faces_; }
  std::int64_t face_count() const { return static_cast<std::int64_t>(faces_.size()); }
  int polytope_dimension() const { return polytope_dim_; }

  bool contains(const FaceSet& x) const;
  /// Index into faces(), or -1.
  int find(const FaceSet& x) const;

  /// Faces of dimension dim(f)-1 contained in f (its facets), as indices.
  std::vector<int> facets_of(int face_index) const;

  FPolynomial f_polynomial() const;

  /// f-polynomial of one face of the lattice viewed as a polytope itself:
  /// counts the lattice faces contained in it, plus the empty face.
  FPolynomial face_f_polynomial(int face_index) const;

  /// Generating polynomial sum t^{dim sigma - deg w} over faces sigma
  /// containing the vertex face F_w; equals the f-polynomial of P_{G - w}.
  FPolynomial upper_f_polynomial(const FaceEngine& engine, NodeIndex w) const;

 private:
  std::vector<Face> faces_;
  std::vector<std::uint64_t> masks_;  // parallel to faces_
  int polytope_dim_ = -1;
  int vertex_count_ = 0;
};

/// Affine dimension of a face given by its vertex set; -1 for the empty
/// set. Rejects sets that fail the face criterion.
int face_dimension(const FaceEngine& engine, const FaceSet& x);

}  // namespace cosmoface
