#include "cosmoface/face_lattice.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "cosmoface/errors.hpp"
#include "cosmoface/linalg.hpp"

namespace cosmoface {

namespace {

std::uint64_t mask_of(const FaceSet& x) {
  std::uint64_t m = 0;
  for (int i : x) m |= std::uint64_t{1} << i;
  return m;
}

FaceSet set_of(std::uint64_t mask) {
  FaceSet x;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) x.push_back(i);
  return x;
}

}  // namespace

FaceLattice FaceLattice::build(const FaceEngine& engine) {
  const CosmoPolytope& poly = engine.polytope();
  const Caps& caps = engine.caps();
  if (poly.vertex_count() > 64)
    throw CapError("face enumeration supports at most 64 polytope vertices; this polytope has " +
                   std::to_string(poly.vertex_count()));

  std::vector<std::uint64_t> facet_masks;
  for (const Facet& f : engine.all_facets()) facet_masks.push_back(mask_of(f.vertex_set));

  const std::uint64_t full = mask_of(poly.full_face());
  std::unordered_set<std::uint64_t> seen{full, 0};
  std::vector<std::uint64_t> worklist{full};
  for (std::uint64_t m : facet_masks)
    if (seen.insert(m).second) worklist.push_back(m);

  while (!worklist.empty()) {
    std::uint64_t m = worklist.back();
    worklist.pop_back();
    for (std::uint64_t f : facet_masks) {
      std::uint64_t g = m & f;
      if (seen.insert(g).second) {
        if (static_cast<std::int64_t>(seen.size()) > caps.max_faces)
          throw CapError("face lattice exceeded cap of " + std::to_string(caps.max_faces) +
                         " faces (graph has " +
                         std::to_string(engine.graph().node_count()) + " nodes, " +
                         std::to_string(engine.graph().edge_count()) + " edges, " +
                         std::to_string(poly.vertex_count()) + " polytope vertices)");
        worklist.push_back(g);
      }
    }
  }

  FaceLattice lattice;
  lattice.vertex_count_ = poly.vertex_count();
  std::vector<std::pair<Face, std::uint64_t>> entries;
  entries.reserve(seen.size());
  for (std::uint64_t m : seen) {
    Face face;
    face.vertices = set_of(m);
    face.dim = face.vertices.empty()
                   ? -1
                   : affine_dimension(poly.coordinates(face.vertices));
    entries.emplace_back(std::move(face), m);
  }
  std::sort(entries.begin(), entries.end(), [&](const auto& a, const auto& b) {
    if (a.first.dim != b.first.dim) return a.first.dim < b.first.dim;
    return poly.labels_of(a.first.vertices) < poly.labels_of(b.first.vertices);
  });
  for (auto& [face, m] : entries) {
    lattice.faces_.push_back(std::move(face));
    lattice.masks_.push_back(m);
  }
  lattice.polytope_dim_ = lattice.faces_.back().dim;
  return lattice;
}

bool FaceLattice::contains(const FaceSet& x) const { return find(x) >= 0; }

int FaceLattice::find(const FaceSet& x) const {
  std::uint64_t m = mask_of(x);
  for (size_t i = 0; i < masks_.size(); ++i)
    if (masks_[i] == m) return static_cast<int>(i);
  return -1;
}

std::vector<int> FaceLattice::facets_of(int face_index) const {
  if (face_index < 0 || face_index >= static_cast<int>(faces_.size()))
    throw InputError("face index out of range");
  std::vector<int> out;
  const int want = faces_[face_index].dim - 1;
  const std::uint64_t m = masks_[face_index];
  for (size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == want && (masks_[i] & ~m) == 0) out.push_back(static_cast<int>(i));
  return out;
}

FPolynomial FaceLattice::f_polynomial() const {
  std::vector<BigInt> coeffs(polytope_dim_ + 2, 0);
  for (const Face& f : faces_) coeffs[f.dim + 1] += 1;
  return FPolynomial(std::move(coeffs));
}

FPolynomial FaceLattice::face_f_polynomial(int face_index) const {
  if (face_index < 0 || face_index >= static_cast<int>(faces_.size()))
    throw InputError("face index out of range");
  const std::uint64_t m = masks_[face_index];
  std::vector<BigInt> coeffs(faces_[face_index].dim + 2, 0);
  for (size_t i = 0; i < faces_.size(); ++i)
    if ((masks_[i] & ~m) == 0) coeffs[faces_[i].dim + 1] += 1;
  return FPolynomial(std::move(coeffs));
}

FPolynomial FaceLattice::upper_f_polynomial(const FaceEngine& engine, NodeIndex w) const {
  FaceSet fw = engine.vertex_face(w);
  const std::uint64_t fw_mask = mask_of(fw);
  const int deg = engine.graph().degree(w);
  std::vector<BigInt> coeffs(polytope_dim_ - deg + 2, 0);
  for (size_t i = 0; i < faces_.size(); ++i)
    if ((fw_mask & ~masks_[i]) == 0) coeffs.at(faces_[i].dim - deg) += 1;
  return FPolynomial(std::move(coeffs));
}

int face_dimension(const FaceEngine& engine, const FaceSet& x) {
  if (!engine.is_face(x))
    throw InputError("vertex set is not a face of the polytope");
  if (x.empty()) return -1;
  return affine_dimension(engine.polytope().coordinates(x));
}

}  // namespace cosmoface
