#pragma once

#include <cstdint>
#include <vector>

#include "cosmoface/caps.hpp"
#include "cosmoface/multigraph.hpp"
#include "cosmoface/polytope.hpp"
#include "cosmoface/types.hpp"

namespace cosmoface {

/// Exact-rational covector over the V âˆª E coordinates plus an offset;
/// a face certificate evaluates to offset + coeffs . point.
struct LinearFunctional {
  std::vector<Rational> coeffs;
  Rational offset = 0;

  Rational evaluate(const std::vector<int>& point) const;
};

/// A facet with its defining subgraph and supporting hyperplane. The
/// functional vanishes on vertex_set and is strictly positive on every
/// other polytope vertex.
struct Facet {
  Subgraph subgraph;
  FaceSet vertex_set;
  LinearFunctional functional;
};

/// Edge graph of the polytope: vertex adjacency plus edge count.
struct EdgeGraph {
  int vertex_count = 0;
  std::vector<std::vector<char>> adjacent;
  std::int64_t edge_count = 0;

  bool is_adjacent(int a, int b) const { return a != b && adjacent[a][b]; }
};

/// Graph-combinatorial face machinery for one graph: the face criterion,
/// facets, edge graph, simplex test and special faces. All data (cycle
/// list, orientation marks, edge graph) is precomputed up front and only
/// read afterwards, so concurrent queries on one engine are safe.
///
/// Rejected inputs: graphs with isolated nodes (the criterion does not
/// cover NodePoint vertices).
class FaceEngine {
 public:
  explicit FaceEngine(const Multigraph& g, Caps caps = {});

  const Multigraph& graph() const { return polytope_.graph(); }
  const CosmoPolytope& polytope() const { return polytope_; }
  const Caps& caps() const { return caps_; }
  const std::vector<CycleDescriptor>& cycles() const { return cycles_; }
  /// Both orientation mark sets per cycle, as sorted vertex-index lists.
  const std::vector<std::pair<FaceSet, FaceSet>>& cycle_orientations() const {
    return orientations_;
  }

  /// Graph criterion for "X is the vertex set of a face of P_G".
  /// The empty set and the full vertex set count as faces.
  bool is_face(const FaceSet& x) const;

  Facet facet_from_subgraph(const Subgraph& h) const;
  std::vector<Facet> all_facets() const;
  Facet scattering_facet() const;

  const EdgeGraph& edge_graph() const { return edge_graph_; }

  /// X nonempty, induces a clique of the edge graph and misses every fully
  /// marked cycle orientation; such X spans a simplex of dimension |X|-1.
  bool is_simplex_face(const FaceSet& x) const;

  /// The 2 deg(v) vertices {E(e), D(e;v) : e at v}; a deg(v)-dimensional
  /// cross-polytope face.
  FaceSet vertex_face(NodeIndex v) const;

  /// The 2d vertices {D(e_i;v_i), D(e_i;v_{i+1})}; a (2d-2)-dimensional
  /// cyclic polytope face.
  FaceSet cycle_face(const CycleDescriptor& cycle) const;
  /// Its d^2 simplex facets: complements of {D(e_i;v_i), D(e_j;v_{j+1})},
  /// ordered by (i, j).
  std::vector<FaceSet> cycle_face_facets(const CycleDescriptor& cycle) const;

  /// Vertex faces of nodes of degree >= 2 followed by all cycle faces:
  /// every non-simplex face contains one of these.
  std::vector<FaceSet> minimal_nonsimplex_faces() const;

  /// Checks the Facet invariants: certificate signs, criterion membership,
  /// and maximality (affine dimension = dim P_G - 1). Throws InternalError.
  void verify_facet(const Facet& f) const;

 private:
  CosmoPolytope polytope_;
  Caps caps_;
  std::vector<CycleDescriptor> cycles_;
  std::vector<std::pair<FaceSet, FaceSet>> orientations_;
  EdgeGraph edge_graph_;

  void build_edge_graph();
};

}  // namespace cosmoface
