#pragma once

#include <string>
#include <vector>

#include "cosmoface/multigraph.hpp"
#include "cosmoface/types.hpp"

namespace cosmoface {

enum class VertexKind { EdgeMid, EdgeDir, NodePoint };

/// A labeled lattice point of the cosmological polytope. Coordinates are
/// indexed node coordinates first (node order), then edge coordinates
/// (edge order). Canonical labels: E(<edge>), D(<edge>;<node>), N(<node>).
struct PolytopeVertex {
  VertexKind kind;
  EdgeIndex e = -1;  // EdgeMid/EdgeDir
  NodeIndex v = -1;  // EdgeDir: marked endpoint; NodePoint: the node
  std::string label;
  std::vector<int> coords;
};

/// Sorted list of polytope-vertex indices (canonical face representation).
using FaceSet = std::vector<int>;

/// The vertex set V(P_G) and ambient coordinate system for a graph.
///
/// Per edge {u,w} the three points are emitted in the order EdgeMid,
/// EdgeDir at u, EdgeDir at w; NodePoints only for isolated nodes (for a
/// node on an edge, x_v lies inside that edge's triangle, so it is never a
/// polytope vertex).
class CosmoPolytope {
 public:
  explicit CosmoPolytope(Multigraph graph);

  const Multigraph& graph() const { return graph_; }
  int ambient_dimension() const;  // |V| + |E|
  const std::vector<PolytopeVertex>& vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const PolytopeVertex& vertex(int i) const;

  int index_of_label(const std::string& label) const;  // throws InputError
  FaceSet face_from_labels(const std::vector<std::string>& labels) const;
  /// Lexicographically sorted labels (the external face representation).
  std::vector<std::string> labels_of(const FaceSet& face) const;

  /// Coordinate rows in face (index) order.
  std::vector<std::vector<int>> coordinates(const FaceSet& face) const;

  /// EdgeMid / EdgeDir vertex indices.
  int edge_mid_index(EdgeIndex e) const;
  int edge_dir_index(EdgeIndex e, NodeIndex endpoint) const;

  /// Name of coordinate i, "x(<node>)" or "y(<edge>)".
  std::string coordinate_name(int i) const;

  FaceSet full_face() const;
  void validate_face_set(const FaceSet& face) const;

 private:
  Multigraph graph_;
  std::vector<PolytopeVertex> vertices_;
  std::vector<int> mid_index_;                  // per edge
  std::vector<std::pair<int, int>> dir_index_;  // per edge: (at u, at w)
};

/// The labeled lattice points spanning P_G, in the canonical order above.
std::vector<PolytopeVertex> polytope_vertices(const Multigraph& g);

/// |V| + |E|.
int ambient_dimension(const Multigraph& g);

}  // namespace cosmoface
