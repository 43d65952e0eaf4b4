#include "cosmoface/polytope.hpp"

#include <algorithm>
#include <map>

#include "cosmoface/errors.hpp"

namespace cosmoface {

CosmoPolytope::CosmoPolytope(Multigraph graph) : graph_(std::move(graph)) {
  const int n_nodes = graph_.node_count();
  const int n_edges = graph_.edge_count();
  mid_index_.assign(n_edges, -1);
  dir_index_.assign(n_edges, {-1, -1});

  auto coords_of = [&](VertexKind kind, EdgeIndex e, NodeIndex marked) {
    std::vector<int> c(n_nodes + n_edges, 0);
    if (kind == VertexKind::NodePoint) {
      c[marked] = 1;
      return c;
    }
    const Edge& ed = graph_.edge(e);
    if (kind == VertexKind::EdgeMid) {
      c[ed.u] = 1;
      c[ed.w] = 1;
      c[n_nodes + e] = -1;
    } else {
      c[marked] = 1;
      c[ed.other(marked)] = -1;
      c[n_nodes + e] = 1;
    }
    return c;
  };

  for (EdgeIndex e = 0; e < n_edges; ++e) {
    const Edge& ed = graph_.edge(e);
    mid_index_[e] = vertex_count();
    vertices_.push_back(PolytopeVertex{VertexKind::EdgeMid, e, -1, "E(" + ed.id + ")",
                                       coords_of(VertexKind::EdgeMid, e, -1)});
    dir_index_[e].first = vertex_count();
    vertices_.push_back(PolytopeVertex{VertexKind::EdgeDir, e, ed.u,
                                       "D(" + ed.id + ";" + graph_.node_label(ed.u) + ")",
                                       coords_of(VertexKind::EdgeDir, e, ed.u)});
    dir_index_[e].second = vertex_count();
    vertices_.push_back(PolytopeVertex{VertexKind::EdgeDir, e, ed.w,
                                       "D(" + ed.id + ";" + graph_.node_label(ed.w) + ")",
                                       coords_of(VertexKind::EdgeDir, e, ed.w)});
  }
  for (NodeIndex v : graph_.isolated_nodes())
    vertices_.push_back(PolytopeVertex{VertexKind::NodePoint, -1, v,
                                       "N(" + graph_.node_label(v) + ")",
                                       coords_of(VertexKind::NodePoint, -1, v)});
}

int CosmoPolytope::ambient_dimension() const {
  return graph_.node_count() + graph_.edge_count();
}

const PolytopeVertex& CosmoPolytope::vertex(int i) const {
  if (i < 0 || i >= vertex_count()) throw InputError("polytope vertex index out of range");
  return vertices_[i];
}

int CosmoPolytope::index_of_label(const std::string& label) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices_[i].label == label) return i;
  throw InputError("unknown polytope vertex label '" + label + "'");
}

FaceSet CosmoPolytope::face_from_labels(const std::vector<std::string>& labels) const {
  FaceSet face;
  for (const std::string& l : labels) face.push_back(index_of_label(l));
  std::sort(face.begin(), face.end());
  face.erase(std::unique(face.begin(), face.end()), face.end());
  if (face.size() != labels.size()) throw InputError("duplicate vertex label in face");
  return face;
}

std::vector<std::string> CosmoPolytope::labels_of(const FaceSet& face) const {
  validate_face_set(face);
  std::vector<std::string> out;
  for (int i : face) out.push_back(vertices_[i].label);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> CosmoPolytope::coordinates(const FaceSet& face) const {
  validate_face_set(face);
  std::vector<std::vector<int>> rows;
  for (int i : face) rows.push_back(vertices_[i].coords);
  return rows;
}

int CosmoPolytope::edge_mid_index(EdgeIndex e) const {
  graph_.edge(e);  // range check
  return mid_index_[e];
}

int CosmoPolytope::edge_dir_index(EdgeIndex e, NodeIndex endpoint) const {
  const Edge& ed = graph_.edge(e);
  if (endpoint == ed.u) return dir_index_[e].first;
  if (endpoint == ed.w) return dir_index_[e].second;
  throw InputError("node '" + graph_.node_label(endpoint) + "' is not an endpoint of edge '" +
                   ed.id + "'");
}

std::string CosmoPolytope::coordinate_name(int i) const {
  if (i < 0 || i >= ambient_dimension()) throw InputError("coordinate index out of range");
  if (i < graph_.node_count()) return "x(" + graph_.node_label(i) + ")";
  return "y(" + graph_.edge(i - graph_.node_count()).id + ")";
}

FaceSet CosmoPolytope::full_face() const {
  FaceSet all(vertex_count());
  for (int i = 0; i < vertex_count(); ++i) all[i] = i;
  return all;
}

void CosmoPolytope::validate_face_set(const FaceSet& face) const {
  int prev = -1;
  for (int i : face) {
    if (i < 0 || i >= vertex_count()) throw InputError("polytope vertex index out of range");
    if (i <= prev) throw InputError("face set must be sorted and duplicate-free");
    prev = i;
  }
}

std::vector<PolytopeVertex> polytope_vertices(const Multigraph& g) {
  return CosmoPolytope(g).vertices();
}

int ambient_dimension(const Multigraph& g) { return g.node_count() + g.edge_count(); }

}  // namespace cosmoface
