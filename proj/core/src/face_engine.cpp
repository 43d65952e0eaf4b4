#include "cosmoface/face_engine.hpp"

#include <algorithm>
#include <cassert>

#include "cosmoface/errors.hpp"
#include "cosmoface/linalg.hpp"

namespace cosmoface {

Rational LinearFunctional::evaluate(const std::vector<int>& point) const {
  if (point.size() != coeffs.size())
    throw InputError("functional/point dimension mismatch");
  Rational acc = offset;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (point[i] != 0) acc += coeffs[i] * point[i];
  return acc;
}

FaceEngine::FaceEngine(const Multigraph& g, Caps caps)
    : polytope_(g), caps_(caps) {
  if (g.has_isolated_nodes()) {
    NodeIndex v = g.isolated_nodes().front();
    throw InputError("graph has isolated node '" + g.node_label(v) +
                     "'; the face criterion requires every node to meet an edge");
  }
  cycles_ = g.simple_cycles(caps_);
  for (const CycleDescriptor& c : cycles_) {
    FaceSet fwd, rev;
    int d = c.length();
    for (int i = 0; i < d; ++i) {
      fwd.push_back(polytope_.edge_dir_index(c.edges[i], c.nodes[i]));
      rev.push_back(polytope_.edge_dir_index(c.edges[i], c.nodes[(i + 1) % d]));
    }
    std::sort(fwd.begin(), fwd.end());
    std::sort(rev.begin(), rev.end());
    orientations_.emplace_back(std::move(fwd), std::move(rev));
  }
  build_edge_graph();
}

void FaceEngine::build_edge_graph() {
  const Multigraph& g = graph();
  const int n = polytope_.vertex_count();
  edge_graph_.vertex_count = n;
  edge_graph_.adjacent.assign(n, std::vector<char>(n, 1));
  for (int i = 0; i < n; ++i) edge_graph_.adjacent[i][i] = 0;

  auto remove = [&](int a, int b) {
    edge_graph_.adjacent[a][b] = 0;
    edge_graph_.adjacent[b][a] = 0;
  };
  // {E(e), D(e;v)} goes whenever endpoint v is not a leaf.
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    for (NodeIndex v : {g.edge(e).u, g.edge(e).w})
      if (g.degree(v) >= 2) remove(polytope_.edge_mid_index(e), polytope_.edge_dir_index(e, v));
  // Mixed marks of every parallel pair.
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    for (EdgeIndex f = e + 1; f < g.edge_count(); ++f) {
      const Edge& a = g.edge(e);
      const Edge& b = g.edge(f);
      if (std::minmax(a.u, a.w) != std::minmax(b.u, b.w)) continue;
      remove(polytope_.edge_dir_index(e, a.u), polytope_.edge_dir_index(f, a.w));
      remove(polytope_.edge_dir_index(e, a.w), polytope_.edge_dir_index(f, a.u));
    }
  std::int64_t count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge_graph_.adjacent[i][j]) ++count;
  edge_graph_.edge_count = count;
}

bool FaceEngine::is_face(const FaceSet& x) const {
  polytope_.validate_face_set(x);
  const Multigraph& g = graph();
  std::vector<char> in(polytope_.vertex_count(), 0);
  for (int i : x) in[i] = 1;

  // (i) E(e), D(e;v) together force E(e'), D(e';v) for every edge e' at v.
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!in[polytope_.edge_mid_index(e)]) continue;
    for (NodeIndex v : {g.edge(e).u, g.edge(e).w}) {
      if (!in[polytope_.edge_dir_index(e, v)]) continue;
      for (EdgeIndex f : g.incident_edges(v))
        if (!in[polytope_.edge_mid_index(f)] || !in[polytope_.edge_dir_index(f, v)])
          return false;
    }
  }
  // (ii) a fully marked cycle orientation forces the reversed marks.
  auto contains = [&](const FaceSet& marks) {
    return std::all_of(marks.begin(), marks.end(), [&](int i) { return in[i] != 0; });
  };
  for (const auto& [fwd, rev] : orientations_) {
    if (contains(fwd) && !contains(rev)) return false;
    if (contains(rev) && !contains(fwd)) return false;
  }
  return true;
}

Facet FaceEngine::facet_from_subgraph(const Subgraph& h) const {
  const Multigraph& g = graph();
  if (!(g.edge_count() >= 1 && g.is_connected()))
    throw InputError("facets are defined for connected graphs with at least one edge");
  g.validate_connected_subgraph(h);

  std::vector<char> node_in(g.node_count(), 0), edge_in(g.edge_count(), 0);
  for (NodeIndex v : h.nodes) node_in[v] = 1;
  for (EdgeIndex e : h.edges) edge_in[e] = 1;

  std::vector<char> excluded(polytope_.vertex_count(), 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (edge_in[e]) {
      excluded[polytope_.edge_mid_index(e)] = 1;
    } else {
      for (NodeIndex v : {g.edge(e).u, g.edge(e).w})
        if (node_in[v]) excluded[polytope_.edge_dir_index(e, v)] = 1;
    }
  }
  Facet facet;
  facet.subgraph = h;
  for (int i = 0; i < polytope_.vertex_count(); ++i)
    if (!excluded[i]) facet.vertex_set.push_back(i);

  facet.functional.coeffs.assign(polytope_.ambient_dimension(), 0);
  for (NodeIndex v : h.nodes) facet.functional.coeffs[v] = 1;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (edge_in[e]) continue;
    int inside = (node_in[g.edge(e).u] ? 1 : 0) + (node_in[g.edge(e).w] ? 1 : 0);
    facet.functional.coeffs[g.node_count() + e] = inside;
  }
#ifndef NDEBUG
  verify_facet(facet);
#endif
  return facet;
}

std::vector<Facet> FaceEngine::all_facets() const {
  std::vector<Facet> out;
  for (const Subgraph& h : graph().connected_subgraphs(caps_))
    out.push_back(facet_from_subgraph(h));
  return out;
}

Facet FaceEngine::scattering_facet() const {
  Subgraph whole;
  for (NodeIndex v = 0; v < graph().node_count(); ++v) whole.nodes.push_back(v);
  for (EdgeIndex e = 0; e < graph().edge_count(); ++e) whole.edges.push_back(e);
  return facet_from_subgraph(whole);
}

bool FaceEngine::is_simplex_face(const FaceSet& x) const {
  polytope_.validate_face_set(x);
  if (x.empty()) throw InputError("simplex test requires a nonempty vertex set");
  for (size_t a = 0; a < x.size(); ++a)
    for (size_t b = a + 1; b < x.size(); ++b)
      if (!edge_graph_.adjacent[x[a]][x[b]]) return false;
  std::vector<char> in(polytope_.vertex_count(), 0);
  for (int i : x) in[i] = 1;
  auto contains = [&](const FaceSet& marks) {
    return std::all_of(marks.begin(), marks.end(), [&](int i) { return in[i] != 0; });
  };
  for (const auto& [fwd, rev] : orientations_)
    if (contains(fwd) || contains(rev)) return false;
  return true;
}

FaceSet FaceEngine::vertex_face(NodeIndex v) const {
  const Multigraph& g = graph();
  g.node_label(v);  // range check
  if (g.degree(v) < 1)
    throw InputError("vertex face requires a node of degree >= 1");
  FaceSet out;
  for (EdgeIndex e : g.incident_edges(v)) {
    out.push_back(polytope_.edge_mid_index(e));
    out.push_back(polytope_.edge_dir_index(e, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FaceSet FaceEngine::cycle_face(const CycleDescriptor& cycle) const {
  graph().validate_cycle(cycle);
  FaceSet out;
  int d = cycle.length();
  for (int i = 0; i < d; ++i) {
    out.push_back(polytope_.edge_dir_index(cycle.edges[i], cycle.nodes[i]));
    out.push_back(polytope_.edge_dir_index(cycle.edges[i], cycle.nodes[(i + 1) % d]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FaceSet> FaceEngine::cycle_face_facets(const CycleDescriptor& cycle) const {
  graph().validate_cycle(cycle);
  FaceSet full = cycle_face(cycle);
  int d = cycle.length();
  std::vector<FaceSet> out;
  for (int i = 0; i < d; ++i) {
    int fwd = polytope_.edge_dir_index(cycle.edges[i], cycle.nodes[i]);
    for (int j = 0; j < d; ++j) {
      int rev = polytope_.edge_dir_index(cycle.edges[j], cycle.nodes[(j + 1) % d]);
      FaceSet facet;
      for (int idx : full)
        if (idx != fwd && idx != rev) facet.push_back(idx);
      out.push_back(std::move(facet));
    }
  }
  return out;
}

std::vector<FaceSet> FaceEngine::minimal_nonsimplex_faces() const {
  std::vector<FaceSet> out;
  for (NodeIndex v = 0; v < graph().node_count(); ++v)
    if (graph().degree(v) >= 2) out.push_back(vertex_face(v));
  for (const CycleDescriptor& c : cycles_) out.push_back(cycle_face(c));
  return out;
}

void FaceEngine::verify_facet(const Facet& f) const {
  std::vector<char> in(polytope_.vertex_count(), 0);
  for (int i : f.vertex_set) in[i] = 1;
  for (int i = 0; i < polytope_.vertex_count(); ++i) {
    Rational value = f.functional.evaluate(polytope_.vertex(i).coords);
    if (in[i] && value != 0)
      throw InternalError("facet certificate nonzero on facet vertex " +
                          polytope_.vertex(i).label);
    if (!in[i] && value <= 0)
      throw InternalError("facet certificate not strictly positive on " +
                          polytope_.vertex(i).label);
  }
  if (!is_face(f.vertex_set)) throw InternalError("facet vertex set fails the face criterion");
  // Maximality: a proper face of codimension one admits nothing between
  // itself and the polytope.
  int polytope_dim = affine_dimension(polytope_.coordinates(polytope_.full_face()));
  int facet_dim = affine_dimension(polytope_.coordinates(f.vertex_set));
  if (facet_dim != polytope_dim - 1)
    throw InternalError("facet has affine dimension " + std::to_string(facet_dim) +
                        ", expected " + std::to_string(polytope_dim - 1));
}

}  // namespace cosmoface
