#include "cosmoface/tree_recursion.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "cosmoface/errors.hpp"
#include "cosmoface/face_engine.hpp"
#include "cosmoface/face_lattice.hpp"

namespace cosmoface {

LeafExtension leaf_extension(const FPolynomial& f_g, const FPolynomial& f_g_minus_w, int deg_w) {
  if (deg_w < 0) throw InputError("attachment degree must be nonnegative");
  FPolynomial one_plus_t = FPolynomial::of({1, 1});
  FPolynomial one_plus_2t = FPolynomial::of({1, 2});
  FPolynomial facet =
      one_plus_2t * f_g - (one_plus_t * f_g_minus_w).scale_shift(1, deg_w + 1);
  if (facet.has_negative_coefficient())
    throw InternalError("leaf extension produced a negative coefficient; inputs are not the "
                        "f-polynomials of a graph and its attachment-node deletion");
  FPolynomial extended = one_plus_t * facet;
  if (!facet.is_valid_f_polynomial() || !extended.is_valid_f_polynomial())
    throw InternalError("leaf extension produced an invalid f-polynomial");
  return LeafExtension{std::move(facet), std::move(extended)};
}

namespace {

// Canonical isomorphism-invariant encoding of a tree (rooted at its
// center, or at the lexicographically smaller side of a bicentral pair).
std::string rooted_code(const Multigraph& g, NodeIndex root, NodeIndex parent) {
  std::vector<std::string> children;
  for (EdgeIndex e : g.incident_edges(root)) {
    NodeIndex o = g.edge(e).other(root);
    if (o != parent) children.push_back(rooted_code(g, o, root));
  }
  std::sort(children.begin(), children.end());
  std::string code = "(";
  for (const std::string& c : children) code += c;
  code += ")";
  return code;
}

std::vector<NodeIndex> tree_centers(const Multigraph& g) {
  const int n = g.node_count();
  std::vector<int> deg(n);
  std::vector<NodeIndex> layer;
  for (NodeIndex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<NodeIndex> next;
    remaining -= static_cast<int>(layer.size());
    for (NodeIndex v : layer)
      for (EdgeIndex e : g.incident_edges(v)) {
        NodeIndex o = g.edge(e).other(v);
        if (--deg[o] == 1) next.push_back(o);
      }
    layer = std::move(next);
  }
  return layer;
}

std::string tree_code(const Multigraph& g) {
  std::vector<NodeIndex> centers = tree_centers(g);
  std::string best;
  for (NodeIndex c : centers) {
    std::string code = rooted_code(g, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

FPolynomial single_tree_f(const Multigraph& tree, const LeafSelector& selector);

FPolynomial forest_f(const Multigraph& forest, const LeafSelector& selector) {
  FPolynomial result = FPolynomial::one();
  for (const std::vector<NodeIndex>& comp : forest.components())
    result = result * single_tree_f(forest.induced_on(comp), selector);
  return result;
}

FPolynomial single_tree_f(const Multigraph& tree, const LeafSelector& selector) {
  if (tree.node_count() == 1) return FPolynomial::of({1, 1});

  static std::mutex memo_mutex;
  static std::map<std::string, FPolynomial> memo;
  std::string code;
  if (!selector) {
    code = tree_code(tree);
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(code);
    if (it != memo.end()) return it->second;
  }

  std::vector<NodeIndex> leaves;
  for (NodeIndex v = 0; v < tree.node_count(); ++v)
    if (tree.degree(v) == 1) leaves.push_back(v);
  NodeIndex leaf = selector ? selector(tree, leaves) : leaves.front();
  if (tree.degree(leaf) != 1) throw InputError("leaf selector returned a non-leaf");
  NodeIndex neighbor = tree.edge(tree.incident_edges(leaf).front()).other(leaf);

  Multigraph smaller = tree.without_node(leaf);
  NodeIndex w_in_smaller = smaller.node_index(tree.node_label(neighbor));
  int deg_w = smaller.degree(w_in_smaller);
  FPolynomial f_g = single_tree_f(smaller, selector);
  FPolynomial f_g_minus_w = forest_f(smaller.without_node(w_in_smaller), selector);
  FPolynomial result = leaf_extension(f_g, f_g_minus_w, deg_w).extended;

  if (!selector) {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(code), result);
  }
  return result;
}

}  // namespace

FPolynomial tree_f_polynomial(const Multigraph& forest, const LeafSelector& selector) {
  if (!forest.is_forest()) throw InputError("graph contains a cycle; expected a forest");
  if (forest.node_count() == 0) return FPolynomial::one();
  return forest_f(forest, selector);
}

FPolynomial path_f_polynomial(int n) {
  if (n < 1) throw InputError("path length must be at least 1");
  FPolynomial one_plus_t = FPolynomial::of({1, 1});
  FPolynomial prev = FPolynomial::of({1, 1});        // one node
  if (n == 1) return prev;
  FPolynomial curr = one_plus_t * one_plus_t * one_plus_t;  // two nodes
  for (int k = 3; k <= n; ++k) {
    FPolynomial next =
        one_plus_t * (FPolynomial::of({1, 2}) * curr - (one_plus_t * prev).scale_shift(1, 2));
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

BigInt tree_volume(const Multigraph& tree) {
  if (!tree.is_tree() || tree.edge_count() < 1)
    throw InputError("volume formula applies to trees with at least one edge");
  return big_pow(4, static_cast<unsigned long>(tree.edge_count()));
}

FPolynomial graph_f_polynomial(const Multigraph& g, const Caps& caps) {
  FPolynomial result = FPolynomial::one();
  for (const std::vector<NodeIndex>& comp : g.components()) {
    if (comp.size() == 1) {
      result = result * FPolynomial::of({1, 1});
      continue;
    }
    FaceEngine engine(g.induced_on(comp), caps);
    result = result * FaceLattice::build(engine).f_polynomial();
  }
  return result;
}

StructureReport pyramid_bipyramid_structure(const Multigraph& g, const std::string& new_leaf_label,
                                            const std::string& attach_label,
                                            const Caps& caps) {
  StructureReport report;
  NodeIndex w = g.node_index(attach_label);
  if (g.find_node(new_leaf_label))
    throw InputError("new leaf label '" + new_leaf_label + "' already names a node");
  const int deg_w = g.degree(w);

  Multigraph extended = g;
  extended.add_edge(attach_label, new_leaf_label);
  EdgeIndex leaf_edge = extended.edge_count() - 1;

  FaceEngine engine(extended, caps);
  const CosmoPolytope& poly = engine.polytope();
  FaceLattice lattice = FaceLattice::build(engine);

  Subgraph leaf_only{{extended.node_index(new_leaf_label)}, {}};
  Facet facet = engine.facet_from_subgraph(leaf_only);
  const int apex = poly.edge_dir_index(leaf_edge, extended.node_index(new_leaf_label));

  // (a) pyramid split: every face contains the apex or lies in the facet.
  std::vector<char> in_facet(poly.vertex_count(), 0);
  for (int i : facet.vertex_set) in_facet[i] = 1;
  for (const Face& face : lattice.faces()) {
    bool has_apex = std::binary_search(face.vertices.begin(), face.vertices.end(), apex);
    bool inside = std::all_of(face.vertices.begin(), face.vertices.end(),
                              [&](int i) { return in_facet[i] != 0; });
    if (!has_apex && !inside) {
      report.detail = "face neither contains the leaf mark nor lies in the leaf facet";
      report.counterexample = poly.labels_of(face.vertices);
      return report;
    }
  }

  int facet_index = lattice.find(facet.vertex_set);
  if (facet_index < 0) {
    report.detail = "leaf facet missing from the lattice";
    return report;
  }
  report.facet_f = lattice.face_f_polynomial(facet_index);

  // (b) pyramid count.
  if (!(FPolynomial::of({1, 1}) * report.facet_f == lattice.f_polynomial())) {
    report.detail = "f-polynomial is not (1+t) times the facet f-polynomial";
    return report;
  }
  // (c) bipyramid count against the leaf-extension formula.
  FPolynomial f_g = graph_f_polynomial(g, caps);
  FPolynomial f_g_minus_w = graph_f_polynomial(g.without_node(w), caps);
  if (!(leaf_extension(f_g, f_g_minus_w, deg_w).facet == report.facet_f)) {
    report.detail = "facet f-polynomial does not match the leaf-extension formula";
    return report;
  }
  report.pass = true;
  return report;
}

}  // namespace cosmoface
