#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cosmoface/caps.hpp"
#include "cosmoface/types.hpp"

namespace cosmoface {

struct Edge {
  std::string id;
  NodeIndex u = -1;
  NodeIndex w = -1;

  NodeIndex other(NodeIndex v) const { return v == u ? w : u; }
  bool has_endpoint(NodeIndex v) const { return v == u || v == w; }
};

/// A connected-or-not pair (V_H, E_H): every edge of E_H has both endpoints
/// in V_H. Node and edge lists are kept sorted ascending.
struct Subgraph {
  std::vector<NodeIndex> nodes;
  std::vector<EdgeIndex> edges;

  bool operator==(const Subgraph&) const = default;
};

/// A simple cycle (v_1, e_1, v_2, ..., v_d, e_d) closing back to v_1.
/// Nodes are pairwise distinct, edges pairwise distinct, e_i joins
/// {v_i, v_{i+1}} (indices mod d). Length 2 requires a parallel pair.
struct CycleDescriptor {
  std::vector<NodeIndex> nodes;
  std::vector<EdgeIndex> edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool operator==(const CycleDescriptor&) const = default;
};

struct GraphStats {
  int edge_count = 0;
  int leaf_count = 0;
  int degree_two_count = 0;
  std::map<int, std::int64_t> cycles_by_length;
};

/// Loopless multigraph with deterministic (insertion-order) iteration.
/// Instances are immutable after construction by convention: all analysis
/// entry points take const references and the mutators are only used while
/// building a graph.
class Multigraph {
 public:
  Multigraph() = default;

  NodeIndex add_node(const std::string& label);
  /// Adds an edge between two (auto-declared) node labels. An empty edge id
  /// picks the first free "e<k>" name. Loops and duplicate ids are rejected.
  EdgeIndex add_edge(const std::string& u_label, const std::string& w_label,
                     const std::string& edge_id = "");

  int node_count() const { return static_cast<int>(node_labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& node_label(NodeIndex v) const;
  const Edge& edge(EdgeIndex e) const;
  const std::vector<Edge>& edges() const { return edges_; }

  NodeIndex node_index(const std::string& label) const;  // throws InputError
  std::optional<NodeIndex> find_node(const std::string& label) const;
  std::optional<EdgeIndex> find_edge(const std::string& id) const;

  int degree(NodeIndex v) const;
  const std::vector<EdgeIndex>& incident_edges(NodeIndex v) const;
  std::vector<NodeIndex> isolated_nodes() const;
  bool has_isolated_nodes() const;

  bool is_connected() const;  // empty and single-node graphs count as connected
  bool is_simple() const;     // no parallel edges
  bool is_forest() const;
  bool is_tree() const;

  /// Node partition into connected components, each sorted ascending;
  /// components ordered by smallest member.
  std::vector<std::vector<NodeIndex>> components() const;

  /// Copy with one node (and its incident edges) removed; labels and the
  /// relative order of the survivors are preserved.
  Multigraph without_node(NodeIndex v) const;
  /// Restriction to a node subset plus all edges inside it.
  Multigraph induced_on(const std::vector<NodeIndex>& nodes) const;

  /// All connected subgraphs (V_H, E_H): the single-node subgraphs in node
  /// order, then connected edge sets ordered by (size, lexicographic edge
  /// list). A single node with no edges is connected.
  std::vector<Subgraph> connected_subgraphs(const Caps& caps = {}) const;

  /// Every vertex-disjoint simple cycle exactly once up to rotation and
  /// reflection. Canonical form: starts at the smallest node; for length >= 3
  /// the second node is smaller than the last, for length 2 the first edge
  /// index is smaller. Includes 2-cycles from parallel edge pairs.
  std::vector<CycleDescriptor> simple_cycles(const Caps& caps = {}) const;

  /// (e, l, v2, Delta) of the counting formulas; Delta[i] counts the simple
  /// cycles of length i.
  GraphStats stats(const Caps& caps = {}) const;

  /// Validates an externally constructed cycle against this graph.
  void validate_cycle(const CycleDescriptor& cycle) const;
  /// Validates that (V_H, E_H) is a well-formed connected subgraph.
  void validate_connected_subgraph(const Subgraph& h) const;

 private:
  std::vector<std::string> node_labels_;
  std::map<std::string, NodeIndex> node_by_label_;
  std::vector<Edge> edges_;
  std::map<std::string, EdgeIndex> edge_by_id_;
  std::vector<std::vector<EdgeIndex>> incidence_;
};

}  // namespace cosmoface
