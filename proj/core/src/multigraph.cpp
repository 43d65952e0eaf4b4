#include "cosmoface/multigraph.hpp"

#include <algorithm>
#include <set>

#include "cosmoface/errors.hpp"

namespace cosmoface {

NodeIndex Multigraph::add_node(const std::string& label) {
  if (label.empty()) throw InputError("node label must be nonempty");
  if (node_by_label_.count(label))
    throw InputError("duplicate node label '" + label + "'");
  NodeIndex v = node_count();
  node_labels_.push_back(label);
  node_by_label_.emplace(label, v);
  incidence_.emplace_back();
  return v;
}

EdgeIndex Multigraph::add_edge(const std::string& u_label, const std::string& w_label,
                               const std::string& edge_id) {
  if (u_label == w_label)
    throw InputError("loop edge at node '" + u_label + "' is not allowed");
  auto declare = [&](const std::string& l) {
    auto it = node_by_label_.find(l);
    return it != node_by_label_.end() ? it->second : add_node(l);
  };
  NodeIndex u = declare(u_label);
  NodeIndex w = declare(w_label);

  std::string id = edge_id;
  if (id.empty()) {
    // First free auto name; keeps ids stable under appends.
    for (int k = edge_count() + 1;; ++k) {
      std::string candidate = "e" + std::to_string(k);
      if (!edge_by_id_.count(candidate)) {
        id = candidate;
        break;
      }
    }
  } else if (edge_by_id_.count(id)) {
    throw InputError("duplicate edge id '" + id + "'");
  }

  EdgeIndex e = edge_count();
  edges_.push_back(Edge{id, u, w});
  edge_by_id_.emplace(id, e);
  incidence_[u].push_back(e);
  incidence_[w].push_back(e);
  return e;
}

const std::string& Multigraph::node_label(NodeIndex v) const {
  if (v < 0 || v >= node_count()) throw InputError("node index out of range");
  return node_labels_[v];
}

const Edge& Multigraph::edge(EdgeIndex e) const {
  if (e < 0 || e >= edge_count()) throw InputError("edge index out of range");
  return edges_[e];
}

NodeIndex Multigraph::node_index(const std::string& label) const {
  auto it = node_by_label_.find(label);
  if (it == node_by_label_.end()) throw InputError("unknown node '" + label + "'");
  return it->second;
}

std::optional<NodeIndex> Multigraph::find_node(const std::string& label) const {
  auto it = node_by_label_.find(label);
  if (it == node_by_label_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Multigraph::find_edge(const std::string& id) const {
  auto it = edge_by_id_.find(id);
  if (it == edge_by_id_.end()) return std::nullopt;
  return it->second;
}

int Multigraph::degree(NodeIndex v) const {
  return static_cast<int>(incident_edges(v).size());
}

const std::vector<EdgeIndex>& Multigraph::incident_edges(NodeIndex v) const {
  if (v < 0 || v >= node_count()) throw InputError("node index out of range");
  return incidence_[v];
}

std::vector<NodeIndex> Multigraph::isolated_nodes() const {
  std::vector<NodeIndex> out;
  for (NodeIndex v = 0; v < node_count(); ++v)
    if (incidence_[v].empty()) out.push_back(v);
  return out;
}

bool Multigraph::has_isolated_nodes() const {
  for (NodeIndex v = 0; v < node_count(); ++v)
    if (incidence_[v].empty()) return true;
  return false;
}

std::vector<std::vector<NodeIndex>> Multigraph::components() const {
  std::vector<int> comp(node_count(), -1);
  std::vector<std::vector<NodeIndex>> out;
  for (NodeIndex s = 0; s < node_count(); ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<NodeIndex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      NodeIndex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (EdgeIndex e : incidence_[v]) {
        NodeIndex o = edges_[e].other(v);
        if (comp[o] < 0) {
          comp[o] = id;
          stack.push_back(o);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool Multigraph::is_connected() const { return components().size() <= 1; }

bool Multigraph::is_simple() const {
  std::set<std::pair<NodeIndex, NodeIndex>> seen;
  for (const Edge& e : edges_) {
    auto key = std::minmax(e.u, e.w);
    if (!seen.insert({key.first, key.second}).second) return false;
  }
  return true;
}

bool Multigraph::is_forest() const {
  // Union-find: an edge inside one component closes a cycle.
  std::vector<int> parent(node_count());
  for (int i = 0; i < node_count(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges_) {
    int a = find(e.u), b = find(e.w);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool Multigraph::is_tree() const { return is_forest() && is_connected() && node_count() > 0; }

Multigraph Multigraph::without_node(NodeIndex v) const {
  if (v < 0 || v >= node_count()) throw InputError("node index out of range");
  Multigraph g;
  for (NodeIndex u = 0; u < node_count(); ++u)
    if (u != v) g.add_node(node_labels_[u]);
  for (const Edge& e : edges_)
    if (e.u != v && e.w != v) g.add_edge(node_labels_[e.u], node_labels_[e.w], e.id);
  return g;
}

Multigraph Multigraph::induced_on(const std::vector<NodeIndex>& nodes) const {
  std::vector<char> keep(node_count(), 0);
  Multigraph g;
  for (NodeIndex v : nodes) {
    if (v < 0 || v >= node_count()) throw InputError("node index out of range");
    keep[v] = 1;
  }
  for (NodeIndex v = 0; v < node_count(); ++v)
    if (keep[v]) g.add_node(node_labels_[v]);
  for (const Edge& e : edges_)
    if (keep[e.u] && keep[e.w]) g.add_edge(node_labels_[e.u], node_labels_[e.w], e.id);
  return g;
}

namespace {

// Enumerates every connected edge set whose minimum edge index is `seed`,
// each exactly once: candidates are consumed in order, and a candidate once
// skipped stays excluded for the whole subtree.
void grow_edge_sets(const Multigraph& g, const std::vector<std::vector<EdgeIndex>>& edge_adj,
                    EdgeIndex seed, std::vector<EdgeIndex>& current, std::vector<char>& in_set,
                    std::vector<char>& banned, const std::vector<EdgeIndex>& frontier,
                    std::vector<std::vector<EdgeIndex>>& out, std::int64_t cap) {
  if (static_cast<std::int64_t>(out.size()) >= cap)
    throw CapError("connected subgraph enumeration exceeded cap of " + std::to_string(cap));
  out.push_back(current);
  std::vector<EdgeIndex> taken;
  for (size_t i = 0; i < frontier.size(); ++i) {
    EdgeIndex f = frontier[i];
    if (banned[f] || in_set[f]) continue;
    // Branch: include f; the remaining frontier entries stay available.
    in_set[f] = 1;
    current.push_back(f);
    std::vector<EdgeIndex> next(frontier.begin() + i + 1, frontier.end());
    for (EdgeIndex n : edge_adj[f])
      if (n > seed && !in_set[n] && !banned[n]) next.push_back(n);
    grow_edge_sets(g, edge_adj, seed, current, in_set, banned, next, out, cap);
    current.pop_back();
    in_set[f] = 0;
    // Exclude f from every later branch at this level and below.
    banned[f] = 1;
    taken.push_back(f);
  }
  for (EdgeIndex f : taken) banned[f] = 0;
}

}  // namespace

std::vector<Subgraph> Multigraph::connected_subgraphs(const Caps& caps) const {
  std::vector<Subgraph> result;
  for (NodeIndex v = 0; v < node_count(); ++v) result.push_back(Subgraph{{v}, {}});

  // Edge adjacency: edges sharing a node.
  std::vector<std::vector<EdgeIndex>> edge_adj(edge_count());
  for (EdgeIndex e = 0; e < edge_count(); ++e) {
    for (NodeIndex v : {edges_[e].u, edges_[e].w})
      for (EdgeIndex f : incidence_[v])
        if (f != e) edge_adj[e].push_back(f);
    std::sort(edge_adj[e].begin(), edge_adj[e].end());
    edge_adj[e].erase(std::unique(edge_adj[e].begin(), edge_adj[e].end()), edge_adj[e].end());
  }

  std::vector<std::vector<EdgeIndex>> edge_sets;
  std::vector<char> in_set(edge_count(), 0), banned(edge_count(), 0);
  for (EdgeIndex seed = 0; seed < edge_count(); ++seed) {
    std::vector<EdgeIndex> current{seed};
    in_set[seed] = 1;
    std::vector<EdgeIndex> frontier;
    for (EdgeIndex n : edge_adj[seed])
      if (n > seed) frontier.push_back(n);
    std::int64_t remaining = caps.max_subgraphs - static_cast<std::int64_t>(result.size());
    grow_edge_sets(*this, edge_adj, seed, current, in_set, banned, frontier, edge_sets,
                   remaining < 0 ? 0 : remaining);
    in_set[seed] = 0;
  }

  std::sort(edge_sets.begin(), edge_sets.end(),
            [](const std::vector<EdgeIndex>& a, const std::vector<EdgeIndex>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (auto& es : edge_sets) {
    std::sort(es.begin(), es.end());
    std::vector<NodeIndex> nodes;
    for (EdgeIndex e : es) {
      nodes.push_back(edges_[e].u);
      nodes.push_back(edges_[e].w);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    result.push_back(Subgraph{std::move(nodes), std::move(es)});
  }
  if (static_cast<std::int64_t>(result.size()) > caps.max_subgraphs)
    throw CapError("connected subgraph enumeration exceeded cap of " +
                   std::to_string(caps.max_subgraphs));
  return result;
}

namespace {

void cycle_dfs(const Multigraph& g, NodeIndex anchor, std::vector<NodeIndex>& path_nodes,
               std::vector<EdgeIndex>& path_edges, std::vector<char>& on_path_node,
               std::vector<char>& on_path_edge, std::vector<CycleDescriptor>& out,
               std::int64_t cap) {
  NodeIndex current = path_nodes.back();
  for (EdgeIndex f : g.incident_edges(current)) {
    if (on_path_edge[f]) continue;
    NodeIndex other = g.edge(f).other(current);
    if (other == anchor) {
      if (path_edges.empty()) continue;  // needs >= 2 edges to close
      int d = static_cast<int>(path_edges.size()) + 1;
      bool canonical;
      if (d == 2) {
        canonical = path_edges[0] < f;  // parallel pair listed once
      } else {
        canonical = path_nodes[1] < path_nodes.back();  // one direction only
      }
      if (canonical) {
        if (static_cast<std::int64_t>(out.size()) >= cap)
          throw CapError("cycle enumeration exceeded cap of " + std::to_string(cap));
        CycleDescriptor c;
        c.nodes = path_nodes;
        c.edges = path_edges;
        c.edges.push_back(f);
        out.push_back(std::move(c));
      }
    } else if (other > anchor && !on_path_node[other]) {
      path_nodes.push_back(other);
      path_edges.push_back(f);
      on_path_node[other] = 1;
      on_path_edge[f] = 1;
      cycle_dfs(g, anchor, path_nodes, path_edges, on_path_node, on_path_edge, out, cap);
      on_path_edge[f] = 0;
      on_path_node[other] = 0;
      path_edges.pop_back();
      path_nodes.pop_back();
    }
  }
}

}  // namespace

std::vector<CycleDescriptor> Multigraph::simple_cycles(const Caps& caps) const {
  std::vector<CycleDescriptor> out;
  std::vector<char> on_node(node_count(), 0), on_edge(edge_count(), 0);
  for (NodeIndex anchor = 0; anchor < node_count(); ++anchor) {
    std::vector<NodeIndex> path_nodes{anchor};
    std::vector<EdgeIndex> path_edges;
    on_node[anchor] = 1;
    cycle_dfs(*this, anchor, path_nodes, path_edges, on_node, on_edge, out, caps.max_cycles);
    on_node[anchor] = 0;
  }
  return out;
}

GraphStats Multigraph::stats(const Caps& caps) const {
  GraphStats s;
  s.edge_count = edge_count();
  for (NodeIndex v = 0; v < node_count(); ++v) {
    int d = degree(v);
    if (d == 1) ++s.leaf_count;
    if (d == 2) ++s.degree_two_count;
  }
  for (const CycleDescriptor& c : simple_cycles(caps)) ++s.cycles_by_length[c.length()];
  return s;
}

void Multigraph::validate_cycle(const CycleDescriptor& cycle) const {
  int d = cycle.length();
  if (d < 2 || static_cast<int>(cycle.nodes.size()) != d)
    throw InputError("cycle must alternate d >= 2 nodes and edges");
  std::set<NodeIndex> nodes(cycle.nodes.begin(), cycle.nodes.end());
  std::set<EdgeIndex> edges(cycle.edges.begin(), cycle.edges.end());
  if (static_cast<int>(nodes.size()) != d) throw InputError("cycle nodes must be distinct");
  if (static_cast<int>(edges.size()) != d) throw InputError("cycle edges must be distinct");
  for (int i = 0; i < d; ++i) {
    const Edge& e = edge(cycle.edges[i]);
    NodeIndex a = cycle.nodes[i], b = cycle.nodes[(i + 1) % d];
    if (!((e.u == a && e.w == b) || (e.u == b && e.w == a)))
      throw InputError("cycle edge '" + e.id + "' does not join consecutive cycle nodes");
  }
}

void Multigraph::validate_connected_subgraph(const Subgraph& h) const {
  if (h.nodes.empty()) throw InputError("subgraph must have at least one node");
  std::set<NodeIndex> nodes(h.nodes.begin(), h.nodes.end());
  if (nodes.size() != h.nodes.size()) throw InputError("subgraph nodes must be distinct");
  for (NodeIndex v : h.nodes)
    if (v < 0 || v >= node_count()) throw InputError("subgraph node out of range");
  for (EdgeIndex e : h.edges) {
    if (e < 0 || e >= edge_count()) throw InputError("subgraph edge out of range");
    if (!nodes.count(edges_[e].u) || !nodes.count(edges_[e].w))
      throw InputError("subgraph edge '" + edges_[e].id + "' leaves the node set");
  }
  // Connectivity of the pair (V_H, E_H).
  std::map<NodeIndex, std::vector<NodeIndex>> adj;
  for (EdgeIndex e : h.edges) {
    adj[edges_[e].u].push_back(edges_[e].w);
    adj[edges_[e].w].push_back(edges_[e].u);
  }
  std::set<NodeIndex> seen{h.nodes.front()};
  std::vector<NodeIndex> stack{h.nodes.front()};
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    for (NodeIndex o : adj[v])
      if (seen.insert(o).second) stack.push_back(o);
  }
  if (seen.size() != nodes.size()) throw InputError("subgraph is not connected");
}

}  // namespace cosmoface
