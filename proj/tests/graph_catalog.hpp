// Shared builders for the small graphs the tests exercise.
#pragma once

#include <string>
#include <vector>

#include "cosmoface/multigraph.hpp"

namespace catalog {

using cosmoface::Multigraph;

inline std::string node_name(int i) { return std::string(1, static_cast<char>('a' + i)); }

/// Path on n nodes a-b-c-...
inline Multigraph path(int n) {
  Multigraph g;
  g.add_node(node_name(0));
  for (int i = 1; i < n; ++i) g.add_edge(node_name(i - 1), node_name(i));
  return g;
}

/// Cycle on n nodes.
inline Multigraph cycle(int n) {
  Multigraph g;
  for (int i = 0; i < n; ++i) g.add_edge(node_name(i), node_name((i + 1) % n));
  return g;
}

/// Star with k leaves around center "a".
inline Multigraph star(int k) {
  Multigraph g;
  g.add_node("a");
  for (int i = 1; i <= k; ++i) g.add_edge("a", node_name(i));
  return g;
}

/// Banana B_k: nodes a, b joined by k parallel edges.
inline Multigraph banana(int k) {
  Multigraph g;
  for (int i = 0; i < k; ++i) g.add_edge("a", "b");
  return g;
}

/// B_2 with a pendant edge at b.
inline Multigraph banana_pendant() {
  Multigraph g = banana(2);
  g.add_edge("b", "c");
  return g;
}

/// Two B_2's in a chain: a=b=c (parallel pairs on both links).
inline Multigraph banana_chain() {
  Multigraph g;
  g.add_edge("a", "b");
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  g.add_edge("b", "c");
  return g;
}

/// Cycle C_3 plus one pendant edge.
inline Multigraph triangle_pendant() {
  Multigraph g = cycle(3);
  g.add_edge("a", "d");
  return g;
}

/// Complete graph on n nodes.
inline Multigraph complete(int n) {
  Multigraph g;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(node_name(i), node_name(j));
  return g;
}

}  // namespace catalog
