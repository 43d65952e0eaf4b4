#include "cosmoface/counting.hpp"

#include <algorithm>
#include <bit>

#include "cosmoface/errors.hpp"

namespace cosmoface {

namespace {

void require_no_isolated(const Multigraph& g) {
  if (g.has_isolated_nodes())
    throw InputError("counting formulas require a graph without isolated nodes");
}

// Parallel-pair count (the number of 2-cycles), without cycle enumeration.
std::int64_t parallel_pairs(const Multigraph& g) {
  std::map<std::pair<NodeIndex, NodeIndex>, std::int64_t> mult;
  for (const Edge& e : g.edges()) {
    auto key = std::minmax(e.u, e.w);
    ++mult[{key.first, key.second}];
  }
  std::int64_t pairs = 0;
  for (const auto& [key, m] : mult) pairs += m * (m - 1) / 2;
  return pairs;
}

std::int64_t leaf_count(const Multigraph& g) {
  std::int64_t l = 0;
  for (NodeIndex v = 0; v < g.node_count(); ++v)
    if (g.degree(v) == 1) ++l;
  return l;
}

// Triangle count of a simple graph.
std::int64_t triangle_count(const Multigraph& g) {
  std::int64_t t = 0;
  const int n = g.node_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) adj[e.u][e.w] = adj[e.w][e.u] = 1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (adj[a][b])
        for (int c = b + 1; c < n; ++c)
          if (adj[a][c] && adj[b][c]) ++t;
  return t;
}

}  // namespace

BigInt count_edges(const Multigraph& g) {
  require_no_isolated(g);
  const std::int64_t e = g.edge_count();
  return binomial(3 * e, 2) - 2 * e + leaf_count(g) - 2 * parallel_pairs(g);
}

BigInt count_2faces_simple(const Multigraph& g) {
  require_no_isolated(g);
  if (!g.is_simple())
    throw InputError("the 2-face formula applies to simple graphs only");
  const std::int64_t e = g.edge_count();
  const std::int64_t l = leaf_count(g);
  std::int64_t v2 = 0;
  for (NodeIndex v = 0; v < g.node_count(); ++v)
    if (g.degree(v) == 2) ++v2;
  return 27 * binomial(e, 3) + BigInt(3 * (e + l) * (e - 1)) + v2 - 2 * triangle_count(g);
}

BigInt banana_2faces(int k) {
  if (k < 1) throw InputError("banana graphs need at least one edge");
  if (k == 1) return 1;
  if (k == 2) return 5;
  return 15 * binomial(k, 3) + 3 * binomial(k, 2);
}

BigInt cycle_simplex_count(int n, int k) {
  if (n < 3) throw InputError("cycle graphs need at least 3 nodes");
  if (k < 1 || k > 2 * n)
    throw InputError("simplex size k must satisfy 1 <= k <= 2n");
  BigInt total = 0;
  for (int i = 0; 2 * i <= k; ++i)
    total += binomial(n, i) * binomial(n - i, k - 2 * i) * big_pow(3, k - 2 * i);
  total -= 2 * binomial(n, k - n);
  if (k == 2 * n) total += 1;  // see header: both-orientation clique double-subtracted
  return total;
}

BigInt cycle_simplex_total(int n) {
  if (n < 3) throw InputError("cycle graphs need at least 3 nodes");
  return big_pow(5, n) - big_pow(2, n + 1);
}

BigInt unicyclic_simplex_total(const Multigraph& g) {
  if (!g.is_connected() || g.edge_count() < 1)
    throw InputError("unicyclic formula requires a connected graph with edges");
  std::vector<CycleDescriptor> cycles = g.simple_cycles();
  if (cycles.empty()) throw InputError("graph is acyclic; unicyclic formula needs one cycle");
  if (cycles.size() > 1)
    throw InputError("graph has " + std::to_string(cycles.size()) +
                     " cycles; unicyclic formula needs exactly one");
  const int d = cycles.front().length();
  if (d <= 2) throw InputError("unicyclic formula requires cycle length greater than 2");
  const std::int64_t e = g.edge_count();
  const std::int64_t l = leaf_count(g);
  return big_pow(6, l) * big_pow(5, e - l - d) *
             (big_pow(5, d) - big_pow(2, d + 1) + 1) -
         1;
}

namespace {

struct CliqueCounter {
  const FaceEngine& engine;
  int k_max;
  std::vector<std::uint64_t> adj;           // neighbor masks
  std::vector<std::vector<std::uint64_t>> orientations_with;  // per vertex
  std::map<int, BigInt>& counts;
  std::int64_t enumerated = 0;

  void extend(std::uint64_t clique, int size, std::uint64_t candidates) {
    while (candidates) {
      const int v = std::countr_zero(candidates);
      const std::uint64_t bit = std::uint64_t{1} << v;
      candidates &= ~bit;
      const std::uint64_t grown = clique | bit;
      bool marked = false;
      for (std::uint64_t orientation : orientations_with[v])
        if ((orientation & ~grown) == 0) {
          marked = true;
          break;
        }
      if (marked) continue;  // every superset keeps the marked cycle
      if (++enumerated > engine.caps().max_faces)
        throw CapError("simplex enumeration exceeded cap of " +
                       std::to_string(engine.caps().max_faces));
      counts[size + 1] += 1;
      if (size + 1 < k_max) extend(grown, size + 1, candidates & adj[v]);
    }
  }
};

}  // namespace

std::map<int, BigInt> simplex_enumerate(const FaceEngine& engine, int k_max) {
  const CosmoPolytope& poly = engine.polytope();
  const int n = poly.vertex_count();
  if (n > 64)
    throw CapError("simplex enumeration supports at most 64 polytope vertices");
  if (k_max < 1) throw InputError("k_max must be at least 1");
  k_max = std::min(k_max, n);

  std::map<int, BigInt> counts;
  for (int k = 1; k <= k_max; ++k) counts[k] = 0;

  CliqueCounter counter{engine, k_max, {}, {}, counts};
  counter.adj.assign(n, 0);
  const EdgeGraph& gamma = engine.edge_graph();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (gamma.is_adjacent(a, b)) counter.adj[a] |= std::uint64_t{1} << b;

  counter.orientations_with.assign(n, {});
  for (const auto& [fwd, rev] : engine.cycle_orientations()) {
    for (const FaceSet* marks : {&fwd, &rev}) {
      std::uint64_t mask = 0;
      for (int i : *marks) mask |= std::uint64_t{1} << i;
      for (int i : *marks) counter.orientations_with[i].push_back(mask);
    }
  }

  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  counter.extend(0, 0, all);
  return counts;
}

}  // namespace cosmoface
