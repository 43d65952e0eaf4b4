#pragma once

#include <map>

#include "cosmoface/face_engine.hpp"
#include "cosmoface/types.hpp"

namespace cosmoface {

/// Number of edges of P_G: C(3e,2) - 2e + l - 2*Delta_2.
BigInt count_edges(const Multigraph& g);

/// Number of proper 2-faces of P_G for a simple graph:
/// 27 C(e,3) + 3(e+l)(e-1) + v_2 - 2*Delta_3. Rejects parallel edges.
BigInt count_2faces_simple(const Multigraph& g);

/// 2-face count of the banana graph B_k (two nodes, k parallel edges):
/// 1, 5, then 15 C(k,3) + 3 C(k,2) for k >= 3.
BigInt banana_2faces(int k);

/// Number of (k-1)-dimensional simplex faces of P_{C_n} for 1 <= k <= 2n:
///   sum_i C(n,i) C(n-i,k-2i) 3^{k-2i}  -  2 C(n,k-n)  [+1 when k = 2n].
/// The k = 2n term corrects a double subtraction: the single clique
/// containing both full cycle orientations is removed twice by 2 C(n,n),
/// and brute-force enumeration pins its true simplex count at 0.
BigInt cycle_simplex_count(int n, int k);

/// Total number of nonempty simplex faces of P_{C_n}: 5^n - 2^{n+1}.
BigInt cycle_simplex_total(int n);

/// Simplex face total for a connected graph with exactly one cycle of
/// length d > 2: 6^l 5^{e-l-d} (5^d - 2^{d+1} + 1) - 1.
BigInt unicyclic_simplex_total(const Multigraph& g);

/// Per-size counts {k -> #simplex faces on k vertices} for k <= k_max, by
/// incremental clique extension over the edge graph with the marked-cycle
/// filter pruning each branch.
std::map<int, BigInt> simplex_enumerate(const FaceEngine& engine, int k_max);

}  // namespace cosmoface
