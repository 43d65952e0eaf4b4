#pragma once

#include <functional>
#include <string>

#include "cosmoface/caps.hpp"
#include "cosmoface/fpolynomial.hpp"
#include "cosmoface/multigraph.hpp"
#include "cosmoface/polytope.hpp"

namespace cosmoface {

/// One leaf-extension step. For a graph G with attachment node w of degree
/// deg_w and the leaf-extended graph G', the facet avoiding the new leaf
/// mark satisfies
///   f_F  = (1+2t) f_G - t^{deg_w+1} (1+t) f_{G-w}
///   f_G' = (1+t) f_F.
/// Throws InternalError if f_F comes out with a negative coefficient or is
/// not a valid f-polynomial (which signals inconsistent inputs).
struct LeafExtension {
  FPolynomial facet;     // f_F
  FPolynomial extended;  // f_{G'}
};
LeafExtension leaf_extension(const FPolynomial& f_g, const FPolynomial& f_g_minus_w, int deg_w);

/// Chooses which leaf to eliminate next; receives the tree and its leaf
/// nodes (ascending) and returns one of them. Used by tests to check that
/// the recursion is independent of the elimination order.
using LeafSelector = std::function<NodeIndex(const Multigraph&, const std::vector<NodeIndex>&)>;

/// f-polynomial of the cosmological polytope of a forest, by leaf
/// recursion: a single node gives 1+t, the empty graph 1, and a disjoint
/// union multiplies component polynomials (the components' polytopes lie in
/// skew affine hulls, so the hull is a free join and faces pair up).
/// Memoized on a canonical (isomorphism-invariant) tree encoding.
FPolynomial tree_f_polynomial(const Multigraph& forest, const LeafSelector& selector = {});

/// f-polynomial of the path on n >= 1 nodes via the path recursion
/// f_{n+2} = (1+t)((1+2t) f_{n+1} - t^2 (1+t) f_n), f_1 = 1+t, f_2 = (1+t)^3.
FPolynomial path_f_polynomial(int n);

/// Normalized volume of a tree's polytope: 4^e.
BigInt tree_volume(const Multigraph& tree);

/// f-polynomial of the polytope of an arbitrary loopless multigraph:
/// product over connected components (join rule), with components holding
/// edges enumerated through their face lattices.
FPolynomial graph_f_polynomial(const Multigraph& g, const Caps& caps = {});

/// Structural verification that adding a leaf makes a pyramid over a
/// bipyramid: (a) every face of P_{G'} contains the new leaf mark or lies
/// in the facet avoiding it, (b) f_{G'} = (1+t) f_F, (c) f_F matches the
/// leaf-extension formula against f_G and f_{G-w}.
struct StructureReport {
  bool pass = false;
  std::string detail;                        // empty when pass
  FPolynomial facet_f;                       // enumerated f_F
  std::vector<std::string> counterexample;   // offending face labels, if any
};
StructureReport pyramid_bipyramid_structure(const Multigraph& g, const std::string& new_leaf_label,
                                            const std::string& attach_label,
                                            const Caps& caps = {});

}  // namespace cosmoface
