#pragma once

#include <optional>
#include <vector>

#include "cosmoface/types.hpp"

namespace cosmoface {

using IntMatrix = std::vector<std::vector<BigInt>>;
using IntVector = std::vector<BigInt>;

/// Rank over Q by fraction-free (Bareiss) elimination.
int integer_rank(IntMatrix m);

/// Determinant of a square matrix, fraction-free.
BigInt integer_determinant(IntMatrix m);

/// Affine dimension of a nonempty point set: rank of the rows minus the
/// first row. A single point has affine dimension 0.
int affine_dimension(const std::vector<std::vector<int>>& points);

/// Basis of the integer kernel {x in Z^d : m x = 0}, computed by unimodular
/// column reduction. The result is a saturated lattice basis: every integer
/// solution is an integer combination of the returned vectors.
std::vector<IntVector> integer_kernel(IntMatrix m);

/// Basis of span_Q(rows) âˆ© Z^d (the saturation of the row lattice).
std::vector<IntVector> saturated_row_lattice(const IntMatrix& rows);

/// Expresses `target` as an integer combination of `basis` rows; nullopt if
/// target is outside their span or the coefficients are not integral.
std::optional<IntVector> express_in_lattice_basis(const std::vector<IntVector>& basis,
                                                  const IntVector& target);

}  // namespace cosmoface
