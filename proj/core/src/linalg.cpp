#include "cosmoface/linalg.hpp"

#include <algorithm>
#include <utility>

#include "cosmoface/errors.hpp"

namespace cosmoface {

namespace {

// Bareiss elimination; returns the rank and, if `det_out` is given and the
// matrix is square, fills the determinant (with sign).
int bareiss(IntMatrix& m, BigInt* det_out) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  BigInt prev_pivot = 1;
  int sign = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) {
      std::swap(m[pivot], m[rank]);
      sign = -sign;
    }
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev_pivot;
      }
      m[r][col] = 0;
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  if (det_out) {
    if (rank < rows)
      *det_out = 0;
    else
      *det_out = sign > 0 ? prev_pivot : -prev_pivot;
  }
  return rank;
}

}  // namespace

int integer_rank(IntMatrix m) { return bareiss(m, nullptr); }

BigInt integer_determinant(IntMatrix m) {
  if (m.empty()) return 1;
  if (m.size() != m[0].size()) throw InternalError("determinant of a non-square matrix");
  BigInt det;
  bareiss(m, &det);
  return det;
}

int affine_dimension(const std::vector<std::vector<int>>& points) {
  if (points.empty()) throw InputError("affine dimension of an empty point set");
  IntMatrix diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    IntVector row(points[i].size());
    for (size_t c = 0; c < points[i].size(); ++c) row[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(row));
  }
  return integer_rank(std::move(diffs));
}

std::vector<IntVector> integer_kernel(IntMatrix m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  if (cols == 0) return {};

  // Unimodular column operations reduce m to column echelon form; the same
  // operations applied to the identity track a basis of Z^cols, and columns
  // that end up zero in m form the kernel basis.
  IntMatrix u(cols, IntVector(cols, 0));
  for (int i = 0; i < cols; ++i) u[i][i] = 1;

  auto col_swap = [&](int a, int b) {
    for (int r = 0; r < rows; ++r) std::swap(m[r][a], m[r][b]);
    for (int r = 0; r < cols; ++r) std::swap(u[r][a], u[r][b]);
  };
  auto col_addmul = [&](int dst, int src, const BigInt& q) {
    if (q == 0) return;
    for (int r = 0; r < rows; ++r) m[r][dst] += q * m[r][src];
    for (int r = 0; r < cols; ++r) u[r][dst] += q * u[r][src];
  };

  int lead = 0;
  for (int row = 0; row < rows && lead < cols; ++row) {
    // Euclidean reduction across columns lead..cols-1 in this row.
    while (true) {
      int best = -1;
      for (int c = lead; c < cols; ++c) {
        if (m[row][c] == 0) continue;
        if (best < 0 || abs(m[row][c]) < abs(m[row][best])) best = c;
      }
      if (best < 0) break;  // row already zero on the tail
      if (best != lead) col_swap(best, lead);
      bool cleared = true;
      for (int c = lead + 1; c < cols; ++c) {
        if (m[row][c] == 0) continue;
        BigInt q = m[row][c] / m[row][lead];  // truncated division
        col_addmul(c, lead, -q);
        if (m[row][c] != 0) cleared = false;
      }
      if (cleared) {
        ++lead;
        break;
      }
    }
  }

  std::vector<IntVector> kernel;
  for (int c = 0; c < cols; ++c) {
    bool zero = true;
    for (int r = 0; r < rows; ++r)
      if (m[r][c] != 0) {
        zero = false;
        break;
      }
    if (!zero) continue;
    IntVector v(cols);
    for (int r = 0; r < cols; ++r) v[r] = u[r][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<IntVector> saturated_row_lattice(const IntMatrix& rows) {
  // span(rows) âˆ© Z^d equals the integer kernel of the forms vanishing on the
  // span, which are themselves the integer kernel of the row matrix.
  std::vector<IntVector> orth = integer_kernel(rows);
  if (rows.empty()) return {};
  const int d = static_cast<int>(rows[0].size());
  if (orth.empty()) {
    // Full span: the standard basis.
    std::vector<IntVector> basis;
    for (int i = 0; i < d; ++i) {
      IntVector v(d, 0);
      v[i] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return integer_kernel(IntMatrix(orth.begin(), orth.end()));
}

std::optional<IntVector> express_in_lattice_basis(const std::vector<IntVector>& basis,
                                                  const IntVector& target) {
  const int r = static_cast<int>(basis.size());
  const int d = static_cast<int>(target.size());
  // Solve alpha^T B = target by rational elimination on B^T | target.
  std::vector<std::vector<Rational>> aug(d, std::vector<Rational>(r + 1));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < r; ++j) aug[i][j] = Rational(basis[j][i]);
    aug[i][r] = Rational(target[i]);
  }
  std::vector<int> pivot_row(r, -1);
  int row = 0;
  for (int col = 0; col < r && row < d; ++col) {
    int p = -1;
    for (int i = row; i < d; ++i)
      if (aug[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(aug[p], aug[row]);
    Rational inv = aug[row][col];
    for (int c = col; c <= r; ++c) aug[row][c] /= inv;
    for (int i = 0; i < d; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rational f = aug[i][col];
      for (int c = col; c <= r; ++c) aug[i][c] -= f * aug[row][c];
    }
    pivot_row[col] = row;
    ++row;
  }
  // Inconsistent rows mean target is outside the span.
  for (int i = row; i < d; ++i)
    if (aug[i][r] != 0) return std::nullopt;
  IntVector alpha(r, 0);
  for (int col = 0; col < r; ++col) {
    if (pivot_row[col] < 0) continue;
    const Rational& val = aug[pivot_row[col]][r];
    if (denominator(val) != 1) return std::nullopt;
    alpha[col] = numerator(val);
  }
  return alpha;
}

}  // namespace cosmoface
