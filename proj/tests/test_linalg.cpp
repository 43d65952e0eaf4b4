#include "cosmoface/linalg.hpp"
#include "doctest.h"

using namespace cosmoface;

namespace {

IntMatrix rows(std::initializer_list<std::initializer_list<long long>> data) {
  IntMatrix m;
  for (const auto& row : data) {
    IntVector r;
    for (long long x : row) r.emplace_back(x);
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

TEST_CASE("rank and determinant") {
  CHECK(integer_rank(rows({{1, 2}, {2, 4}})) == 1);
  CHECK(integer_rank(rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(integer_determinant(rows({{2, 0}, {0, 3}})) == 6);
  CHECK(integer_determinant(rows({{0, 1}, {1, 0}})) == -1);
  CHECK(integer_determinant(rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  CHECK(integer_determinant(rows({{3, -1, 2}, {0, 4, 1}, {5, 2, -2}})) == -75);
}

TEST_CASE("affine dimension of point sets") {
  CHECK(affine_dimension({{1, 1, -1}, {1, -1, 1}, {-1, 1, 1}}) == 2);
  CHECK(affine_dimension({{5, 7}}) == 0);
  CHECK(affine_dimension({{0, 0}, {1, 1}, {2, 2}, {3, 3}}) == 1);
}

TEST_CASE("integer kernel is saturated") {
  // Kernel of (2 4): generated by (2,-1), not (4,-2).
  auto k = integer_kernel(rows({{2, 4}}));
  REQUIRE(k.size() == 1);
  BigInt g = gcd(k[0][0], k[0][1]);
  CHECK((g == 1 || g == -1));
  CHECK(2 * k[0][0] + 4 * k[0][1] == 0);

  // Sum-zero sublattice of Z^3.
  auto k2 = integer_kernel(rows({{1, 1, 1}}));
  REQUIRE(k2.size() == 2);
  for (const auto& v : k2) CHECK(v[0] + v[1] + v[2] == 0);
  // (1,0,-1) must be an integer combination of the basis.
  auto alpha = express_in_lattice_basis(k2, {BigInt(1), BigInt(0), BigInt(-1)});
  REQUIRE(alpha.has_value());

  CHECK(integer_kernel(rows({{1, 0}, {0, 1}})).empty());
}

TEST_CASE("saturated row lattice recovers primitive vectors") {
  // Row (2,2) spans the line x=y; its saturation contains (1,1).
  auto basis = saturated_row_lattice(rows({{2, 2}}));
  REQUIRE(basis.size() == 1);
  auto alpha = express_in_lattice_basis(basis, {BigInt(1), BigInt(1)});
  REQUIRE(alpha.has_value());
  CHECK(abs((*alpha)[0]) == 1);

  // Full-rank rows saturate to all of Z^2.
  auto full = saturated_row_lattice(rows({{1, 0}, {1, 3}}));
  REQUIRE(full.size() == 2);
  auto unit = express_in_lattice_basis(full, {BigInt(0), BigInt(1)});
  REQUIRE(unit.has_value());
}

TEST_CASE("express_in_lattice_basis rejects outside targets") {
  auto basis = saturated_row_lattice(rows({{1, 1, 0}}));
  CHECK(!express_in_lattice_basis(basis, {BigInt(0), BigInt(0), BigInt(1)}).has_value());
}
