#pragma once

#include <string>
#include <vector>

#include "cosmoface/types.hpp"

namespace cosmoface {

/// Univariate polynomial with big-integer coefficients, used for
/// f-polynomials f_P(t) = sum_{i=-1}^{dim P} f_i t^{i+1}. Coefficient k
/// holds f_{k-1}. Plain polynomial arithmetic is exposed so intermediate
/// values (which need not be f-polynomials) can be formed freely.
class FPolynomial {
 public:
  FPolynomial() : coeffs_{0} {}
  explicit FPolynomial(std::vector<BigInt> coeffs);
  static FPolynomial zero() { return FPolynomial(); }
  static FPolynomial one() { return FPolynomial({1}); }
  /// c0 + c1 t + ... from a brace list of machine ints.
  static FPolynomial of(std::initializer_list<long long> coeffs);

  int degree() const;  // degree of the zero polynomial is -1
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  FPolynomial operator+(const FPolynomial& o) const;
  FPolynomial operator-(const FPolynomial& o) const;
  FPolynomial operator*(const FPolynomial& o) const;
  bool operator==(const FPolynomial& o) const { return coeffs_ == o.coeffs_; }

  /// this * c * t^power.
  FPolynomial scale_shift(const BigInt& c, int power) const;

  BigInt evaluate(const BigInt& t) const;
  BigInt total() const { return evaluate(1); }

  bool has_negative_coefficient() const;
  /// Structural checks for a polytope f-polynomial: nonnegative
  /// coefficients, constant term 1, leading coefficient 1, f(-1) = 0.
  bool is_valid_f_polynomial() const;

  std::vector<std::string> coeff_strings() const;
  std::string to_string() const;  // "1 + 3t + 3t^2 + t^3"

 private:
  std::vector<BigInt> coeffs_;  // normalized: no trailing zeros (except [0])
  void normalize();
};

}  // namespace cosmoface
