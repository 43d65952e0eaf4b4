#include "cosmoface/types.hpp"

#include "cosmoface/errors.hpp"

namespace cosmoface {

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;  // exact at every step
  }
  return result;
}

BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt result = 1, b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

std::string rational_to_string(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace cosmoface
