#pragma once

#include <string>

#if defined(COSMOFACE_HAVE_GMP)
#include <boost/multiprecision/gmp.hpp>
#else
#include <boost/multiprecision/cpp_int.hpp>
#endif

namespace cosmoface {

#if defined(COSMOFACE_HAVE_GMP)
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
#else
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
#endif

/// Node/edge handles are indices into a Multigraph's insertion-ordered
/// node and edge lists.
using NodeIndex = int;
using EdgeIndex = int;

BigInt binomial(long long n, long long k);
BigInt big_pow(const BigInt& base, unsigned long exp);

/// Canonical rational rendering: "p" when the denominator is 1, else "p/q"
/// with q > 0 and gcd(p,q)=1.
std::string rational_to_string(const Rational& q);

}  // namespace cosmoface
