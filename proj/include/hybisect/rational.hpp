#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hybisect {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k) in arbitrary precision; 0 outside the valid range.
inline BigInt binom_big(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= BigInt(n - k + i);
    r /= BigInt(i);
  }
  return r;
}

// C(n, k) as long long; throws if the value does not fit.
inline long long binom_ll(long long n, long long k) {
  BigInt b = binom_big(n, k);
  if (b > BigInt(std::numeric_limits<long long>::max()))
    throw std::overflow_error("binomial coefficient exceeds 64-bit range");
  return b.convert_to<long long>();
}

inline Rat rat(long long num, long long den = 1) { return Rat(BigInt(num), BigInt(den)); }

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

inline BigInt bigint_pow(BigInt base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

inline Rat rat_pow(const Rat& base, int exp) {
  Rat r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace hybisect
