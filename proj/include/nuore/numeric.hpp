#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace nuore {

// Exact arithmetic throughout: arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using I64 = std::int64_t;

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

// Representative of v in [0, m).
inline I64 mod_reduce(I64 v, I64 m) {
  v %= m;
  return v < 0 ? v + m : v;
}

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool is_prime_i64(I64 n) {
  if (n < 2) return false;
  for (I64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::string rat_str(const Rat& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace nuore
