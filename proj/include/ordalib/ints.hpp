// Exact integer and rational arithmetic used throughout the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ordalib {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sign_of(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

inline Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Binomial coefficient C(e, k) for arbitrary integer e and k >= 0,
// via the falling-factorial formula; works for negative e.
inline Int binomial(const Int& e, long long k) {
  Int num = 1;
  Int den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= (e - i);
    den *= (i + 1);
  }
  return num / den;
}

}  // namespace ordalib
