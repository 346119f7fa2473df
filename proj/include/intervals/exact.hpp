#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace intervals {

// All invariants are computed over exact integers and rationals; no floating
// point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: product of j consecutive integers is divisible by j!
  }
  return r;
}

}  // namespace intervals
