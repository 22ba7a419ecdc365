#pragma once

// Test-only oracle: exact rational binomial tail. A double p is a dyadic
// rational, so every term C(n,k) p^k (1-p)^(n-k) is computed without rounding
// and only the final quotient is rounded to double.

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

namespace eraodds::oracle {

inline double exact_tail(int n, int k_min, double p) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  int exponent = 0;
  const double mantissa = std::frexp(p, &exponent);  // p = mantissa * 2^exponent
  const cpp_int num = static_cast<long long>(std::ldexp(mantissa, 53));
  const int shift = 53 - exponent;  // p = num / 2^shift
  const cpp_int den = cpp_int(1) << shift;
  const cpp_int q = den - num;

  cpp_int sum = 0;
  cpp_int coeff = 1;  // C(n, k) built incrementally
  for (int k = 0; k <= n; ++k) {
    if (k > 0) coeff = coeff * (n - k + 1) / k;
    if (k >= k_min) sum += coeff * pow(num, static_cast<unsigned>(k)) * pow(q, static_cast<unsigned>(n - k));
  }
  const cpp_rational r(sum, pow(den, static_cast<unsigned>(n)));
  return static_cast<double>(r);
}

}  // namespace eraodds::oracle
