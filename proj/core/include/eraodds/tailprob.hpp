#pragma once

#include <string>

namespace eraodds {

/// Upper-tail query P(X >= k_min) for X ~ Binomial(n, p).
struct TailQuery {
  int n = 0;      ///< list depth, 1..1000
  int k_min = 0;  ///< 0..n
  double p = 0.0; ///< [0, 1]
};

inline constexpr int kMaxTailDepth = 1000;

/// Exact upper tail by direct summation of binomial terms in extended
/// precision. Returns exactly 1 for k_min == 0. Terms are accumulated from
/// k = n down to k_min, so the result is non-increasing in k_min bit for bit.
///
/// Throws DomainError when the query is out of range.
[[nodiscard]] double binomial_tail(const TailQuery& q);

/// P(X <= k_max); 0 for k_max < 0.
[[nodiscard]] double binomial_cdf(int n, int k_max, double p);

/// Probability with its "1 in N" display.
struct Chance {
  double probability = 1.0;
  std::string display;
};

/// r = 1 / probability. r >= 10 prints as the nearest integer, smaller r to
/// one decimal (a trailing ".0" is dropped). Halves round away from zero.
/// Throws DomainError unless probability is in (0, 1].
[[nodiscard]] Chance chance_format(double probability);

/// Rounded to `digits` significant figures, fixed notation, trailing zeros
/// removed: 0.004482 -> "0.00448", 0.00250 -> "0.0025".
[[nodiscard]] std::string format_significant(double value, int digits = 3);

/// Fixed notation with exactly `decimals` places.
[[nodiscard]] std::string format_fixed(double value, int decimals);

}  // namespace eraodds
