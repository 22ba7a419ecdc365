#include "eraodds/tailprob.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "eraodds/error.hpp"

namespace eraodds {
namespace {

void check(int n, double p) {
  if (n < 1 || n > kMaxTailDepth) {
    throw DomainError("binomial depth n=" + std::to_string(n) + " outside 1.." +
                      std::to_string(kMaxTailDepth));
  }
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("success probability outside [0, 1]");
}

// C(n, k) for k = 0..n built multiplicatively; finite in long double for
// n <= 1000.
std::vector<long double> binomial_coefficients(int n) {
  std::vector<long double> c(static_cast<std::size_t>(n) + 1, 1.0L);
  for (int k = 1; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k - 1)] *
                                     static_cast<long double>(n - k + 1) /
                                     static_cast<long double>(k);
  }
  return c;
}

long double term(const std::vector<long double>& coeff, int n, int k, long double p) {
  return coeff[static_cast<std::size_t>(k)] * std::pow(p, static_cast<long double>(k)) *
         std::pow(1.0L - p, static_cast<long double>(n - k));
}

std::string strip_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

double binomial_tail(const TailQuery& q) {
  check(q.n, q.p);
  if (q.k_min < 0 || q.k_min > q.n) {
    throw DomainError("threshold k=" + std::to_string(q.k_min) + " outside 0.." +
                      std::to_string(q.n));
  }
  if (q.k_min == 0) return 1.0;
  const long double p = q.p;
  long double sum = 0.0L;
  const auto coeff = binomial_coefficients(q.n);
  for (int k = q.n; k >= q.k_min; --k) sum += term(coeff, q.n, k, p);
  return static_cast<double>(sum > 1.0L ? 1.0L : sum);
}

double binomial_cdf(int n, int k_max, double p) {
  check(n, p);
  if (k_max < 0) return 0.0;
  if (k_max >= n) return 1.0;
  const long double lp = p;
  long double sum = 0.0L;
  const auto coeff = binomial_coefficients(n);
  for (int k = 0; k <= k_max; ++k) sum += term(coeff, n, k, lp);
  return static_cast<double>(sum > 1.0L ? 1.0L : sum);
}

Chance chance_format(double probability) {
  if (!(probability > 0.0 && probability <= 1.0)) {
    throw DomainError("chance needs a probability in (0, 1]");
  }
  const double r = 1.0 / probability;
  if (!std::isfinite(r)) throw DomainError("probability too small to express as a chance");
  std::string n;
  if (r >= 10.0) {
    n = fmt::format("{:.0f}", std::round(r));
  } else {
    n = strip_zeros(fmt::format("{:.1f}", std::round(r * 10.0) / 10.0));
  }
  return Chance{probability, "1 in " + n};
}

std::string format_significant(double value, int digits) {
  if (digits < 1) throw DomainError("need at least one significant digit");
  if (value == 0.0) return "0";
  if (!std::isfinite(value)) return fmt::format("{}", value);
  // Scientific formatting performs the rounding; the exponent then fixes how
  // many decimals the plain form needs.
  const std::string sci = fmt::format("{:.{}e}", value, digits - 1);
  const int exponent = std::stoi(sci.substr(sci.find('e') + 1));
  const int decimals = std::max(0, digits - 1 - exponent);
  const double rounded = std::stod(sci);
  return strip_zeros(fmt::format("{:.{}f}", rounded, decimals));
}

std::string format_fixed(double value, int decimals) {
  return fmt::format("{:.{}f}", value, decimals);
}

}  // namespace eraodds
