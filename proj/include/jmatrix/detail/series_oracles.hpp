#pragma once

#include <cmath>

#include "jmatrix/detail/double_double.hpp"
#include "jmatrix/errors.hpp"

namespace jmatrix::detail {

// Brute-force series evaluations accumulated in double-double precision.
// These are deliberately different algorithms from the production
// recurrences/sums in specfun, and survive the heavy cancellation that
// ordinary doubles cannot; they serve as independent oracles in the
// consistency suites and tests.
//
// Term updates avoid pre-rounded multipliers: integer factors and two_sum
// splits keep each ratio exact at double-double accuracy, so the only
// non-uniform error left is O(eps^2) per step. The seed's log-gamma error
// is uniform across terms and scales the sum harmlessly.
//
// Each oracle also reports the sum of term magnitudes: the natural error
// scale of any floating-point evaluation of the same series.

struct SeriesValue {
  double value = 0.0;
  double term_scale = 0.0;  // sum over |term_k|
};

// L_n^mu(x) = sum_k (-1)^k binom(n+mu, n-k) x^k / k!
inline SeriesValue laguerre_series(int n, double mu, double x) {
  DD sum{0.0, 0.0};
  double scale = 0.0;
  double ln_c0 = std::lgamma(n + mu + 1.0) - std::lgamma(mu + 1.0) - std::lgamma(n + 1.0);
  DD term{std::exp(ln_c0), 0.0};
  for (int k = 0; k <= n; ++k) {
    sum = dd_add(sum, term);
    scale += std::abs(term.hi);
    // ratio: -(n-k) x / ((mu+k+1)(k+1))
    term = dd_mul(term, -static_cast<double>(n - k));
    term = dd_mul(term, x);
    term = dd_div(term, two_sum(mu, k + 1.0));
    term = dd_div(term, k + 1.0);
  }
  return {value(sum), scale};
}

inline double laguerre_series_dd(int n, double mu, double x) {
  return laguerre_series(n, mu, x).value;
}

// C_n^nu(x) = sum_k (-1)^k Gamma(nu+n-k) / (Gamma(nu) k! (n-2k)!) (2x)^(n-2k)
inline SeriesValue gegenbauer_series(int n, double nu, double x) {
  DD sum{0.0, 0.0};
  double scale = 0.0;
  // seed k = 0: Gamma(nu+n)/(Gamma(nu) n!) (2x)^n
  double ln_c0 = std::lgamma(nu + n) - std::lgamma(nu) - std::lgamma(n + 1.0);
  DD term{std::exp(ln_c0), 0.0};
  DD two_x = two_prod(2.0, x);
  for (int p = 0; p < n; ++p) term = dd_mul(term, two_x);
  DD four_x2 = dd_mul(two_x, two_x);
  for (int k = 0; k <= n / 2; ++k) {
    sum = dd_add(sum, term);
    scale += std::abs(term.hi);
    if (k == n / 2) break;
    // ratio: -(n-2k)(n-2k-1) / ((nu+n-k-1)(k+1)(2x)^2)
    term = dd_mul(term, -static_cast<double>(n - 2 * k) * (n - 2 * k - 1));
    term = dd_div(term, two_sum(nu, n - k - 1.0));
    term = dd_div(term, k + 1.0);
    term = dd_div(term, four_x2);
  }
  return {value(sum), scale};
}

inline double gegenbauer_series_dd(int n, double nu, double x) {
  return gegenbauer_series(n, nu, x).value;
}

// Terminating 2F1 with a <= 0 integer, term-by-term in double-double.
inline SeriesValue gauss_2f1_series(int a, double b, double c, double z) {
  DD sum{0.0, 0.0};
  DD term{1.0, 0.0};
  double scale = 0.0;
  int terms = -a;
  for (int k = 0; k <= terms; ++k) {
    sum = dd_add(sum, term);
    scale += std::abs(term.hi);
    if (k == terms) break;
    if (c + k == 0.0) fail(ErrorKind::DegenerateParameters, "2F1 oracle: (c)_k vanishes");
    term = dd_mul(term, static_cast<double>(a + k));
    term = dd_mul(term, two_sum(b, k));
    term = dd_mul(term, z);
    term = dd_div(term, two_sum(c, k));
    term = dd_div(term, k + 1.0);
  }
  return {value(sum), scale};
}

inline double gauss_2f1_series_dd(int a, double b, double c, double z) {
  return gauss_2f1_series(a, b, c, z).value;
}

// Convergent 1F1 series in double-double.
inline SeriesValue kummer_1f1_series(double a, double b, double z) {
  DD sum{1.0, 0.0};
  DD term{1.0, 0.0};
  double scale = 1.0;
  for (int k = 0; k < 20000; ++k) {
    if (b + k == 0.0) fail(ErrorKind::DegenerateParameters, "1F1 oracle: degenerate b");
    term = dd_mul(term, two_sum(a, k));
    term = dd_mul(term, z);
    term = dd_div(term, two_sum(b, k));
    term = dd_div(term, k + 1.0);
    sum = dd_add(sum, term);
    scale += std::abs(term.hi);
    if (std::abs(value(term)) < 1e-34 * std::abs(value(sum)) && k > 2) {
      return {value(sum), scale};
    }
  }
  fail(ErrorKind::ConvergenceFailure, "1F1 oracle: no convergence");
}

inline double kummer_1f1_series_dd(double a, double b, double z) {
  return kummer_1f1_series(a, b, z).value;
}

}  // namespace jmatrix::detail
