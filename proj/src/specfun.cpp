#include "jmatrix/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "jmatrix/detail/double_double.hpp"
#include "jmatrix/errors.hpp"

namespace jmatrix::specfun {

namespace {

void check_degree(int n, const char* who) {
  if (n < 0) fail(ErrorKind::DomainError, std::string(who) + ": negative degree");
  if (n > kDegreeCap) {
    fail(ErrorKind::CapExceeded,
         std::string(who) + ": degree " + std::to_string(n) + " exceeds cap " +
             std::to_string(kDegreeCap));
  }
}

}  // namespace

double laguerre(int n, double mu, double x) {
  check_degree(n, "laguerre");
  if (n == 0) return 1.0;
  double ym = 1.0;
  double y = 1.0 + mu - x;
  for (int k = 1; k < n; ++k) {
    double yp = ((2.0 * k + 1.0 + mu - x) * y - (k + mu) * ym) / (k + 1.0);
    ym = y;
    y = yp;
  }
  return y;
}

double gegenbauer(int n, double nu, double x) {
  check_degree(n, "gegenbauer");
  if (n == 0) return 1.0;
  double ym = 1.0;
  double y = 2.0 * nu * x;
  for (int k = 1; k < n; ++k) {
    double yp = (2.0 * (k + nu) * x * y - (k + 2.0 * nu - 1.0) * ym) / (k + 1.0);
    ym = y;
    y = yp;
  }
  return y;
}

double gauss_2f1_terminating(int a, double b, double c, double z) {
  if (a > 0) fail(ErrorKind::DomainError, "gauss_2f1_terminating: a must be <= 0");
  int terms = -a;  // sum runs k = 0..|a|
  check_degree(terms, "gauss_2f1_terminating");
  double sum = 0.0, comp = 0.0;
  double term = 1.0;
  for (int k = 0; k <= terms; ++k) {
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (k == terms) break;
    double ck = c + k;
    if (ck == 0.0) {
      fail(ErrorKind::DegenerateParameters,
           "gauss_2f1_terminating: (c)_k vanishes at k=" + std::to_string(k + 1));
    }
    term *= (a + k) * (b + k) / (ck * (k + 1.0)) * z;
  }
  return sum;
}

double kummer_1f1(double a, double b, double z) {
  double sum = 1.0, comp = 0.0;
  double term = 1.0;
  for (int k = 0; k < 10000; ++k) {
    double bk = b + k;
    if (bk == 0.0) {
      fail(ErrorKind::DegenerateParameters,
           "kummer_1f1: b is a nonpositive integer (b=" + std::to_string(b) + ")");
    }
    term *= (a + k) / (bk * (k + 1.0)) * z;
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::abs(term) < 1e-16 * std::abs(sum) && k > 2) return sum;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "kummer_1f1: no convergence for a=%g b=%g z=%g", a, b, z);
  fail(ErrorKind::ConvergenceFailure, buf);
}

double kummer_1f1_transformed(double a, double b, double z) {
  using detail::DD;
  // 1F1(b-a; b; -z) accumulated in double-double; the alternating series
  // cancels heavily, so multipliers are kept exact (two_sum splits).
  DD ap = detail::two_sum(b, -a);
  DD sum{1.0, 0.0};
  DD term{1.0, 0.0};
  bool done = false;
  for (int k = 0; k < 10000 && !done; ++k) {
    double bk = b + k;
    if (bk == 0.0) {
      fail(ErrorKind::DegenerateParameters, "kummer_1f1_transformed: degenerate b");
    }
    term = detail::dd_mul(term, detail::dd_add(ap, static_cast<double>(k)));
    term = detail::dd_mul(term, -z);
    term = detail::dd_div(term, detail::two_sum(b, k));
    term = detail::dd_div(term, k + 1.0);
    sum = detail::dd_add(sum, term);
    done = std::abs(detail::value(term)) < 1e-34 * std::abs(detail::value(sum)) && k > 2;
  }
  if (!done) {
    fail(ErrorKind::ConvergenceFailure, "kummer_1f1_transformed: no convergence");
  }
  return std::exp(z) * detail::value(sum);
}

double ln_gamma(double x) {
  if (!(x > 0.0)) fail(ErrorKind::DomainError, "ln_gamma: requires x > 0");
  return std::lgamma(x);
}

double pochhammer(double a, int k) {
  if (k < 0) fail(ErrorKind::DomainError, "pochhammer: negative k");
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= a + i;
  return p;
}

}  // namespace jmatrix::specfun
