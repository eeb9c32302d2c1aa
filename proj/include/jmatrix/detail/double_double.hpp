#pragma once

#include <cmath>

namespace jmatrix::detail {

// Unevaluated double-double sum (hi + lo, |lo| <= ulp(hi)/2). Roughly 31
// significant digits; used where a plain double accumulation would lose the
// result to cancellation (alternating hypergeometric sums, series oracles).
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bv = s - a;
  double err = (a - (s - bv)) + (b - bv);
  return {s, err};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return {p, err};
}

inline DD quick_two_sum(double a, double b) {  // requires |a| >= |b|
  double s = a + b;
  return {s, b - (s - a)};
}

inline DD dd_add(DD a, DD b) {
  // full-accuracy add: survives cancellation of the hi parts
  DD s = two_sum(a.hi, b.hi);
  DD t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD dd_add(DD a, double b) { return dd_add(a, DD{b, 0.0}); }

inline DD dd_mul(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return two_sum(p.hi, p.lo);
}

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return two_sum(p.hi, p.lo);
}

inline DD dd_div(DD a, double b) {
  double q1 = a.hi / b;
  DD p = two_prod(q1, b);
  double q2 = ((a.hi - p.hi) - p.lo + a.lo) / b;
  return two_sum(q1, q2);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

inline DD dd_div(DD a, DD b) {
  double q1 = a.hi / b.hi;
  DD r = dd_add(a, dd_neg(dd_mul(b, q1)));
  double q2 = r.hi / b.hi;
  r = dd_add(r, dd_neg(dd_mul(b, q2)));
  double q3 = r.hi / b.hi;
  DD q = quick_two_sum(q1, q2);
  return dd_add(q, DD{q3, 0.0});
}

inline double value(DD a) { return a.hi + a.lo; }

}  // namespace jmatrix::detail
