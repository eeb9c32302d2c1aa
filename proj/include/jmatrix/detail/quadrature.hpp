#pragma once

#include <cmath>
#include <functional>

namespace jmatrix::detail {

// Adaptive Simpson on [a,b]. Good enough for the smooth, exponentially
// decaying overlap integrands used in the cross-checks.
inline double adaptive_simpson_step(const std::function<double(double)>& f, double a,
                                    double b, double fa, double fm, double fb,
                                    double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// Fixed panels with adaptive refinement inside each: the initial nodes must
// sample localized integrands, or the error estimate converges to zero on
// empty coarse intervals.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-11, int panels = 64, int max_depth = 30) {
  double total = 0.0;
  double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double pa = a + p * width;
    double pb = p + 1 == panels ? b : pa + width;
    double fa = f(pa);
    double fb = f(pb);
    double fm = f(0.5 * (pa + pb));
    double whole = (pb - pa) / 6.0 * (fa + 4.0 * fm + fb);
    total += adaptive_simpson_step(f, pa, pb, fa, fm, fb, whole, tol / panels, max_depth);
  }
  return total;
}

}  // namespace jmatrix::detail
