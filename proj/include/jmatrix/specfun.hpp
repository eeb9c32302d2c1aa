#pragma once

namespace jmatrix::specfun {

/// Hard cap on polynomial degrees / basis indices.
inline constexpr int kDegreeCap = 200;

/// Generalized Laguerre polynomial L_n^mu(x), upward three-term recurrence.
double laguerre(int n, double mu, double x);

/// Gegenbauer polynomial C_n^nu(x), upward three-term recurrence.
double gegenbauer(int n, double nu, double x);

/// Terminating Gauss hypergeometric 2F1(a,b;c;z) with a a nonpositive
/// integer; exact finite sum with compensated accumulation.
double gauss_2f1_terminating(int a, double b, double c, double z);

/// Confluent hypergeometric 1F1(a;b;z) by compensated direct series.
double kummer_1f1(double a, double b, double z);

/// Same value through the Kummer transformation e^z * 1F1(b-a;b;-z).
/// The transformed series cancels heavily; it is accumulated in
/// double-double precision. Kept as an independent route for
/// consistency checks; kummer_1f1 is the production path.
double kummer_1f1_transformed(double a, double b, double z);

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// Pochhammer symbol (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
double pochhammer(double a, int k);

}  // namespace jmatrix::specfun
