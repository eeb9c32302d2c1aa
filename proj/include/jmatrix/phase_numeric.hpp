#pragma once

#include <vector>

#include "jmatrix/coefficients.hpp"
#include "jmatrix/smatrix.hpp"

namespace jmatrix {

/// Interior expansion coefficients of the truncated problem plus the row
/// residual of the matrix wave equation over interior rows 1..N-2.
struct SolutionCoefficients {
  std::vector<double> h;
  double residual = 0.0;
  double tan_tau = 0.0;
};

/// Exact numerical solution for arbitrary M with truncation N >= M: solves
/// the inner (Jmat + alpha^2 V) block against the boundary column, forms
/// the Green-function element G = (A^{-1})_{N-1,N-1}, and matches to the
/// sine/cosine-like asymptotics:
///   tan tau = -(s_{N-1} + G J_{N-1,N} s_N) / (c_{N-1} + G J_{N-1,N} c_N).
/// The result is independent of N for separable potentials once N >= M.
SMatrixPoint s_matrix_numeric(double epsilon, const SeparablePotential& v,
                              int n_size, const ChannelConfig& cfg);

/// Interior h_0..h_{N-1}, normalized so the exterior continuation is
/// h_n = s_n + tan(tau) c_n for n >= N.
SolutionCoefficients solve_coefficients(double epsilon, const SeparablePotential& v,
                                        int n_size, const ChannelConfig& cfg);

}  // namespace jmatrix
