#pragma once

#include <array>
#include <vector>

#include "jmatrix/coefficients.hpp"
#include "jmatrix/smatrix.hpp"

namespace jmatrix {

/// Closed-form S-matrix for a one-term separable potential.
SMatrixPoint s_matrix_m1(double epsilon, double v00, const ChannelConfig& cfg);

/// Closed-form S-matrix for a two-term separable potential (2x2 V).
SMatrixPoint s_matrix_m2(double epsilon, const SeparablePotential& v,
                         const ChannelConfig& cfg);

/// Closed-form S-matrix for a three-term separable potential (3x3 V).
SMatrixPoint s_matrix_m3(double epsilon, const SeparablePotential& v,
                         const ChannelConfig& cfg);

/// Dispatch on v.m (1, 2 or 3); DomainError for larger M.
SMatrixPoint s_matrix_analytic(double epsilon, const SeparablePotential& v,
                               const ChannelConfig& cfg);

/// Continuous tau(eps) from principal-branch points ordered by energy:
/// consecutive differences are brought below pi/2 in magnitude by integer
/// multiples of pi. Throws GridTooCoarse when a step is exactly ambiguous.
std::vector<double> unwrap_phase(const std::vector<SMatrixPoint>& points);

namespace detail {

/// Prepared inputs of the closed-form expressions. The potential enters
/// them only through alpha^2 * V, which callers pass pre-multiplied; this
/// keeps the product structure directly testable.
struct FormulaInputs {
  double j00 = 0, j01 = 0, j11 = 0, j12 = 0;
  std::complex<double> t0, r1, r2;
  double scale = 1.0;  // max |Jmat| entry, near-singularity reference
};

using ScaledPotential = std::array<std::array<double, 3>, 3>;  // alpha^2 * V

std::complex<double> analytic_core_m1(const FormulaInputs& in, double a2v00,
                                      std::map<std::string, double>* diag);
std::complex<double> analytic_core_m2(const FormulaInputs& in,
                                      const ScaledPotential& a2v,
                                      std::map<std::string, double>* diag);
std::complex<double> analytic_core_m3(const FormulaInputs& in,
                                      const ScaledPotential& a2v,
                                      std::map<std::string, double>* diag);

FormulaInputs formula_inputs(double epsilon, const KinematicState& state,
                             const ChannelConfig& cfg);

}  // namespace detail

}  // namespace jmatrix
