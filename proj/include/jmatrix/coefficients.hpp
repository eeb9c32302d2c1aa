#pragma once

#include <complex>
#include <vector>

#include "jmatrix/basis.hpp"

namespace jmatrix {

/// Sine-like and cosine-like expansion coefficients s_n, c_n for indices
/// 0..N+1 (two extra rows for boundary matching).
struct CoefficientPair {
  std::vector<double> s;
  std::vector<double> c;

  int size() const { return static_cast<int>(s.size()); }
};

/// Kinematical ratios built from g_n^± = c_n ± i s_n:
///   t[n]       = T_n     = g_n^- / g_n^+
///   r_plus[n]  = R_{n+1}^+ = g_{n+1}^+ / g_n^+
///   r_minus[n] = R_{n+1}^- = g_{n+1}^- / g_n^-
struct Kinematical {
  std::vector<std::complex<double>> t;
  std::vector<std::complex<double>> r_plus;
  std::vector<std::complex<double>> r_minus;
};

/// Explicit tabulated formulas for s_n and c_n (any n). Production uses
/// them as seeds for n = 0,1; higher n serve as a cross-check oracle for
/// the recursion path.
double sine_like(int n, const KinematicState& state, const ChannelConfig& cfg);
double cosine_like(int n, const KinematicState& state, const ChannelConfig& cfg);

/// Production path: explicit n = 0,1 seeds, then the three-term Jmat
/// recursion up through index n_size + 1.
CoefficientPair coefficient_pair(int n_size, const KinematicState& state,
                                 const ChannelConfig& cfg);

Kinematical kinematical(const CoefficientPair& pair);

}  // namespace jmatrix
