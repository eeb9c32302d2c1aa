#pragma once

#include <vector>

#include "jmatrix/kinematics.hpp"

namespace jmatrix {

/// Symmetric tridiagonal matrix; offdiag[i] couples rows i and i+1.
struct TridiagonalRepr {
  std::vector<double> diag;
  std::vector<double> offdiag;

  int size() const { return static_cast<int>(diag.size()); }
};

/// M x M real symmetric coupling matrix of an M-term separable potential.
/// Enters the wave equation only through the product alpha^2 * V.
struct SeparablePotential {
  int m = 1;
  std::vector<double> v;  // row-major m*m

  double at(int i, int j) const { return v[static_cast<size_t>(i) * m + j]; }
  void validate() const;  // throws DomainError naming offending entries
  static SeparablePotential zero(int m);
  static SeparablePotential from_rows(const std::vector<std::vector<double>>& rows);
};

// Tridiagonal elements of H0 and Omega as tabulated for the two bases.
// c_value is the resolved C (energy dependent under the Balance rule, so
// callers resolve it per energy point). Off-diagonal index n couples n,n+1.
double h0_diag(int n, const ChannelConfig& cfg, double c_value);
double h0_offdiag(int n, const ChannelConfig& cfg, double c_value);
double omega_diag(int n, const ChannelConfig& cfg, double c_value);
double omega_offdiag(int n, const ChannelConfig& cfg, double c_value);
double j_diag(int n, double epsilon, const ChannelConfig& cfg, double c_value);
double j_offdiag(int n, double epsilon, const ChannelConfig& cfg, double c_value);

/// Upper spinor basis component phi_n(r), normalization in log space.
double phi_upper(int n, double r, const ChannelConfig& cfg);

TridiagonalRepr h0_matrix(int n_size, const ChannelConfig& cfg, double c_value);
TridiagonalRepr omega_matrix(int n_size, const ChannelConfig& cfg, double c_value);

/// Jmat(eps) = H0 - eps * Omega, with C resolved from cfg at eps.
TridiagonalRepr j_matrix(double epsilon, int n_size, const ChannelConfig& cfg);

}  // namespace jmatrix
