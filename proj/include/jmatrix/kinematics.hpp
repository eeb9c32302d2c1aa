#pragma once

#include <optional>

namespace jmatrix {

enum class Basis { Laguerre, Oscillator };

const char* to_string(Basis basis);

enum class CRuleKind {
  Fixed,        // C = value, energy independent
  Balance,      // C = alpha / (1 + eps); makes K = sqrt(eps^2-1)/alpha
  NonRelLimit,  // C = alpha / 2
};

/// Rule fixing the small-component strength parameter C.
struct CRule {
  CRuleKind kind = CRuleKind::Balance;
  double value = 0.0;  // used by Fixed only

  static CRule fixed(double c) { return {CRuleKind::Fixed, c}; }
  static CRule balance() { return {CRuleKind::Balance, 0.0}; }
  static CRule nonrel_limit() { return {CRuleKind::NonRelLimit, 0.0}; }
};

/// Physical and basis parameters of one scattering channel.
struct ChannelConfig {
  int kappa = 1;        // spin-orbit coupling parameter, integer >= 1
  double lambda = 1.0;  // range parameter, > 0
  double alpha = 1.0;   // fine-structure parameter, > 0
  CRule c_rule = CRule::balance();
  Basis basis = Basis::Laguerre;

  void validate() const;  // throws DomainError
};

/// Per-energy derived quantities. omega is populated for the Laguerre
/// basis only; eta for both.
struct KinematicState {
  double epsilon = 0.0;
  double c_value = 0.0;
  double k = 0.0;
  double eta = 0.0;
  std::optional<double> omega;
};

/// Resolve the C rule at a given energy.
double resolve_c(double epsilon, const CRule& rule, double alpha);

/// Wavenumber K(eps) = sqrt[ (-1/C^2) (eps-1) / (eps-1+2(1-alpha/C)) ].
/// Throws NotScatteringEnergy when the radicand is <= 0 and KinematicPole
/// when the denominator vanishes.
double wavenumber(double epsilon, double alpha, double c_value);

/// omega(eps) in (0, pi) with cos(omega) = (eta^2 - 1/4) / (eta^2 + 1/4).
double omega_angle(double eta);

KinematicState kinematic_state(double epsilon, const ChannelConfig& cfg);

}  // namespace jmatrix
