#include "jmatrix/kinematics.hpp"

#include <cmath>
#include <string>

#include "jmatrix/errors.hpp"

namespace jmatrix {

const char* to_string(Basis basis) {
  return basis == Basis::Laguerre ? "laguerre" : "oscillator";
}

void ChannelConfig::validate() const {
  if (kappa < 1) {
    fail(ErrorKind::DomainError,
         "channel: kappa must be an integer >= 1, got " + std::to_string(kappa));
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    fail(ErrorKind::DomainError, "channel: lambda must be > 0");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    fail(ErrorKind::DomainError, "channel: alpha must be > 0");
  }
  if (c_rule.kind == CRuleKind::Fixed && !(c_rule.value > 0.0)) {
    fail(ErrorKind::DomainError, "channel: fixed C must be > 0");
  }
}

double resolve_c(double epsilon, const CRule& rule, double alpha) {
  if (!(alpha > 0.0)) fail(ErrorKind::DomainError, "resolve_c: alpha must be > 0");
  double c = 0.0;
  switch (rule.kind) {
    case CRuleKind::Fixed:
      c = rule.value;
      break;
    case CRuleKind::Balance:
      if (1.0 + epsilon == 0.0) {
        fail(ErrorKind::DomainError, "resolve_c: balance rule undefined at eps = -1");
      }
      c = alpha / (1.0 + epsilon);
      break;
    case CRuleKind::NonRelLimit:
      c = alpha / 2.0;
      break;
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    fail(ErrorKind::DomainError, "resolve_c: resolved C is not positive");
  }
  return c;
}

double wavenumber(double epsilon, double alpha, double c_value) {
  double den = epsilon - 1.0 + 2.0 * (1.0 - alpha / c_value);
  if (den == 0.0) {
    fail(ErrorKind::KinematicPole,
         "wavenumber: kinematic denominator vanishes at eps = " + std::to_string(epsilon));
  }
  double radicand = -(epsilon - 1.0) / (c_value * c_value * den);
  if (!(radicand > 0.0)) {
    fail(ErrorKind::NotScatteringEnergy,
         "wavenumber: eps = " + std::to_string(epsilon) +
             " is outside the scattering continuum for this C");
  }
  return std::sqrt(radicand);
}

double omega_angle(double eta) {
  if (!(eta > 0.0)) fail(ErrorKind::DomainError, "omega_angle: eta must be > 0");
  double e2 = eta * eta;
  return std::acos((e2 - 0.25) / (e2 + 0.25));
}

KinematicState kinematic_state(double epsilon, const ChannelConfig& cfg) {
  cfg.validate();
  KinematicState st;
  st.epsilon = epsilon;
  st.c_value = resolve_c(epsilon, cfg.c_rule, cfg.alpha);
  st.k = wavenumber(epsilon, cfg.alpha, st.c_value);
  st.eta = st.k / cfg.lambda;
  if (cfg.basis == Basis::Laguerre) st.omega = omega_angle(st.eta);
  return st;
}

}  // namespace jmatrix
