#include "jmatrix/coefficients.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "jmatrix/errors.hpp"
#include "jmatrix/specfun.hpp"

namespace jmatrix {

namespace {

constexpr double kLn2 = 0.6931471805599453094;
constexpr double kLnPi = 1.1447298858494001741;

double ln_norm_laguerre(int n, const ChannelConfig& cfg) {
  return 0.5 * (std::log(cfg.lambda) + specfun::ln_gamma(n + 1.0) -
                specfun::ln_gamma(2.0 * cfg.kappa + n + 2.0));
}

double ln_norm_oscillator(int n, const ChannelConfig& cfg) {
  return 0.5 * (std::log(2.0 * cfg.lambda) + specfun::ln_gamma(n + 1.0) -
                specfun::ln_gamma(n + cfg.kappa + 1.5));
}

double require_omega(const KinematicState& state) {
  if (!state.omega) {
    fail(ErrorKind::DomainError, "coefficients: state lacks omega for Laguerre basis");
  }
  return *state.omega;
}

}  // namespace

double sine_like(int n, const KinematicState& state, const ChannelConfig& cfg) {
  if (cfg.basis == Basis::Laguerre) {
    double omega = require_omega(state);
    double ln_pref = cfg.kappa * kLn2 - std::log(cfg.lambda) + ln_norm_laguerre(n, cfg) +
                     specfun::ln_gamma(cfg.kappa + 1.0) +
                     (cfg.kappa + 1.0) * std::log(std::sin(omega));
    return std::exp(ln_pref) * specfun::gegenbauer(n, cfg.kappa + 1.0, std::cos(omega));
  }
  double eta2 = state.eta * state.eta;
  double ln_pref = -std::log(cfg.lambda) + 0.5 * (kLnPi - kLn2) +
                   ln_norm_oscillator(n, cfg) + (cfg.kappa + 1.0) * std::log(state.eta) -
                   0.5 * eta2;
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(ln_pref) * specfun::laguerre(n, cfg.kappa + 0.5, eta2);
}

double cosine_like(int n, const KinematicState& state, const ChannelConfig& cfg) {
  if (cfg.basis == Basis::Laguerre) {
    double omega = require_omega(state);
    double ln_pref = cfg.kappa * kLn2 + ln_norm_laguerre(n, cfg) +
                     specfun::ln_gamma(cfg.kappa + 0.5) - 0.5 * kLnPi -
                     std::log(cfg.lambda) - cfg.kappa * std::log(std::sin(omega));
    double half = std::sin(0.5 * omega);
    double hyp = specfun::gauss_2f1_terminating(-n - 1 - 2 * cfg.kappa, n + 1.0,
                                                0.5 - cfg.kappa, half * half);
    return -std::exp(ln_pref) * hyp;
  }
  double eta2 = state.eta * state.eta;
  double ln_pref = specfun::ln_gamma(cfg.kappa + 0.5) + ln_norm_oscillator(n, cfg) -
                   0.5 * (kLn2 + kLnPi) - std::log(cfg.lambda) -
                   cfg.kappa * std::log(state.eta) - 0.5 * eta2;
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  double hyp = specfun::kummer_1f1(-n - 0.5 - cfg.kappa, 0.5 - cfg.kappa, eta2);
  return sign * std::exp(ln_pref) * hyp;
}

CoefficientPair coefficient_pair(int n_size, const KinematicState& state,
                                 const ChannelConfig& cfg) {
  if (n_size < 1) fail(ErrorKind::DomainError, "coefficient_pair: n_size must be >= 1");
  if (n_size + 1 > specfun::kDegreeCap) {
    fail(ErrorKind::CapExceeded, "coefficient_pair: n_size exceeds degree cap");
  }
  CoefficientPair pair;
  pair.s.resize(n_size + 2);
  pair.c.resize(n_size + 2);
  for (int n = 0; n <= 1; ++n) {
    pair.s[n] = sine_like(n, state, cfg);
    pair.c[n] = cosine_like(n, state, cfg);
  }
  // Both solutions satisfy the homogeneous three-term rows n >= 1.
  for (int n = 1; n <= n_size; ++n) {
    double d = j_diag(n, state.epsilon, cfg, state.c_value);
    double lo = j_offdiag(n - 1, state.epsilon, cfg, state.c_value);
    double hi = j_offdiag(n, state.epsilon, cfg, state.c_value);
    double scale = std::abs(d) + std::abs(lo) + std::abs(hi);
    if (std::abs(hi) < 1e-13 * scale) {
      fail(ErrorKind::DegenerateParameters,
           "coefficient_pair: Jmat off-diagonal vanishes at row " + std::to_string(n));
    }
    pair.s[n + 1] = -(d * pair.s[n] + lo * pair.s[n - 1]) / hi;
    pair.c[n + 1] = -(d * pair.c[n] + lo * pair.c[n - 1]) / hi;
  }
  return pair;
}

Kinematical kinematical(const CoefficientPair& pair) {
  Kinematical kin;
  int len = pair.size();
  kin.t.resize(len);
  kin.r_plus.resize(len > 0 ? len - 1 : 0);
  kin.r_minus.resize(len > 0 ? len - 1 : 0);
  for (int n = 0; n < len; ++n) {
    double c = pair.c[n];
    double s = pair.s[n];
    if (c * c + s * s < DBL_MIN) {
      fail(ErrorKind::ZeroAmplitude,
           "kinematical: s_n and c_n both underflow at n = " + std::to_string(n));
    }
    std::complex<double> gp(c, s);
    std::complex<double> gm(c, -s);
    kin.t[n] = gm / gp;
    if (n >= 1) {
      std::complex<double> gp_prev(pair.c[n - 1], pair.s[n - 1]);
      std::complex<double> gm_prev(pair.c[n - 1], -pair.s[n - 1]);
      kin.r_plus[n - 1] = gp / gp_prev;
      kin.r_minus[n - 1] = gm / gm_prev;
    }
  }
  return kin;
}

}  // namespace jmatrix
