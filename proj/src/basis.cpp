#include "jmatrix/basis.hpp"

#include <cmath>
#include <string>

#include "jmatrix/errors.hpp"
#include "jmatrix/specfun.hpp"

namespace jmatrix {

void SeparablePotential::validate() const {
  if (m < 1) fail(ErrorKind::DomainError, "potential: M must be >= 1");
  if (v.size() != static_cast<size_t>(m) * m) {
    fail(ErrorKind::DomainError, "potential: V must hold M*M entries");
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!std::isfinite(at(i, j))) {
        fail(ErrorKind::DomainError, "potential: V[" + std::to_string(i) + "][" +
                                         std::to_string(j) + "] is not finite");
      }
      if (j > i && at(i, j) != at(j, i)) {
        fail(ErrorKind::DomainError,
             "potential: V[" + std::to_string(i) + "][" + std::to_string(j) +
                 "] != V[" + std::to_string(j) + "][" + std::to_string(i) + "]");
      }
    }
  }
}

SeparablePotential SeparablePotential::zero(int m) {
  SeparablePotential p;
  p.m = m;
  p.v.assign(static_cast<size_t>(m) * m, 0.0);
  return p;
}

SeparablePotential SeparablePotential::from_rows(
    const std::vector<std::vector<double>>& rows) {
  SeparablePotential p;
  p.m = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      fail(ErrorKind::DomainError, "potential: V must be square");
    }
    p.v.insert(p.v.end(), row.begin(), row.end());
  }
  p.validate();
  return p;
}

namespace {

void check_index(int n) {
  if (n < 0) fail(ErrorKind::DomainError, "basis: negative index");
  if (n > specfun::kDegreeCap) {
    fail(ErrorKind::CapExceeded, "basis: index " + std::to_string(n) + " exceeds cap");
  }
}

}  // namespace

double h0_diag(int n, const ChannelConfig& cfg, double c_value) {
  check_index(n);
  if (cfg.basis == Basis::Laguerre) {
    double t = 0.25 * cfg.lambda * cfg.lambda * c_value * c_value;
    double u = 1.0 - 2.0 * cfg.alpha / c_value;
    return 2.0 * (cfg.kappa + n + 1.0) * (1.0 - t * u);
  }
  double w = cfg.lambda * cfg.lambda * c_value * c_value;
  double u = -1.0 + 2.0 * cfg.alpha / c_value;
  return 1.0 + w * u * (2.0 * n + cfg.kappa + 1.5);
}

double h0_offdiag(int n, const ChannelConfig& cfg, double c_value) {
  check_index(n);
  if (cfg.basis == Basis::Laguerre) {
    double t = 0.25 * cfg.lambda * cfg.lambda * c_value * c_value;
    double u = 1.0 - 2.0 * cfg.alpha / c_value;
    return -std::sqrt((n + 1.0) * (2.0 * cfg.kappa + n + 2.0)) * (1.0 + t * u);
  }
  double w = cfg.lambda * cfg.lambda * c_value * c_value;
  double u = -1.0 + 2.0 * cfg.alpha / c_value;
  return w * u * std::sqrt((n + 1.0) * (n + cfg.kappa + 1.5));
}

double omega_diag(int n, const ChannelConfig& cfg, double c_value) {
  check_index(n);
  if (cfg.basis == Basis::Laguerre) {
    double t = 0.25 * cfg.lambda * cfg.lambda * c_value * c_value;
    return 2.0 * (cfg.kappa + n + 1.0) * (1.0 + t);
  }
  double w = cfg.lambda * cfg.lambda * c_value * c_value;
  return 1.0 + w * (2.0 * n + cfg.kappa + 1.5);
}

double omega_offdiag(int n, const ChannelConfig& cfg, double c_value) {
  check_index(n);
  if (cfg.basis == Basis::Laguerre) {
    double t = 0.25 * cfg.lambda * cfg.lambda * c_value * c_value;
    return -std::sqrt((n + 1.0) * (2.0 * cfg.kappa + n + 2.0)) * (1.0 - t);
  }
  double w = cfg.lambda * cfg.lambda * c_value * c_value;
  return w * std::sqrt((n + 1.0) * (n + cfg.kappa + 1.5));
}

double j_diag(int n, double epsilon, const ChannelConfig& cfg, double c_value) {
  return h0_diag(n, cfg, c_value) - epsilon * omega_diag(n, cfg, c_value);
}

double j_offdiag(int n, double epsilon, const ChannelConfig& cfg, double c_value) {
  return h0_offdiag(n, cfg, c_value) - epsilon * omega_offdiag(n, cfg, c_value);
}

double phi_upper(int n, double r, const ChannelConfig& cfg) {
  check_index(n);
  cfg.validate();
  if (!(r > 0.0)) fail(ErrorKind::DomainError, "phi_upper: requires r > 0");
  double x = cfg.lambda * r;
  if (cfg.basis == Basis::Laguerre) {
    double ln_a = 0.5 * (std::log(cfg.lambda) + specfun::ln_gamma(n + 1.0) -
                         specfun::ln_gamma(2.0 * cfg.kappa + n + 2.0));
    double ln_env = (cfg.kappa + 1.0) * std::log(x) - 0.5 * x;
    return std::exp(ln_a + ln_env) * specfun::laguerre(n, 2.0 * cfg.kappa + 1.0, x);
  }
  double y = x * x;
  double ln_a = 0.5 * (std::log(2.0 * cfg.lambda) + specfun::ln_gamma(n + 1.0) -
                       specfun::ln_gamma(n + cfg.kappa + 1.5));
  double ln_env = (cfg.kappa + 1.0) * std::log(x) - 0.5 * y;
  return std::exp(ln_a + ln_env) * specfun::laguerre(n, cfg.kappa + 0.5, y);
}

namespace {

template <typename Diag, typename Off>
TridiagonalRepr build_tridiag(int n_size, Diag diag, Off off) {
  if (n_size < 1) fail(ErrorKind::DomainError, "matrix size must be >= 1");
  TridiagonalRepr t;
  t.diag.resize(n_size);
  t.offdiag.resize(n_size - 1);
  for (int n = 0; n < n_size; ++n) t.diag[n] = diag(n);
  for (int n = 0; n + 1 < n_size; ++n) t.offdiag[n] = off(n);
  return t;
}

}  // namespace

TridiagonalRepr h0_matrix(int n_size, const ChannelConfig& cfg, double c_value) {
  cfg.validate();
  return build_tridiag(
      n_size, [&](int n) { return h0_diag(n, cfg, c_value); },
      [&](int n) { return h0_offdiag(n, cfg, c_value); });
}

TridiagonalRepr omega_matrix(int n_size, const ChannelConfig& cfg, double c_value) {
  cfg.validate();
  return build_tridiag(
      n_size, [&](int n) { return omega_diag(n, cfg, c_value); },
      [&](int n) { return omega_offdiag(n, cfg, c_value); });
}

TridiagonalRepr j_matrix(double epsilon, int n_size, const ChannelConfig& cfg) {
  cfg.validate();
  double c_value = resolve_c(epsilon, cfg.c_rule, cfg.alpha);
  return build_tridiag(
      n_size, [&](int n) { return j_diag(n, epsilon, cfg, c_value); },
      [&](int n) { return j_offdiag(n, epsilon, cfg, c_value); });
}

}  // namespace jmatrix
