#include "jmatrix/phase_numeric.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "jmatrix/errors.hpp"

namespace jmatrix {

namespace {

struct InnerSolve {
  KinematicState state;
  CoefficientPair pair;
  double boundary = 0.0;  // Jmat_{N-1,N}
  double green = 0.0;     // (A^{-1})_{N-1,N-1}
  double cond = 0.0;
  Eigen::VectorXd green_col;  // A^{-1} e_{N-1}
  Eigen::MatrixXd a;
};

InnerSolve solve_inner(double epsilon, const SeparablePotential& v, int n_size,
                       const ChannelConfig& cfg) {
  v.validate();
  cfg.validate();
  if (n_size < v.m) {
    fail(ErrorKind::DomainError, "numeric phase: requires N >= M, got N = " +
                                     std::to_string(n_size) + ", M = " +
                                     std::to_string(v.m));
  }
  InnerSolve out;
  out.state = kinematic_state(epsilon, cfg);
  out.pair = coefficient_pair(n_size, out.state, cfg);

  double a2 = cfg.alpha * cfg.alpha;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_size, n_size);
  for (int n = 0; n < n_size; ++n) {
    a(n, n) = j_diag(n, epsilon, cfg, out.state.c_value);
    if (n + 1 < n_size) {
      double off = j_offdiag(n, epsilon, cfg, out.state.c_value);
      a(n, n + 1) = off;
      a(n + 1, n) = off;
    }
  }
  for (int i = 0; i < v.m; ++i) {
    for (int j = 0; j < v.m; ++j) a(i, j) += a2 * v.at(i, j);
  }

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  double pmax = pivots.maxCoeff();
  double pmin = pivots.minCoeff();
  out.cond = (pmin > 0.0) ? pmax / pmin : INFINITY;
  if (!(pmin > 0.0) || out.cond > 1e14) {
    fail(ErrorKind::SingularInnerSystem,
         "numeric phase: inner system singular at eps = " + std::to_string(epsilon));
  }
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n_size);
  e(n_size - 1) = 1.0;
  out.green_col = lu.solve(e);
  out.green = out.green_col(n_size - 1);
  out.boundary = j_offdiag(n_size - 1, epsilon, cfg, out.state.c_value);
  out.a = std::move(a);
  return out;
}

}  // namespace

SMatrixPoint s_matrix_numeric(double epsilon, const SeparablePotential& v, int n_size,
                              const ChannelConfig& cfg) {
  InnerSolve in = solve_inner(epsilon, v, n_size, cfg);
  const auto& s = in.pair.s;
  const auto& c = in.pair.c;
  double gj = in.green * in.boundary;
  double num = s[n_size - 1] + gj * s[n_size];
  double den = c[n_size - 1] + gj * c[n_size];
  // S = (1 + i tan tau)/(1 - i tan tau) with tan tau = -num/den, formed
  // directly from (num, den) so tau = +-pi/2 stays finite.
  std::complex<double> s_value =
      std::complex<double>(den, -num) / std::complex<double>(den, num);

  SMatrixPoint pt;
  pt.epsilon = epsilon;
  pt.s_value = s_value;
  pt.tau = 0.5 * std::arg(s_value);
  pt.method = {MethodKind::Numeric, n_size};
  pt.diagnostics["green_boundary"] = gj;
  pt.diagnostics["cond_estimate"] = in.cond;
  pt.diagnostics["match_num"] = num;
  pt.diagnostics["match_den"] = den;
  return pt;
}

SolutionCoefficients solve_coefficients(double epsilon, const SeparablePotential& v,
                                        int n_size, const ChannelConfig& cfg) {
  InnerSolve in = solve_inner(epsilon, v, n_size, cfg);
  const auto& s = in.pair.s;
  const auto& c = in.pair.c;
  double gj = in.green * in.boundary;
  double num = s[n_size - 1] + gj * s[n_size];
  double den = c[n_size - 1] + gj * c[n_size];
  double tan_tau = -num / den;

  // Exterior normalization h_n = s_n + tan(tau) c_n; the interior column is
  // the solve against the boundary source -J_{N-1,N} h_N.
  double h_boundary = s[n_size] + tan_tau * c[n_size];
  Eigen::VectorXd h = -in.boundary * h_boundary * in.green_col;

  SolutionCoefficients sol;
  sol.h.assign(h.data(), h.data() + h.size());
  sol.tan_tau = tan_tau;
  sol.residual = 0.0;
  for (int n = 1; n + 1 < n_size; ++n) {
    double acc = 0.0;
    double scale = 0.0;
    for (int m = 0; m < n_size; ++m) {
      double term = in.a(n, m) * h(m);  // a holds the potential block already
      acc += term;
      scale += std::abs(term);
    }
    if (scale > 0.0) sol.residual = std::max(sol.residual, std::abs(acc) / scale);
  }
  return sol;
}

}  // namespace jmatrix
