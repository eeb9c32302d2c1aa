#include "jmatrix/phase_analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jmatrix/errors.hpp"

namespace jmatrix {

namespace detail {

namespace {

constexpr double kNearSingularTol = 1e-10;

void guard(double magnitude, double scale, const char* what) {
  if (magnitude < kNearSingularTol * scale) {
    fail(ErrorKind::NearSingularFormula,
         std::string("analytic phase: ") + what + " degenerates; use the numeric path");
  }
}

}  // namespace

FormulaInputs formula_inputs(double epsilon, const KinematicState& state,
                             const ChannelConfig& cfg) {
  FormulaInputs in;
  in.j00 = j_diag(0, epsilon, cfg, state.c_value);
  in.j01 = j_offdiag(0, epsilon, cfg, state.c_value);
  in.j11 = j_diag(1, epsilon, cfg, state.c_value);
  in.j12 = j_offdiag(1, epsilon, cfg, state.c_value);
  in.scale = std::max({std::abs(in.j00), std::abs(in.j01), std::abs(in.j11),
                       std::abs(in.j12)});
  CoefficientPair pair = coefficient_pair(2, state, cfg);
  Kinematical kin = kinematical(pair);
  in.t0 = kin.t[0];
  in.r1 = kin.r_plus[0];
  in.r2 = kin.r_plus[1];
  return in;
}

std::complex<double> analytic_core_m1(const FormulaInputs& in, double a2v00,
                                      std::map<std::string, double>* diag) {
  std::complex<double> free_denom = in.j00 + in.j01 * in.r1;
  std::complex<double> denom = free_denom + a2v00;
  guard(std::abs(denom), in.scale, "M=1 denominator");
  std::complex<double> s = in.t0 + (1.0 - in.t0) * free_denom / denom;
  if (diag) {
    (*diag)["free_denom_abs"] = std::abs(free_denom);
    (*diag)["denom_abs"] = std::abs(denom);
  }
  return s;
}

std::complex<double> analytic_core_m2(const FormulaInputs& in, const ScaledPotential& a2v,
                                      std::map<std::string, double>* diag) {
  std::complex<double> p = in.j01 - a2v[1][1] * in.r1;
  double q = in.j01 + a2v[0][1];
  guard(std::abs(q), in.scale, "M=2 J01 + a^2 V01");
  guard(std::abs(p), in.scale, "M=2 J01 - a^2 V11 R1");
  double zeta = std::arg(p / q);
  std::complex<double> bracket = p * (in.j00 + a2v[0][0]) / q + in.r1 * q;
  guard(std::abs(bracket), in.scale, "M=2 bracket");
  std::complex<double> phase = std::exp(std::complex<double>(0.0, -2.0 * zeta));
  std::complex<double> s =
      in.t0 * phase +
      (1.0 - in.t0) * q * ((in.j00 + in.j01 * in.r1) / p) / bracket;
  if (diag) {
    (*diag)["zeta"] = zeta;
    (*diag)["denom_abs"] = std::abs(bracket);
  }
  return s;
}

std::complex<double> analytic_core_m3(const FormulaInputs& in, const ScaledPotential& a2v,
                                      std::map<std::string, double>* diag) {
  std::complex<double> j12v = in.j12 + a2v[1][2];
  guard(std::abs(j12v), in.scale, "M=3 J12 + a^2 V12");
  std::complex<double> frac11 = (in.j11 + a2v[1][1]) / j12v;
  std::complex<double> lam_num = in.j01 / in.r1 + in.j11 - in.r2 * a2v[1][2] +
                                 frac11 * (-in.j12 + in.r2 * a2v[2][2]);
  std::complex<double> lam_den = in.j01 + a2v[0][1] - a2v[0][2] * frac11;
  guard(std::abs(lam_den), in.scale, "M=3 Lambda denominator");
  std::complex<double> lam = lam_num / lam_den;
  std::complex<double> r1lam = in.r1 * lam;
  guard(std::abs(r1lam), 1.0, "M=3 R1 Lambda");
  double xi = std::arg(r1lam);

  // The tabulated brace term a^2 R1 [ (J01+a2V01)/(J12+a2V12) (J12/a^2 - R2 V22
  // - V02 Lam) + R2 V02 ] carried with a^2 distributed inward, so only a2*V
  // products appear:
  std::complex<double> inner_scaled =
      ((in.j01 + a2v[0][1]) / j12v) *
          (in.j12 - in.r2 * a2v[2][2] - a2v[0][2] * lam) +
      in.r2 * a2v[0][2];
  std::complex<double> brace = r1lam * (in.j00 + a2v[0][0]) + in.r1 * inner_scaled;
  guard(std::abs(brace), in.scale, "M=3 brace");
  std::complex<double> phase = std::exp(std::complex<double>(0.0, -2.0 * xi));
  std::complex<double> s =
      in.t0 * phase + ((1.0 - in.t0) / r1lam) * (in.j00 + in.r1 * in.j01) / brace;
  if (diag) {
    (*diag)["xi"] = xi;
    (*diag)["lambda_re"] = lam.real();
    (*diag)["lambda_im"] = lam.imag();
    (*diag)["denom_abs"] = std::abs(brace);
  }
  return s;
}

}  // namespace detail

namespace {

SMatrixPoint make_point(double epsilon, std::complex<double> s, MethodKind kind,
                        std::map<std::string, double> diag) {
  SMatrixPoint pt;
  pt.epsilon = epsilon;
  pt.s_value = s;
  pt.tau = 0.5 * std::arg(s);
  pt.method = {kind, 0};
  pt.diagnostics = std::move(diag);
  return pt;
}

detail::ScaledPotential scaled(const SeparablePotential& v, double alpha) {
  detail::ScaledPotential a2v{};
  double a2 = alpha * alpha;
  for (int i = 0; i < v.m; ++i) {
    for (int j = 0; j < v.m; ++j) a2v[i][j] = a2 * v.at(i, j);
  }
  return a2v;
}

}  // namespace

SMatrixPoint s_matrix_m1(double epsilon, double v00, const ChannelConfig& cfg) {
  cfg.validate();
  KinematicState state = kinematic_state(epsilon, cfg);
  detail::FormulaInputs in = detail::formula_inputs(epsilon, state, cfg);
  std::map<std::string, double> diag;
  std::complex<double> s =
      detail::analytic_core_m1(in, cfg.alpha * cfg.alpha * v00, &diag);
  return make_point(epsilon, s, MethodKind::AnalyticM1, std::move(diag));
}

SMatrixPoint s_matrix_m2(double epsilon, const SeparablePotential& v,
                         const ChannelConfig& cfg) {
  cfg.validate();
  v.validate();
  if (v.m != 2) fail(ErrorKind::DomainError, "s_matrix_m2: V must be 2x2");
  KinematicState state = kinematic_state(epsilon, cfg);
  detail::FormulaInputs in = detail::formula_inputs(epsilon, state, cfg);
  std::map<std::string, double> diag;
  std::complex<double> s = detail::analytic_core_m2(in, scaled(v, cfg.alpha), &diag);
  return make_point(epsilon, s, MethodKind::AnalyticM2, std::move(diag));
}

SMatrixPoint s_matrix_m3(double epsilon, const SeparablePotential& v,
                         const ChannelConfig& cfg) {
  cfg.validate();
  v.validate();
  if (v.m != 3) fail(ErrorKind::DomainError, "s_matrix_m3: V must be 3x3");
  KinematicState state = kinematic_state(epsilon, cfg);
  detail::FormulaInputs in = detail::formula_inputs(epsilon, state, cfg);
  std::map<std::string, double> diag;
  std::complex<double> s = detail::analytic_core_m3(in, scaled(v, cfg.alpha), &diag);
  return make_point(epsilon, s, MethodKind::AnalyticM3, std::move(diag));
}

SMatrixPoint s_matrix_analytic(double epsilon, const SeparablePotential& v,
                               const ChannelConfig& cfg) {
  switch (v.m) {
    case 1:
      return s_matrix_m1(epsilon, v.at(0, 0), cfg);
    case 2:
      return s_matrix_m2(epsilon, v, cfg);
    case 3:
      return s_matrix_m3(epsilon, v, cfg);
    default:
      fail(ErrorKind::DomainError,
           "analytic closed forms exist for M <= 3; use the numeric path");
  }
}

std::vector<double> unwrap_phase(const std::vector<SMatrixPoint>& points) {
  std::vector<double> out;
  out.reserve(points.size());
  if (points.empty()) return out;
  constexpr double pi = std::numbers::pi;
  out.push_back(points.front().tau);
  for (size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].epsilon > points[i - 1].epsilon)) {
      fail(ErrorKind::DomainError, "unwrap_phase: points must be ordered by energy");
    }
    if (points[i].method.kind != points.front().method.kind) {
      fail(ErrorKind::DomainError, "unwrap_phase: mixed methods in one sequence");
    }
    double d = points[i].tau - out.back();
    double adj = d - pi * std::round(d / pi);
    if (std::abs(std::abs(adj) - 0.5 * pi) < 1e-9) {
      fail(ErrorKind::GridTooCoarse,
           "unwrap_phase: step near eps = " + std::to_string(points[i].epsilon) +
               " is branch-ambiguous; refine the grid");
    }
    out.push_back(out.back() + adj);
  }
  return out;
}

}  // namespace jmatrix
