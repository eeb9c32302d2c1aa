#include "jmatrix/errors.hpp"

#include "jmatrix/smatrix.hpp"

namespace jmatrix {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotScatteringEnergy: return "NotScatteringEnergy";
    case ErrorKind::KinematicPole: return "KinematicPole";
    case ErrorKind::ZeroAmplitude: return "ZeroAmplitude";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::NearSingularFormula: return "NearSingularFormula";
    case ErrorKind::SingularInnerSystem: return "SingularInnerSystem";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
  }
  return "UnknownError";
}

const char* to_string(MethodKind kind) {
  switch (kind) {
    case MethodKind::AnalyticM1: return "analytic_m1";
    case MethodKind::AnalyticM2: return "analytic_m2";
    case MethodKind::AnalyticM3: return "analytic_m3";
    case MethodKind::Numeric: return "numeric";
  }
  return "unknown";
}

}  // namespace jmatrix
