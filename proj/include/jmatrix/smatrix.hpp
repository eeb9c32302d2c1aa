#pragma once

#include <complex>
#include <map>
#include <string>

namespace jmatrix {

enum class MethodKind { AnalyticM1, AnalyticM2, AnalyticM3, Numeric };

const char* to_string(MethodKind kind);

struct Method {
  MethodKind kind = MethodKind::Numeric;
  int n_size = 0;  // truncation for Numeric, unused otherwise
};

/// Per-energy result: S = e^{2 i tau} plus intermediate magnitudes useful
/// for auditing (denominator sizes, auxiliary phases, condition numbers).
struct SMatrixPoint {
  double epsilon = 0.0;
  std::complex<double> s_value{1.0, 0.0};
  double tau = 0.0;  // principal branch (-pi/2, pi/2]
  Method method;
  std::map<std::string, double> diagnostics;
};

}  // namespace jmatrix
