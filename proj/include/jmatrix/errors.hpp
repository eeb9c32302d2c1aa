#pragma once

#include <stdexcept>
#include <string>

namespace jmatrix {

enum class ErrorKind {
  CapExceeded,
  DegenerateParameters,
  ConvergenceFailure,
  DomainError,
  NotScatteringEnergy,
  KinematicPole,
  ZeroAmplitude,
  ConsistencyFailure,
  NearSingularFormula,
  SingularInnerSystem,
  GridTooCoarse,
};

const char* to_string(ErrorKind kind);

/// Library-wide exception carrying a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace jmatrix
