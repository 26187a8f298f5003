#pragma once

#include <complex>
#include <stdexcept>

#include "coefficients.hpp"

namespace perihyp {

/// The nonresonance condition |r0 r1| != exp(int(a+d)) fails (or is violated
/// numerically inside a solve that relies on it).
struct ConditionViolated : std::runtime_error {
  explicit ConditionViolated(ConditionReport r)
      : std::runtime_error("nonresonance condition violated"), report(r) {}
  ConditionReport report;
};

/// The per-mode boundary determinant vanished: the mode is resonant.
struct SingularModeError : std::runtime_error {
  SingularModeError(long mode, std::complex<double> determinant,
                    std::complex<double> rhs)
      : std::runtime_error("singular mode"),
        k(mode),
        boundary_determinant(determinant),
        boundary_rhs(rhs) {}
  long k;
  std::complex<double> boundary_determinant;
  std::complex<double> boundary_rhs;  // right side of the scalar boundary equation
};

}  // namespace perihyp
