#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace perihyp {

/// Real piecewise-constant function on [0,1], stored as strictly increasing
/// breakpoints (first 0, last 1) and one value per segment.  This is the
/// coefficient class the whole solver works with: antiderivatives are exact
/// piecewise-linear functions and every per-segment quantity has a closed form.
class PiecewiseCoefficient {
 public:
  PiecewiseCoefficient();                    // identically zero
  explicit PiecewiseCoefficient(double constant_value);
  PiecewiseCoefficient(std::vector<double> breakpoints, std::vector<double> values);

  /// Value at x; right-continuous at interior breakpoints, left limit at x=1.
  double value(double x) const;
  double segment_value(std::size_t segment) const { return values_[segment]; }

  /// Exact antiderivative with antiderivative(0) = 0.  Throws std::domain_error
  /// for x outside [0,1].
  double antiderivative(double x) const;

  double total_variation() const;

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t num_segments() const { return values_.size(); }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

/// Union of the breakpoint sets of several coefficients (deduplicated).
std::vector<double> merge_breakpoints(
    std::initializer_list<const PiecewiseCoefficient*> coefficients);

/// Full problem instance: frequency, norm weight exponent, reflection
/// coefficients and the four coefficient functions.
struct ProblemConfig {
  double omega = 1.0;
  double gamma = 1.0;
  double r0 = 0.0;
  double r1 = 0.0;
  PiecewiseCoefficient a, b, c, d;

  /// Throws std::invalid_argument if omega <= 0 or gamma < 1.
  void validate() const;

  double alpha(double x) const { return a.antiderivative(x); }
  double delta(double x) const { return d.antiderivative(x); }

  /// Union of the breakpoints of all four coefficients.
  std::vector<double> merged_breakpoints() const;
};

struct ConditionReport {
  double lhs = 0.0;               // |r0 r1|
  double rhs = 0.0;               // exp(alpha(1) + delta(1))
  bool satisfied = false;
  double delta_lower_bound = 0.0; // |e^{delta(1)} - |r0 r1| e^{-alpha(1)}|
};

/// Checks the nonresonance condition |r0 r1| != exp(int(a+d)).  Near-equality
/// (within 1e-9 * max(1, rhs)) is reported as a violation, since the lower
/// bound on the round-trip determinant degenerates there.
ConditionReport check_condition(const ProblemConfig& config);

/// Round-trip determinant of mode k:
///   e^{ik omega + delta(1)} - r0 r1 e^{-ik omega - alpha(1)}.
std::complex<double> mode_determinant(const ProblemConfig& config, long k);

}  // namespace perihyp
