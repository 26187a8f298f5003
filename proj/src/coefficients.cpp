#include "coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace perihyp {

namespace {

void check_layout(const std::vector<double>& breakpoints,
                  const std::vector<double>& values) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("coefficient needs at least two breakpoints");
  if (breakpoints.front() != 0.0 || breakpoints.back() != 1.0)
    throw std::invalid_argument("coefficient breakpoints must start at 0 and end at 1");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i] > breakpoints[i - 1]))
      throw std::invalid_argument("coefficient breakpoints must be strictly increasing");
  if (values.size() + 1 != breakpoints.size())
    throw std::invalid_argument("coefficient needs exactly one value per segment");
  for (double v : values)
    if (!std::isfinite(v))
      throw std::invalid_argument("coefficient values must be finite");
}

}  // namespace

PiecewiseCoefficient::PiecewiseCoefficient()
    : breakpoints_{0.0, 1.0}, values_{0.0} {}

PiecewiseCoefficient::PiecewiseCoefficient(double constant_value)
    : breakpoints_{0.0, 1.0}, values_{constant_value} {
  if (!std::isfinite(constant_value))
    throw std::invalid_argument("coefficient values must be finite");
}

PiecewiseCoefficient::PiecewiseCoefficient(std::vector<double> breakpoints,
                                           std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  check_layout(breakpoints_, values_);
}

double PiecewiseCoefficient::value(double x) const {
  if (x < 0.0 || x > 1.0)
    throw std::domain_error("coefficient argument outside [0,1]");
  if (x >= breakpoints_[breakpoints_.size() - 2]) return values_.back();
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double PiecewiseCoefficient::antiderivative(double x) const {
  if (x < 0.0 || x > 1.0)
    throw std::domain_error("antiderivative argument outside [0,1]");
  double sum = 0.0;
  for (std::size_t j = 0; j < values_.size(); ++j) {
    const double left = breakpoints_[j];
    if (x <= left) break;
    const double right = std::min(x, breakpoints_[j + 1]);
    sum += values_[j] * (right - left);
  }
  return sum;
}

double PiecewiseCoefficient::total_variation() const {
  double tv = 0.0;
  for (std::size_t j = 1; j < values_.size(); ++j)
    tv += std::abs(values_[j] - values_[j - 1]);
  return tv;
}

std::vector<double> merge_breakpoints(
    std::initializer_list<const PiecewiseCoefficient*> coefficients) {
  std::vector<double> merged;
  for (const PiecewiseCoefficient* c : coefficients)
    merged.insert(merged.end(), c->breakpoints().begin(), c->breakpoints().end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

void ProblemConfig::validate() const {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  if (!(gamma >= 1.0)) throw std::invalid_argument("gamma must be >= 1");
  if (!std::isfinite(r0) || !std::isfinite(r1))
    throw std::invalid_argument("reflection coefficients must be finite");
}

std::vector<double> ProblemConfig::merged_breakpoints() const {
  return merge_breakpoints({&a, &b, &c, &d});
}

ConditionReport check_condition(const ProblemConfig& config) {
  ConditionReport report;
  report.lhs = std::abs(config.r0 * config.r1);
  report.rhs = std::exp(config.alpha(1.0) + config.delta(1.0));
  report.satisfied = std::abs(report.lhs - report.rhs) > 1e-9 * std::max(1.0, report.rhs);
  report.delta_lower_bound =
      std::abs(std::exp(config.delta(1.0)) - report.lhs * std::exp(-config.alpha(1.0)));
  return report;
}

std::complex<double> mode_determinant(const ProblemConfig& config, long k) {
  const double phase = static_cast<double>(k) * config.omega;
  const std::complex<double> i(0.0, 1.0);
  return std::exp(i * phase + config.delta(1.0)) -
         config.r0 * config.r1 * std::exp(-i * phase - config.alpha(1.0));
}

}  // namespace perihyp
