#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "coefficients.hpp"

using namespace perihyp;

TEST_CASE("piecewise coefficient layout validation") {
  CHECK_THROWS_AS(PiecewiseCoefficient({0.0, 0.5}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseCoefficient({0.0, 0.7, 0.5, 1.0}, {1.0, 2.0, 3.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseCoefficient({0.1, 1.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseCoefficient({0.0, 1.0}, {}), std::invalid_argument);
  CHECK_NOTHROW(PiecewiseCoefficient({0.0, 0.25, 1.0}, {2.0, -1.0}));
}

TEST_CASE("value is right-continuous with a left limit at 1") {
  const PiecewiseCoefficient c({0.0, 0.5, 1.0}, {2.0, -3.0});
  CHECK(c.value(0.0) == 2.0);
  CHECK(c.value(0.5) == -3.0);  // right segment wins at interior breakpoints
  CHECK(c.value(0.499999) == 2.0);
  CHECK(c.value(1.0) == -3.0);
  CHECK_THROWS_AS(c.value(-0.01), std::domain_error);
  CHECK_THROWS_AS(c.value(1.01), std::domain_error);
}

TEST_CASE("antiderivative is exact and piecewise linear") {
  const PiecewiseCoefficient c({0.0, 0.25, 0.75, 1.0}, {4.0, 0.0, -2.0});
  CHECK(c.antiderivative(0.0) == 0.0);
  CHECK(c.antiderivative(0.25) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.antiderivative(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.antiderivative(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(c.total_variation() == doctest::Approx(6.0));
}

TEST_CASE("breakpoint merging deduplicates") {
  const PiecewiseCoefficient a({0.0, 0.5, 1.0}, {1.0, 2.0});
  const PiecewiseCoefficient b({0.0, 0.25, 0.5, 1.0}, {1.0, 2.0, 3.0});
  const auto merged = merge_breakpoints({&a, &b});
  CHECK(merged == std::vector<double>{0.0, 0.25, 0.5, 1.0});
}

TEST_CASE("config validation") {
  ProblemConfig config;
  config.omega = 0.0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.omega = 1.0;
  config.gamma = 0.5;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.gamma = 1.0;
  CHECK_NOTHROW(config.validate());
}

static ProblemConfig log2_config() {
  ProblemConfig config;
  config.omega = 2.0 * M_PI;
  config.r0 = 1.0;
  config.r1 = 1.0;
  config.a = PiecewiseCoefficient(std::log(2.0));
  return config;
}

TEST_CASE("nonresonance report for the log-2 damping example") {
  const ConditionReport report = check_condition(log2_config());
  CHECK(report.lhs == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(report.rhs == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(report.satisfied);
  CHECK(report.delta_lower_bound == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("near-equality counts as a violation") {
  ProblemConfig config;
  config.omega = 1.0;
  config.r0 = 1.0;
  config.r1 = 1.0;  // |r0 r1| = 1 = e^0 exactly
  CHECK_FALSE(check_condition(config).satisfied);

  config.r1 = 1.0 + 1e-12;  // inside the relative guard band
  CHECK_FALSE(check_condition(config).satisfied);

  config.r1 = 1.0 + 1e-6;
  CHECK(check_condition(config).satisfied);
}

TEST_CASE("round-trip determinant matches the direct formula") {
  const ProblemConfig config = log2_config();
  for (long k : {-7L, -1L, 0L, 1L, 13L}) {
    const std::complex<double> ikw(0.0, k * config.omega);
    const std::complex<double> expected =
        std::exp(ikw + config.delta(1.0)) -
        config.r0 * config.r1 * std::exp(-ikw - config.alpha(1.0));
    const std::complex<double> got = mode_determinant(config, k);
    CHECK(std::abs(got - expected) < 1e-14);
  }
  // the k = 0 determinant attains the lower bound exactly here
  CHECK(std::abs(mode_determinant(config, 0)) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("determinant modulus never drops below the uniform lower bound") {
  ProblemConfig config;
  config.omega = 1.7;
  config.r0 = 0.8;
  config.r1 = -0.9;
  config.a = PiecewiseCoefficient({0.0, 0.3, 1.0}, {0.4, -0.2});
  config.d = PiecewiseCoefficient({0.0, 0.6, 1.0}, {-0.1, 0.5});
  const double bound = check_condition(config).delta_lower_bound;
  CHECK(bound > 0.0);
  for (long k = -500; k <= 500; ++k)
    CHECK(std::abs(mode_determinant(config, k)) >= bound - 1e-12);
}
