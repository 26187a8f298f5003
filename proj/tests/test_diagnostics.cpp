#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "diagnostics.hpp"

using namespace perihyp;

namespace {

constexpr double kPi = 3.14159265358979323846;

ProblemConfig unit_coupling_config() {
  ProblemConfig config;
  config.omega = 2.0 * kPi;
  config.b = PiecewiseCoefficient(1.0);
  config.c = PiecewiseCoefficient(1.0);
  return config;
}

}  // namespace

TEST_CASE("bounded family construction") {
  ProblemConfig config;
  config.omega = 2.0 * kPi;
  CHECK_THROWS_AS(noncompact_sequence(config, 0), std::invalid_argument);

  const FourierField field = noncompact_sequence(config, 3);
  REQUIRE(field.has_mode(3));
  // satisfies the reflection conditions with r0 = r1 = 0 exactly
  CHECK(std::abs(field.mode(3).u.eval(0.0)) < 1e-15);
  CHECK(std::abs(field.mode(3).v.eval(1.0)) < 1e-15);

  // graph norm is the same for every member; mutual distances stay bounded away
  // from zero
  const double n1 = norm_v(noncompact_sequence(config, 1), config);
  const double n7 = norm_v(noncompact_sequence(config, 7), config);
  CHECK(n1 == doctest::Approx(std::sqrt(8.0 / 3.0)).epsilon(1e-11));
  CHECK(std::abs(n1 - n7) < 1e-10);
  CHECK(norm_w(noncompact_sequence(config, 5), config.omega) ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-11));
}

TEST_CASE("smoothing table is identically zero without coupling") {
  ProblemConfig config;
  config.omega = 2.0 * kPi;
  config.a = PiecewiseCoefficient(0.3);
  const auto rows = smoothing_decay(config, {0, 1, 4});
  for (const auto& row : rows) CHECK(row.output_norm == 0.0);
}

TEST_CASE("k = 0 smoothing entry matches the hand composition") {
  // stage 1: (u,v) = (x, 0); coupling -> (0, x); stage 2: (0, (1-x^2)/2);
  // coupling -> ((1-x^2)/2, 0); L2 norm = (1/2) sqrt(8/15)
  const auto rows = smoothing_decay(unit_coupling_config(), {0});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].output_norm ==
        doctest::Approx(0.5 * std::sqrt(8.0 / 15.0)).epsilon(1e-9));
}

TEST_CASE("decay rate of the twice-smoothed output") {
  const auto rows = smoothing_decay(unit_coupling_config(), {1, 2, 4, 8, 16, 32});
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].output_norm < rows[i - 1].output_norm);
  const double slope = log_log_slope(rows);
  CHECK(slope > -1.3);
  CHECK(slope < -0.7);
}

TEST_CASE("smoothing requires the nonresonance condition") {
  ProblemConfig config = unit_coupling_config();
  config.omega = kPi;
  config.r0 = 1.0;
  config.r1 = 1.0;
  CHECK_THROWS_AS(smoothing_decay(config, {1, 2}), ConditionViolated);
}

TEST_CASE("translation modulus") {
  GridPtr grid = SegmentGrid::create({0.0, 1.0}, 24);
  FourierField flat(1.0);
  flat.set_mode(0, ModeFunction::from_function(grid, [](double) { return Complex(1.0); }),
                ModeFunction());
  CHECK(shift_modulus(flat, 2.0 * kPi, 0.0, 0.0) == 0.0);
  // shifting the indicator by 0.1 loses exactly that much mass at the boundary
  CHECK(shift_modulus(flat, 2.0 * kPi, 0.1, 0.37) ==
        doctest::Approx(std::sqrt(0.1)).epsilon(1e-10));
  CHECK_THROWS_AS(shift_modulus(flat, 2.0 * kPi, 1.0, 0.0), std::domain_error);

  // the bounded family does not flatten out: a half-period time shift keeps the
  // modulus large for every member
  ProblemConfig config;
  config.omega = 2.0 * kPi;
  for (long l : {2L, 9L}) {
    const FourierField member = noncompact_sequence(config, l);
    const double tau = kPi / (static_cast<double>(l) * config.omega);
    CHECK(shift_modulus(member, config.omega, 0.0, tau) >= 0.5);
    CHECK(shift_modulus(member, config.omega, 0.0, tau) ==
          doctest::Approx(std::sqrt(8.0 / 3.0)).epsilon(1e-10));
  }
}

TEST_CASE("slope fit recovers an exact power law") {
  std::vector<SmoothingRow> rows;
  for (long k : {1L, 3L, 9L, 27L}) {
    SmoothingRow row;
    row.k = k;
    row.output_norm = 2.0 * std::pow(1.0 + k, -1.25);
    rows.push_back(row);
  }
  CHECK(log_log_slope(rows) == doctest::Approx(-1.25).epsilon(1e-12));
  CHECK_THROWS_AS(log_log_slope({}), std::invalid_argument);
}
