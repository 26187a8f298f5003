#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fourier_field.hpp"
#include "oracle.hpp"

using namespace perihyp;

namespace {

constexpr double kPi = 3.14159265358979323846;

GridPtr fine_grid(int degree = 48) { return SegmentGrid::create({0.0, 1.0}, degree); }

/// Single-mode bounded family member at k = l: the weight (1+l^2)^{-1/2}
/// cancels the norm weight at gamma = 1.
FourierField weighted_wave(long l, double omega) {
  const double scale = 1.0 / std::sqrt(1.0 + static_cast<double>(l * l));
  GridPtr grid = fine_grid(48 + 8 * static_cast<int>(std::abs(l)));
  FourierField field(1.0);
  field.set_mode(l,
                 ModeFunction::from_function(grid,
                                             [=](double x) {
                                               return scale *
                                                      std::exp(Complex(0.0, -l * omega * x)) *
                                                      x;
                                             }),
                 ModeFunction::from_function(grid, [=](double x) {
                   return scale * std::exp(Complex(0.0, l * omega * x)) * (x - 1.0);
                 }));
  return field;
}

}  // namespace

TEST_CASE("set_mode pads the missing component with zero") {
  FourierField field(1.0);
  field.set_mode(2, ModeFunction::from_function(fine_grid(8), [](double x) {
                   return Complex(x, 0.0);
                 }),
                 ModeFunction());
  CHECK(field.mode(2).v.eval(0.7) == Complex(0.0));
}

TEST_CASE("conjugate completion and symmetry defect") {
  FourierField field(1.0);
  field.set_mode(1, ModeFunction::from_function(fine_grid(12),
                                                [](double x) {
                                                  return Complex(x, 1.0 - x);
                                                }),
                 ModeFunction());
  field.complete_conjugate_modes();
  REQUIRE(field.has_mode(-1));
  CHECK(field.conjugate_symmetry_defect() < 1e-15);
  CHECK(std::abs(field.mode(-1).u.eval(0.25) - Complex(0.25, -0.75)) < 1e-14);

  // breaking the pairing is detected
  FourierField bad(1.0);
  bad.set_mode(1, ModeFunction::from_function(fine_grid(8),
                                              [](double) { return Complex(0.0, 1.0); }),
               ModeFunction());
  bad.set_mode(-1, ModeFunction::from_function(fine_grid(8),
                                               [](double) { return Complex(0.0, 1.0); }),
               ModeFunction());
  CHECK(bad.conjugate_symmetry_defect() > 1.0);
}

TEST_CASE("weighted norm on the canonical bounded family") {
  const double omega = 2.0 * kPi;
  const FourierField field = weighted_wave(1, omega);
  const double u_norm = norm_h0gamma(field, Component::first, 1.0, omega);
  CHECK(u_norm * u_norm == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  const double v_norm = norm_h0gamma(field, Component::second, 1.0, omega);
  CHECK(v_norm * v_norm == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(norm_w(field, omega) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("graph norm decomposes into component plus transport parts") {
  const double omega = 2.0 * kPi;
  ProblemConfig config;
  config.omega = omega;
  for (long l : {1L, 4L}) {
    const FourierField field = weighted_wave(l, omega);
    const FourierField image = transport_image(field, omega);
    // both transported components are unimodular waves of unit weighted norm
    const double tu = norm_h0gamma(image, Component::first, 1.0, omega);
    const double tv = norm_h0gamma(image, Component::second, 1.0, omega);
    CHECK(tu * tu == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(tv * tv == doctest::Approx(1.0).epsilon(1e-11));
    const double total = norm_v(field, config);
    CHECK(total * total == doctest::Approx(8.0 / 3.0).epsilon(1e-11));
  }
}

TEST_CASE("inner product against direct quadrature") {
  const double omega = 2.0;
  GridPtr grid = fine_grid(32);
  const auto u1 = [](double x) { return Complex(x, 0.5 * x); };
  const auto v1 = [](double x) { return Complex(std::sin(x), -x); };
  const auto u2 = [](double x) { return Complex(1.0 - x, x * x); };
  const auto v2 = [](double x) { return Complex(std::cos(x), 0.3); };

  FourierField x_field(1.0), y_field(1.0);
  x_field.set_mode(1, ModeFunction::from_function(grid, u1),
                   ModeFunction::from_function(grid, v1));
  y_field.set_mode(1, ModeFunction::from_function(grid, u2),
                   ModeFunction::from_function(grid, v2));
  x_field.complete_conjugate_modes();
  y_field.complete_conjugate_modes();

  const Complex mode_sum = oracle::integrate(
      [&](double x) {
        return u1(x) * std::conj(u2(x)) + v1(x) * std::conj(v2(x));
      },
      0.0, 1.0, 2000);
  // modes +-1 contribute conjugate values; the sum is twice the real part
  const double expected = 2.0 * mode_sum.real();
  CHECK(inner_product(x_field, y_field, omega) ==
        doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("inner product rejects non-symmetric fields") {
  FourierField lopsided(1.0);
  lopsided.set_mode(3, ModeFunction::from_function(fine_grid(8),
                                                   [](double) {
                                                     return Complex(1.0, 0.0);
                                                   }),
                    ModeFunction());
  CHECK_THROWS_AS(inner_product(lopsided, lopsided, 1.0), std::invalid_argument);
}

TEST_CASE("synthesis reproduces the real-valued space-time function") {
  const double omega = 2.0 * kPi;
  GridPtr grid = fine_grid(24);
  FourierField field(1.0);
  field.set_mode(0, ModeFunction::from_function(grid,
                                                [](double x) { return Complex(x, 0.0); }),
                 ModeFunction::from_function(grid, [](double) { return Complex(0.5, 0.0); }));
  field.set_mode(1, ModeFunction::from_function(grid,
                                                [](double x) {
                                                  return Complex(0.0, x);
                                                }),
                 ModeFunction::from_function(grid, [](double x) {
                   return Complex(1.0 - x, 0.0);
                 }));
  field.complete_conjugate_modes();
  for (double x : {0.0, 0.3, 0.9}) {
    for (double t : {0.0, 0.11, 0.47}) {
      const Complex wave = std::exp(Complex(0.0, omega * t));
      const double expected_u = x + 2.0 * (Complex(0.0, x) * wave).real();
      const double expected_v = 0.5 + 2.0 * (Complex(1.0 - x, 0.0) * wave).real();
      const auto [value_u, value_v] = synthesize(field, x, t, omega);
      CHECK(value_u == doctest::Approx(expected_u).epsilon(1e-12));
      CHECK(value_v == doctest::Approx(expected_v).epsilon(1e-12));
    }
  }
  const auto boundary = trace(field, 0.0);
  CHECK(std::abs(boundary.at(1).first - Complex(0.0, 0.0)) < 1e-13);
  CHECK(std::abs(boundary.at(1).second - Complex(1.0, 0.0)) < 1e-13);
}
