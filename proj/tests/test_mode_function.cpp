#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mode_function.hpp"
#include "oracle.hpp"

using namespace perihyp;

namespace {

GridPtr grid3(int degree = 16) {
  return SegmentGrid::create({0.0, 0.3, 0.7, 1.0}, degree);
}

}  // namespace

TEST_CASE("grid bookkeeping") {
  GridPtr g = grid3();
  CHECK(g->num_segments() == 3);
  CHECK(g->segment_of(0.0) == 0);
  CHECK(g->segment_of(0.3) == 1);  // right-continuous
  CHECK(g->segment_of(1.0) == 2);
  CHECK(g->refines({0.0, 0.7, 1.0}));
  CHECK_FALSE(g->refines({0.0, 0.5, 1.0}));
  CHECK_THROWS_AS(SegmentGrid::create({0.1, 1.0}, 8), std::invalid_argument);
  CHECK_THROWS_AS(SegmentGrid::create({0.0, 0.5, 0.5, 1.0}, 8), std::invalid_argument);
}

TEST_CASE("sampling and evaluation of a smooth function") {
  const auto fn = [](double x) { return std::exp(Complex(0.0, 5.0 * x)) * x; };
  ModeFunction f = ModeFunction::from_function(grid3(24), fn);
  for (double x : {0.0, 0.15, 0.3, 0.61, 0.99, 1.0})
    CHECK(std::abs(f.eval(x) - fn(x)) < 1e-12);
}

TEST_CASE("derivative by spectral differentiation") {
  const auto fn = [](double x) { return std::exp(Complex(0.0, 4.0 * x)); };
  ModeFunction f = ModeFunction::from_function(grid3(28), fn);
  ModeFunction d = f.derivative();
  for (double x : {0.05, 0.3, 0.5, 0.95})
    CHECK(std::abs(d.eval(x) - Complex(0.0, 4.0) * fn(x)) < 1e-10);
}

TEST_CASE("piecewise scaling requires a refining grid") {
  const PiecewiseCoefficient coef({0.0, 0.3, 1.0}, {2.0, -1.0});
  ModeFunction f = ModeFunction::from_function(grid3(), [](double) { return Complex(1.0); });
  ModeFunction scaled = f.scaled_by(coef);
  CHECK(scaled.eval(0.1).real() == doctest::Approx(2.0));
  CHECK(scaled.eval(0.9).real() == doctest::Approx(-1.0));

  ModeFunction coarse = ModeFunction::from_function(
      SegmentGrid::create({0.0, 0.5, 1.0}, 8), [](double) { return Complex(1.0); });
  CHECK_THROWS_AS(coarse.scaled_by(coef), std::invalid_argument);
}

TEST_CASE("resampling onto a refinement is exact for polynomials") {
  const auto fn = [](double x) { return Complex(x * x * x - 2.0 * x, x); };
  ModeFunction f = ModeFunction::from_function(
      SegmentGrid::create({0.0, 0.5, 1.0}, 8), fn);
  ModeFunction fine = f.resampled(SegmentGrid::create({0.0, 0.25, 0.5, 0.8, 1.0}, 12));
  for (double x : {0.1, 0.25, 0.49, 0.77, 1.0})
    CHECK(std::abs(fine.eval(x) - fn(x)) < 1e-14);
}

TEST_CASE("L2 quantities against Simpson quadrature") {
  const auto fn = [](double x) {
    return std::exp(Complex(0.0, 3.0 * x)) * (1.0 + x);
  };
  const auto gn = [](double x) { return Complex(std::cos(2.0 * x), x * x); };
  ModeFunction f = ModeFunction::from_function(grid3(24), fn);
  ModeFunction g = ModeFunction::from_function(
      SegmentGrid::create({0.0, 0.5, 1.0}, 24), gn);

  const Complex direct = oracle::integrate(
      [&](double x) { return fn(x) * std::conj(gn(x)); }, 0.0, 1.0, 4000);
  CHECK(std::abs(l2_inner_product(f, g) - direct) < 1e-10);

  const Complex norm = oracle::integrate(
      [&](double x) { return Complex(std::norm(fn(x)), 0.0); }, 0.0, 1.0, 4000);
  CHECK(f.l2_norm_sq() == doctest::Approx(norm.real()).epsilon(1e-10));
}

TEST_CASE("arithmetic and conjugation") {
  GridPtr g = grid3();
  ModeFunction f = ModeFunction::from_function(g, [](double x) { return Complex(x, 1.0); });
  ModeFunction h = ModeFunction::from_function(g, [](double x) { return Complex(1.0, -x); });
  ModeFunction sum = f + h;
  CHECK(std::abs(sum.eval(0.5) - Complex(1.5, 0.5)) < 1e-14);
  ModeFunction conj = f.conjugate();
  CHECK(std::abs(conj.eval(0.25) - Complex(0.25, -1.0)) < 1e-14);
  ModeFunction scaled = Complex(0.0, 2.0) * f;
  CHECK(std::abs(scaled.eval(0.5) - Complex(-2.0, 1.0)) < 1e-14);
}

TEST_CASE("segmented integral handles integrands with kinks at the cuts") {
  const Complex value = segmented_integral(
      {0.0, 0.5, 1.0}, 16,
      [](double x) { return Complex(std::abs(x - 0.5), 0.0); });
  CHECK(value.real() == doctest::Approx(0.25).epsilon(1e-13));
}
