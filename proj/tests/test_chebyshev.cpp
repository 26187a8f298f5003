#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "chebyshev.hpp"

using namespace perihyp;

TEST_CASE("node layout") {
  const ChebyshevBasis& basis = chebyshev_basis(16);
  REQUIRE(basis.nodes.size() == 17);
  CHECK(basis.nodes.front() == -1.0);
  CHECK(basis.nodes.back() == 1.0);
  for (std::size_t i = 0; i + 1 < basis.nodes.size(); ++i)
    CHECK(basis.nodes[i] < basis.nodes[i + 1]);
}

TEST_CASE("quadrature weights integrate polynomials exactly") {
  const ChebyshevBasis& basis = chebyshev_basis(12);
  for (int p = 0; p <= 12; ++p) {
    double sum = 0.0;
    for (std::size_t i = 0; i < basis.nodes.size(); ++i)
      sum += basis.quad_weights[i] * std::pow(basis.nodes[i], p);
    const double exact = (p % 2) ? 0.0 : 2.0 / (p + 1);
    CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("differentiation matrix is exact on polynomials") {
  const int n = 10;
  const ChebyshevBasis& basis = chebyshev_basis(n);
  // f(x) = x^7 - 3x^2 + 2, f'(x) = 7x^6 - 6x
  std::vector<double> samples(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double x = basis.nodes[i];
    samples[i] = std::pow(x, 7) - 3 * x * x + 2;
  }
  for (int i = 0; i <= n; ++i) {
    double d = 0.0;
    for (int j = 0; j <= n; ++j) d += basis.diff[i * (n + 1) + j] * samples[j];
    const double x = basis.nodes[i];
    CHECK(d == doctest::Approx(7 * std::pow(x, 6) - 6 * x).epsilon(1e-11));
  }
}

TEST_CASE("integration matrix produces the antiderivative vanishing at -1") {
  const int n = 14;
  const ChebyshevBasis& basis = chebyshev_basis(n);
  // f(x) = 4x^3 - 2x, F(x) = x^4 - x^2 - (1 - 1) = x^4 - x^2 with F(-1) = 0
  std::vector<double> samples(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double x = basis.nodes[i];
    samples[i] = 4 * x * x * x - 2 * x;
  }
  for (int i = 0; i <= n; ++i) {
    double value = 0.0;
    for (int j = 0; j <= n; ++j) value += basis.integral[i * (n + 1) + j] * samples[j];
    const double x = basis.nodes[i];
    const double expected = (std::pow(x, 4) - x * x) - (1.0 - 1.0);
    CHECK(value == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("integration then differentiation is the identity") {
  const int n = 20;
  const ChebyshevBasis& basis = chebyshev_basis(n);
  std::vector<double> samples(n + 1);
  for (int i = 0; i <= n; ++i) samples[i] = std::exp(basis.nodes[i]);
  std::vector<double> anti(n + 1, 0.0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) anti[i] += basis.integral[i * (n + 1) + j] * samples[j];
  for (int i = 0; i <= n; ++i) {
    double d = 0.0;
    for (int j = 0; j <= n; ++j) d += basis.diff[i * (n + 1) + j] * anti[j];
    CHECK(d == doctest::Approx(samples[i]).epsilon(1e-10));
  }
}

TEST_CASE("barycentric interpolation is spectrally accurate and exact at nodes") {
  const int n = 24;
  const ChebyshevBasis& basis = chebyshev_basis(n);
  std::vector<double> samples(n + 1);
  for (int i = 0; i <= n; ++i) samples[i] = std::sin(3.0 * basis.nodes[i]);
  for (int i = 0; i <= n; ++i)
    CHECK(basis.interpolate(std::span<const double>(samples), basis.nodes[i]) ==
          samples[i]);
  for (double x : {-0.93, -0.41, 0.0, 0.27, 0.88}) {
    CHECK(basis.interpolate(std::span<const double>(samples), x) ==
          doctest::Approx(std::sin(3.0 * x)).epsilon(1e-13));
  }
}

TEST_CASE("basis cache returns stable references") {
  const ChebyshevBasis& first = chebyshev_basis(8);
  const ChebyshevBasis& second = chebyshev_basis(8);
  CHECK(&first == &second);
}
