#include "chebyshev.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace perihyp {

namespace {

// Interpolation coefficients (samples -> Chebyshev coefficients), exact for
// polynomials of degree <= n.  Nodes are ascending, nodes[i] = cos((n-i)pi/n).
std::vector<double> coefficient_matrix(int n) {
  std::vector<double> c(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j) {
    const double cj = (j == 0 || j == n) ? 2.0 : 1.0;
    for (int i = 0; i <= n; ++i) {
      const int m = n - i;  // index in the descending cos(m pi / n) layout
      const double cm = (m == 0 || m == n) ? 2.0 : 1.0;
      c[static_cast<std::size_t>(j) * (n + 1) + i] =
          2.0 / (n * cj * cm) * std::cos(j * m * std::numbers::pi / n);
    }
  }
  return c;
}

std::unique_ptr<ChebyshevBasis> build_basis(int n) {
  if (n < 1) throw std::invalid_argument("chebyshev degree must be >= 1");
  auto basis = std::make_unique<ChebyshevBasis>();
  basis->degree = n;
  basis->nodes.resize(n + 1);
  basis->bary_weights.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    basis->nodes[i] = -std::cos(i * std::numbers::pi / n);
    double w = (i % 2 == 0) ? 1.0 : -1.0;
    if (i == 0 || i == n) w *= 0.5;
    basis->bary_weights[i] = w;
  }
  basis->nodes[0] = -1.0;
  basis->nodes[n] = 1.0;
  if (n % 2 == 0) basis->nodes[n / 2] = 0.0;

  const std::vector<double> coeff = coefficient_matrix(n);

  // Antiderivative in coefficient space: degree n polynomial integrates to
  // degree n+1, with the constant fixed by F(-1) = 0.
  const int ni = n + 2;  // number of antiderivative coefficients
  std::vector<double> integ_coeff(static_cast<std::size_t>(ni) * (n + 1), 0.0);
  auto coeff_at = [&](int j, int i) -> double {
    if (j < 0 || j > n) return 0.0;
    return coeff[static_cast<std::size_t>(j) * (n + 1) + i];
  };
  for (int i = 0; i <= n; ++i) {
    // b_1 = a_0 - a_2 / 2;  b_j = (a_{j-1} - a_{j+1}) / (2j) for j >= 2
    integ_coeff[1 * (n + 1) + i] = coeff_at(0, i) - 0.5 * coeff_at(2, i);
    for (int j = 2; j <= n + 1; ++j)
      integ_coeff[static_cast<std::size_t>(j) * (n + 1) + i] =
          (coeff_at(j - 1, i) - coeff_at(j + 1, i)) / (2.0 * j);
    double b0 = 0.0;
    for (int j = 1; j <= n + 1; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      b0 -= sign * integ_coeff[static_cast<std::size_t>(j) * (n + 1) + i];
    }
    integ_coeff[0 * (n + 1) + i] = b0;
  }

  // Evaluate the antiderivative coefficients back at the nodes.
  basis->integral.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0.0);
  for (int r = 0; r <= n; ++r) {
    const double theta = (n - r) * std::numbers::pi / n;
    for (int i = 0; i <= n; ++i) {
      double sum = 0.0;
      for (int j = 0; j <= n + 1; ++j)
        sum += integ_coeff[static_cast<std::size_t>(j) * (n + 1) + i] *
               std::cos(j * theta);
      basis->integral[static_cast<std::size_t>(r) * (n + 1) + i] = sum;
    }
  }

  basis->quad_weights.resize(n + 1);
  for (int i = 0; i <= n; ++i)
    basis->quad_weights[i] = basis->integral[static_cast<std::size_t>(n) * (n + 1) + i];

  // Differentiation matrix from barycentric weights, diagonal by negative sum.
  basis->diff.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0.0);
  for (int i = 0; i <= n; ++i) {
    double diag = 0.0;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      const double dij = (basis->bary_weights[j] / basis->bary_weights[i]) /
                         (basis->nodes[i] - basis->nodes[j]);
      basis->diff[static_cast<std::size_t>(i) * (n + 1) + j] = dij;
      diag -= dij;
    }
    basis->diff[static_cast<std::size_t>(i) * (n + 1) + i] = diag;
  }
  return basis;
}

}  // namespace

const ChebyshevBasis& chebyshev_basis(int degree) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ChebyshevBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it == cache.end())
    it = cache.emplace(degree, build_basis(degree)).first;
  return *it->second;
}

std::complex<double> ChebyshevBasis::interpolate(
    std::span<const std::complex<double>> samples, double x) const {
  std::complex<double> num(0.0, 0.0);
  double den = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double dx = x - nodes[i];
    if (dx == 0.0) return samples[i];
    const double t = bary_weights[i] / dx;
    num += t * samples[i];
    den += t;
  }
  return num / den;
}

double ChebyshevBasis::interpolate(std::span<const double> samples, double x) const {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double dx = x - nodes[i];
    if (dx == 0.0) return samples[i];
    const double t = bary_weights[i] / dx;
    num += t * samples[i];
    den += t;
  }
  return num / den;
}

}  // namespace perihyp
