#pragma once

#include <complex>
#include <span>
#include <vector>

namespace perihyp {

/// Chebyshev-Gauss-Lobatto collocation data on the reference interval [-1,1]
/// for a fixed degree n (n+1 nodes, ascending order).  Instances are cached
/// per degree; use chebyshev_basis().
struct ChebyshevBasis {
  int degree = 0;
  std::vector<double> nodes;          // ascending, nodes[0] = -1, nodes[n] = 1
  std::vector<double> bary_weights;
  std::vector<double> quad_weights;   // Clenshaw-Curtis weights
  std::vector<double> diff;           // (n+1)x(n+1) differentiation matrix, row-major
  std::vector<double> integral;       // (n+1)x(n+1) matrix: samples -> antiderivative
                                      // values with F(-1) = 0

  std::complex<double> interpolate(std::span<const std::complex<double>> samples,
                                   double x) const;
  double interpolate(std::span<const double> samples, double x) const;
};

/// Shared immutable basis for the given degree (>= 1).
const ChebyshevBasis& chebyshev_basis(int degree);

}  // namespace perihyp
