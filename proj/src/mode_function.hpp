#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "chebyshev.hpp"
#include "coefficients.hpp"

namespace perihyp {

using Complex = std::complex<double>;

/// Breakpoint layout plus a shared collocation degree.  The layout is the one
/// of the owning problem's coefficients (or a refinement of it), so that every
/// coefficient is constant on each segment.
class SegmentGrid {
 public:
  static std::shared_ptr<const SegmentGrid> create(std::vector<double> breakpoints,
                                                   int degree);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  int degree() const { return degree_; }
  std::size_t num_segments() const { return breakpoints_.size() - 1; }
  std::size_t points_per_segment() const { return static_cast<std::size_t>(degree_) + 1; }

  double segment_left(std::size_t s) const { return breakpoints_[s]; }
  double segment_right(std::size_t s) const { return breakpoints_[s + 1]; }
  double segment_length(std::size_t s) const {
    return breakpoints_[s + 1] - breakpoints_[s];
  }
  /// Physical coordinate of collocation node i in segment s.
  double node(std::size_t s, std::size_t i) const;
  /// Segment containing x (right-continuous; x = 1 maps to the last segment).
  std::size_t segment_of(double x) const;
  const ChebyshevBasis& basis() const { return chebyshev_basis(degree_); }

  bool same_layout(const SegmentGrid& other) const;
  /// True if every breakpoint of `coarse` appears in this grid.
  bool refines(const std::vector<double>& coarse) const;

 private:
  SegmentGrid(std::vector<double> breakpoints, int degree);
  std::vector<double> breakpoints_;
  int degree_;
};

using GridPtr = std::shared_ptr<const SegmentGrid>;

/// Complex function of x on [0,1] held as per-segment collocation samples.
/// Single-valued inside segments; may jump at breakpoints.
class ModeFunction {
 public:
  ModeFunction() = default;
  static ModeFunction zero(GridPtr grid);
  static ModeFunction from_function(GridPtr grid,
                                    const std::function<Complex(double)>& f);

  const GridPtr& grid() const { return grid_; }
  bool empty() const { return !grid_; }

  Complex& sample(std::size_t segment, std::size_t i) {
    return samples_[segment][i];
  }
  Complex sample(std::size_t segment, std::size_t i) const {
    return samples_[segment][i];
  }
  const std::vector<Complex>& segment_samples(std::size_t segment) const {
    return samples_[segment];
  }

  /// Barycentric evaluation; at interior breakpoints the right segment wins,
  /// at x = 1 the last segment.
  Complex eval(double x) const;
  Complex eval_left(double x) const;   // left limit (x > 0)
  Complex eval_right(double x) const;  // right limit (x < 1)

  ModeFunction derivative() const;
  ModeFunction conjugate() const;
  /// Pointwise product with a piecewise-constant coefficient; the grid must
  /// refine the coefficient's breakpoints.
  ModeFunction scaled_by(const PiecewiseCoefficient& coef) const;
  /// Exact re-interpolation onto a refining grid.
  ModeFunction resampled(GridPtr target) const;

  ModeFunction& operator+=(const ModeFunction& other);
  ModeFunction& operator-=(const ModeFunction& other);
  ModeFunction& operator*=(Complex factor);
  friend ModeFunction operator+(ModeFunction a, const ModeFunction& b) { return a += b; }
  friend ModeFunction operator-(ModeFunction a, const ModeFunction& b) { return a -= b; }
  friend ModeFunction operator*(Complex factor, ModeFunction f) { return f *= factor; }

  double l2_norm_sq() const;  // integral of |f|^2 over [0,1]
  double sup_norm() const;    // max over collocation samples

 private:
  GridPtr grid_;
  std::vector<std::vector<Complex>> samples_;
};

/// Integral of f * conj(g) over [0,1]; the grids may differ.
Complex l2_inner_product(const ModeFunction& f, const ModeFunction& g);

/// Clenshaw-Curtis integral of an arbitrary integrand over consecutive
/// [cuts[i], cuts[i+1]] cells at the given degree.
Complex segmented_integral(const std::vector<double>& cuts, int degree,
                           const std::function<Complex(double)>& integrand);

}  // namespace perihyp
