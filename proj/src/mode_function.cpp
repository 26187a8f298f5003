#include "mode_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace perihyp {

SegmentGrid::SegmentGrid(std::vector<double> breakpoints, int degree)
    : breakpoints_(std::move(breakpoints)), degree_(degree) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != 0.0 ||
      breakpoints_.back() != 1.0)
    throw std::invalid_argument("grid breakpoints must span [0,1]");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] > breakpoints_[i - 1]))
      throw std::invalid_argument("grid breakpoints must be strictly increasing");
  if (degree_ < 3) throw std::invalid_argument("grid degree must be >= 3");
}

std::shared_ptr<const SegmentGrid> SegmentGrid::create(
    std::vector<double> breakpoints, int degree) {
  return std::shared_ptr<const SegmentGrid>(
      new SegmentGrid(std::move(breakpoints), degree));
}

double SegmentGrid::node(std::size_t s, std::size_t i) const {
  const ChebyshevBasis& b = basis();
  const double mid = 0.5 * (breakpoints_[s] + breakpoints_[s + 1]);
  const double half = 0.5 * segment_length(s);
  return mid + half * b.nodes[i];
}

std::size_t SegmentGrid::segment_of(double x) const {
  if (x < 0.0 || x > 1.0) throw std::domain_error("argument outside [0,1]");
  if (x >= breakpoints_[breakpoints_.size() - 2]) return num_segments() - 1;
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

bool SegmentGrid::same_layout(const SegmentGrid& other) const {
  return degree_ == other.degree_ && breakpoints_ == other.breakpoints_;
}

bool SegmentGrid::refines(const std::vector<double>& coarse) const {
  for (double x : coarse)
    if (!std::binary_search(breakpoints_.begin(), breakpoints_.end(), x))
      return false;
  return true;
}

ModeFunction ModeFunction::zero(GridPtr grid) {
  ModeFunction f;
  f.grid_ = std::move(grid);
  f.samples_.assign(f.grid_->num_segments(),
                    std::vector<Complex>(f.grid_->points_per_segment(), Complex(0.0)));
  return f;
}

ModeFunction ModeFunction::from_function(GridPtr grid,
                                         const std::function<Complex(double)>& fn) {
  ModeFunction f = zero(std::move(grid));
  for (std::size_t s = 0; s < f.grid_->num_segments(); ++s)
    for (std::size_t i = 0; i < f.grid_->points_per_segment(); ++i)
      f.samples_[s][i] = fn(f.grid_->node(s, i));
  return f;
}

Complex ModeFunction::eval(double x) const {
  const std::size_t s = grid_->segment_of(x);
  const double mid = 0.5 * (grid_->segment_left(s) + grid_->segment_right(s));
  const double xi = (x - mid) / (0.5 * grid_->segment_length(s));
  return grid_->basis().interpolate(samples_[s], xi);
}

Complex ModeFunction::eval_left(double x) const {
  if (x <= 0.0) throw std::domain_error("left limit needs x > 0");
  std::size_t s = grid_->segment_of(x);
  if (x == grid_->segment_left(s)) --s;
  const double mid = 0.5 * (grid_->segment_left(s) + grid_->segment_right(s));
  const double xi = (x - mid) / (0.5 * grid_->segment_length(s));
  return grid_->basis().interpolate(samples_[s], xi);
}

Complex ModeFunction::eval_right(double x) const {
  if (x >= 1.0) throw std::domain_error("right limit needs x < 1");
  return eval(x);
}

ModeFunction ModeFunction::derivative() const {
  ModeFunction out = zero(grid_);
  const ChebyshevBasis& b = grid_->basis();
  const std::size_t n = grid_->points_per_segment();
  for (std::size_t s = 0; s < grid_->num_segments(); ++s) {
    const double scale = 2.0 / grid_->segment_length(s);
    for (std::size_t i = 0; i < n; ++i) {
      Complex sum(0.0);
      for (std::size_t j = 0; j < n; ++j)
        sum += b.diff[i * n + j] * samples_[s][j];
      out.samples_[s][i] = scale * sum;
    }
  }
  return out;
}

ModeFunction ModeFunction::conjugate() const {
  ModeFunction out = *this;
  for (auto& seg : out.samples_)
    for (Complex& v : seg) v = std::conj(v);
  return out;
}

ModeFunction ModeFunction::scaled_by(const PiecewiseCoefficient& coef) const {
  if (!grid_->refines(coef.breakpoints()))
    throw std::invalid_argument("grid does not refine coefficient breakpoints");
  ModeFunction out = *this;
  for (std::size_t s = 0; s < grid_->num_segments(); ++s) {
    const double mid = 0.5 * (grid_->segment_left(s) + grid_->segment_right(s));
    const double v = coef.value(mid);
    for (Complex& sample : out.samples_[s]) sample *= v;
  }
  return out;
}

ModeFunction ModeFunction::resampled(GridPtr target) const {
  if (grid_->same_layout(*target)) {
    ModeFunction out = *this;
    out.grid_ = std::move(target);
    return out;
  }
  if (!target->refines(grid_->breakpoints()))
    throw std::invalid_argument("resample target must refine the source grid");
  ModeFunction out = zero(std::move(target));
  for (std::size_t s = 0; s < out.grid_->num_segments(); ++s)
    for (std::size_t i = 0; i < out.grid_->points_per_segment(); ++i)
      out.samples_[s][i] = eval(out.grid_->node(s, i));
  return out;
}

ModeFunction& ModeFunction::operator+=(const ModeFunction& other) {
  if (!grid_->same_layout(*other.grid_))
    throw std::invalid_argument("mode function layout mismatch");
  for (std::size_t s = 0; s < samples_.size(); ++s)
    for (std::size_t i = 0; i < samples_[s].size(); ++i)
      samples_[s][i] += other.samples_[s][i];
  return *this;
}

ModeFunction& ModeFunction::operator-=(const ModeFunction& other) {
  if (!grid_->same_layout(*other.grid_))
    throw std::invalid_argument("mode function layout mismatch");
  for (std::size_t s = 0; s < samples_.size(); ++s)
    for (std::size_t i = 0; i < samples_[s].size(); ++i)
      samples_[s][i] -= other.samples_[s][i];
  return *this;
}

ModeFunction& ModeFunction::operator*=(Complex factor) {
  for (auto& seg : samples_)
    for (Complex& v : seg) v *= factor;
  return *this;
}

double ModeFunction::l2_norm_sq() const {
  const ChebyshevBasis& b = grid_->basis();
  double total = 0.0;
  for (std::size_t s = 0; s < grid_->num_segments(); ++s) {
    const double half = 0.5 * grid_->segment_length(s);
    double seg = 0.0;
    for (std::size_t i = 0; i < samples_[s].size(); ++i)
      seg += b.quad_weights[i] * std::norm(samples_[s][i]);
    total += half * seg;
  }
  return total;
}

double ModeFunction::sup_norm() const {
  double m = 0.0;
  for (const auto& seg : samples_)
    for (const Complex& v : seg) m = std::max(m, std::abs(v));
  return m;
}

Complex l2_inner_product(const ModeFunction& f, const ModeFunction& g) {
  if (f.grid()->same_layout(*g.grid())) {
    const ChebyshevBasis& b = f.grid()->basis();
    Complex total(0.0);
    for (std::size_t s = 0; s < f.grid()->num_segments(); ++s) {
      const double half = 0.5 * f.grid()->segment_length(s);
      Complex seg(0.0);
      for (std::size_t i = 0; i < f.grid()->points_per_segment(); ++i)
        seg += b.quad_weights[i] * f.sample(s, i) * std::conj(g.sample(s, i));
      total += half * seg;
    }
    return total;
  }
  std::vector<double> cuts = f.grid()->breakpoints();
  cuts.insert(cuts.end(), g.grid()->breakpoints().begin(),
              g.grid()->breakpoints().end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const int degree = std::max(f.grid()->degree(), g.grid()->degree()) + 8;
  return segmented_integral(cuts, degree, [&](double x) {
    return f.eval(x) * std::conj(g.eval(x));
  });
}

Complex segmented_integral(const std::vector<double>& cuts, int degree,
                           const std::function<Complex(double)>& integrand) {
  const ChebyshevBasis& b = chebyshev_basis(degree);
  Complex total(0.0);
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double mid = 0.5 * (cuts[s] + cuts[s + 1]);
    const double half = 0.5 * (cuts[s + 1] - cuts[s]);
    Complex seg(0.0);
    for (std::size_t i = 0; i < b.nodes.size(); ++i)
      seg += b.quad_weights[i] * integrand(mid + half * b.nodes[i]);
    total += half * seg;
  }
  return total;
}

}  // namespace perihyp
