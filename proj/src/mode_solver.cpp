#include "mode_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace perihyp {

namespace {

const Complex kI(0.0, 1.0);

Complex sinhc(Complex z) {
  if (std::abs(z) < 1e-2) {
    const Complex z2 = z * z;
    return 1.0 + z2 / 6.0 + z2 * z2 / 120.0 + z2 * z2 * z2 / 5040.0;
  }
  return std::sinh(z) / z;
}

std::vector<double> merged_cuts(const ProblemConfig& config,
                                const ModeFunction* f, const ModeFunction* g) {
  std::vector<double> cuts = config.merged_breakpoints();
  auto add = [&](const ModeFunction* m) {
    if (m && !m->empty())
      cuts.insert(cuts.end(), m->grid()->breakpoints().begin(),
                  m->grid()->breakpoints().end());
  };
  add(f);
  add(g);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

int degree_for(const ProblemConfig& config, long k, int base_degree,
               const std::vector<double>& cuts) {
  double hmax = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i)
    hmax = std::max(hmax, cuts[i] - cuts[i - 1]);
  const double phase = std::abs(static_cast<double>(k)) * config.omega * hmax;
  int need = static_cast<int>(std::ceil(0.6 * phase)) + 24;
  need = ((need + 7) / 8) * 8;
  return std::max(base_degree, need);
}

Mat2 system_matrix(double a, double b, double c, double d, double komega,
                   SystemKind kind) {
  const Complex ikw = kI * komega;
  if (kind == SystemKind::primal)
    return {-(a + ikw), Complex(-b), Complex(c), d + ikw};
  return {a - ikw, Complex(c), Complex(-b), -(d - ikw)};
}

Vec2 left_start(const ProblemConfig& config, SystemKind kind) {
  if (kind == SystemKind::primal) return {Complex(config.r0), Complex(1.0)};
  return {Complex(1.0), Complex(config.r0)};
}

Vec2 right_bc_row(const ProblemConfig& config, SystemKind kind) {
  if (kind == SystemKind::primal) return {Complex(-config.r1), Complex(1.0)};
  return {Complex(1.0), Complex(-config.r1)};
}

Complex row_dot(const Vec2& row, const Vec2& v) {
  return row.x * v.x + row.y * v.y;
}

}  // namespace

Mat2 mat2_exp(const Mat2& m, double t) {
  const Complex mu = 0.5 * (m.m00 + m.m11);
  const Complex q = std::sqrt(mu * mu - m.det());
  const Complex z = q * t;
  const Complex ch = (std::abs(z) < 1e-2)
                         ? 1.0 + z * z / 2.0 + z * z * z * z / 24.0 +
                               z * z * z * z * z * z / 720.0
                         : std::cosh(z);
  const Complex sh_over_q = t * sinhc(z);  // sinh(q t) / q
  const Complex scale = std::exp(mu * t);
  Mat2 n{m.m00 - mu, m.m01, m.m10, m.m11 - mu};
  return {scale * (ch + sh_over_q * n.m00), scale * (sh_over_q * n.m01),
          scale * (sh_over_q * n.m10), scale * (ch + sh_over_q * n.m11)};
}

int solve_degree(const ProblemConfig& config, long k, int base_degree) {
  return degree_for(config, k, base_degree, config.merged_breakpoints());
}

GridPtr solve_grid(const ProblemConfig& config, long k, int base_degree) {
  std::vector<double> cuts = config.merged_breakpoints();
  return SegmentGrid::create(cuts, degree_for(config, k, base_degree, cuts));
}

double singular_tolerance(const ProblemConfig& config, long k) {
  return 1e-8 * std::max(1.0, std::abs(mode_determinant(config, k)));
}

namespace {

// int_0^1 e^{+ikw y + alpha(y)} f(y) dy  (direction +1) or
// int_0^1 e^{-ikw y - delta(y)} g(y) dy  (direction -1).
Complex weighted_integral(const ProblemConfig& config, long k,
                          const ModeFunction& f, int direction) {
  if (f.empty()) return Complex(0.0);
  std::vector<double> cuts = merged_cuts(config, &f, nullptr);
  const int degree = degree_for(config, k, f.grid()->degree() + 8, cuts);
  const double komega = static_cast<double>(k) * config.omega;
  return segmented_integral(cuts, degree, [&](double y) {
    const double growth = (direction > 0) ? config.alpha(y) : -config.delta(y);
    return std::exp(Complex(growth, direction * komega * y)) * f.eval(y);
  });
}

}  // namespace

Complex boundary_functional(const ProblemConfig& config, long k,
                            const ModeFunction& f, const ModeFunction& g) {
  const double komega = static_cast<double>(k) * config.omega;
  const Complex fa = weighted_integral(config, k, f, +1);
  const Complex gb = weighted_integral(config, k, g, -1);
  return config.r1 * std::exp(Complex(-config.alpha(1.0), -komega)) * fa +
         std::exp(Complex(config.delta(1.0), komega)) * gb;
}

ModeSolveResult solve_decoupled_mode(const ProblemConfig& config, long k,
                                     const ModeFunction& f, const ModeFunction& g,
                                     int base_degree) {
  config.validate();
  const ConditionReport cond = check_condition(config);
  const Complex det = mode_determinant(config, k);
  if (std::abs(det) < 0.5 * cond.delta_lower_bound || det == Complex(0.0))
    throw ConditionViolated(cond);

  std::vector<double> cuts = merged_cuts(config, &f, &g);
  GridPtr grid = SegmentGrid::create(cuts, degree_for(config, k, base_degree, cuts));
  const ChebyshevBasis& basis = grid->basis();
  const std::size_t n = grid->points_per_segment();
  const double komega = static_cast<double>(k) * config.omega;

  // Cumulative integrals F(x) = int_0^x e^{ikw y + alpha} f dy and
  // G(x) = int_0^x e^{-ikw y - delta} g dy at all collocation nodes.
  ModeFunction cum_f = ModeFunction::zero(grid);
  ModeFunction cum_g = ModeFunction::zero(grid);
  Complex prefix_f(0.0), prefix_g(0.0);
  for (std::size_t s = 0; s < grid->num_segments(); ++s) {
    const double half = 0.5 * grid->segment_length(s);
    std::vector<Complex> hf(n), hg(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double y = grid->node(s, i);
      hf[i] = f.empty() ? Complex(0.0)
                        : std::exp(Complex(config.alpha(y), komega * y)) * f.eval(y);
      hg[i] = g.empty() ? Complex(0.0)
                        : std::exp(Complex(-config.delta(y), -komega * y)) * g.eval(y);
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex cf(0.0), cg(0.0);
      for (std::size_t j = 0; j < n; ++j) {
        const double qij = basis.integral[i * n + j];
        cf += qij * hf[j];
        cg += qij * hg[j];
      }
      cum_f.sample(s, i) = prefix_f + half * cf;
      cum_g.sample(s, i) = prefix_g + half * cg;
    }
    prefix_f = cum_f.sample(s, n - 1);
    prefix_g = cum_g.sample(s, n - 1);
  }

  const Complex w = config.r1 * std::exp(Complex(-config.alpha(1.0), -komega)) *
                        prefix_f +
                    std::exp(Complex(config.delta(1.0), komega)) * prefix_g;

  ModeFunction u = ModeFunction::zero(grid);
  ModeFunction v = ModeFunction::zero(grid);
  for (std::size_t s = 0; s < grid->num_segments(); ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = grid->node(s, i);
      u.sample(s, i) = std::exp(Complex(-config.alpha(x), -komega * x)) *
                       (cum_f.sample(s, i) + config.r0 / det * w);
      v.sample(s, i) = std::exp(Complex(config.delta(x), komega * x)) *
                       (w / det - cum_g.sample(s, i));
    }
  }

  ModeSolveResult result;
  result.boundary_determinant = det;
  ProblemConfig decoupled = config;
  decoupled.b = PiecewiseCoefficient();
  decoupled.c = PiecewiseCoefficient();
  result.residual = mode_residual(decoupled, k, u, v, f.empty() ? nullptr : &f,
                                  g.empty() ? nullptr : &g);
  result.u = std::move(u);
  result.v = std::move(v);
  return result;
}

TransferMatrix transfer_matrix(const ProblemConfig& config, long k, double x0,
                               double x1, SystemKind kind) {
  if (!(0.0 <= x0 && x0 <= x1 && x1 <= 1.0))
    throw std::domain_error("transfer matrix needs 0 <= x0 <= x1 <= 1");
  const double komega = static_cast<double>(k) * config.omega;
  std::vector<double> cuts{x0};
  for (double bp : config.merged_breakpoints())
    if (bp > x0 && bp < x1) cuts.push_back(bp);
  cuts.push_back(x1);
  Mat2 phi{1.0, 0.0, 0.0, 1.0};
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double mid = 0.5 * (cuts[s] + cuts[s + 1]);
    const Mat2 m = system_matrix(config.a.value(mid), config.b.value(mid),
                                 config.c.value(mid), config.d.value(mid), komega,
                                 kind);
    phi = mat2_exp(m, cuts[s + 1] - cuts[s]).multiply(phi);
  }
  return {phi, x0, x1};
}

CoupledModeParts coupled_mode_parts(const ProblemConfig& config, long k,
                                    const ModeFunction* f, const ModeFunction* g,
                                    SystemKind kind, int base_degree) {
  config.validate();
  std::vector<double> cuts = merged_cuts(config, f, g);
  GridPtr grid = SegmentGrid::create(cuts, degree_for(config, k, base_degree, cuts));
  const ChebyshevBasis& basis = grid->basis();
  const std::size_t n = grid->points_per_segment();
  const double komega = static_cast<double>(k) * config.omega;
  const bool homogeneous_only = (!f || f->empty()) && (!g || g->empty());

  CoupledModeParts parts;
  parts.u_hom = ModeFunction::zero(grid);
  parts.v_hom = ModeFunction::zero(grid);
  parts.u_part = ModeFunction::zero(grid);
  parts.v_part = ModeFunction::zero(grid);

  Vec2 hom = left_start(config, kind);
  Vec2 part{0.0, 0.0};
  for (std::size_t s = 0; s < grid->num_segments(); ++s) {
    const double xl = grid->segment_left(s);
    const double half = 0.5 * grid->segment_length(s);
    const double mid = 0.5 * (grid->segment_left(s) + grid->segment_right(s));
    const Mat2 m = system_matrix(config.a.value(mid), config.b.value(mid),
                                 config.c.value(mid), config.d.value(mid), komega,
                                 kind);

    std::vector<Vec2> pulled(n, Vec2{0.0, 0.0});
    if (!homogeneous_only) {
      for (std::size_t i = 0; i < n; ++i) {
        const double y = grid->node(s, i);
        Complex fy = (f && !f->empty()) ? f->eval(y) : Complex(0.0);
        Complex gy = (g && !g->empty()) ? g->eval(y) : Complex(0.0);
        // inhomogeneity of the first-order system
        Vec2 r = (kind == SystemKind::primal) ? Vec2{fy, -gy} : Vec2{-fy, gy};
        pulled[i] = mat2_exp(m, -(y - xl)).apply(r);
      }
    }

    for (std::size_t i = 0; i < n; ++i) {
      const double x = grid->node(s, i);
      const Mat2 phi = mat2_exp(m, x - xl);
      Vec2 h = phi.apply(hom);
      parts.u_hom.sample(s, i) = h.x;
      parts.v_hom.sample(s, i) = h.y;
      if (!homogeneous_only) {
        Vec2 cum{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
          const double qij = basis.integral[i * n + j];
          cum.x += qij * pulled[j].x;
          cum.y += qij * pulled[j].y;
        }
        Vec2 p = phi.apply(Vec2{part.x + half * cum.x, part.y + half * cum.y});
        parts.u_part.sample(s, i) = p.x;
        parts.v_part.sample(s, i) = p.y;
      }
    }
    hom = Vec2{parts.u_hom.sample(s, n - 1), parts.v_hom.sample(s, n - 1)};
    part = Vec2{parts.u_part.sample(s, n - 1), parts.v_part.sample(s, n - 1)};
  }

  const Vec2 row = right_bc_row(config, kind);
  parts.boundary_determinant = row_dot(row, hom);
  parts.boundary_rhs = -row_dot(row, part);
  return parts;
}

namespace {

double boundary_threshold(const ProblemConfig& config, long k,
                          const CoupledModeParts& parts, double tolerance) {
  const double tol = (tolerance >= 0.0) ? tolerance : singular_tolerance(config, k);
  const std::size_t s = parts.u_hom.grid()->num_segments() - 1;
  const std::size_t n = parts.u_hom.grid()->points_per_segment();
  const double scale = std::max(std::abs(parts.u_hom.sample(s, n - 1)),
                                std::abs(parts.v_hom.sample(s, n - 1)));
  return tol * std::max(1.0, scale);
}

std::vector<ModePair> kernel_impl(const ProblemConfig& config, long k,
                                  SystemKind kind, int base_degree,
                                  double tolerance) {
  CoupledModeParts parts =
      coupled_mode_parts(config, k, nullptr, nullptr, kind, base_degree);
  const double threshold = boundary_threshold(config, k, parts, tolerance);
  if (std::abs(parts.boundary_determinant) > threshold) return {};

  ModeFunction u = std::move(parts.u_hom);
  ModeFunction v = std::move(parts.v_hom);
  const double norm = std::sqrt(u.l2_norm_sq() + v.l2_norm_sq());
  if (norm == 0.0) return {};

  // deterministic phase: rotate the largest sample to the positive real axis
  Complex anchor(0.0);
  double best = -1.0;
  for (const ModeFunction* m : {&u, &v})
    for (std::size_t s = 0; s < m->grid()->num_segments(); ++s)
      for (std::size_t i = 0; i < m->grid()->points_per_segment(); ++i) {
        const double mag = std::abs(m->sample(s, i));
        if (mag > best + 1e-14) {
          best = mag;
          anchor = m->sample(s, i);
        }
      }
  const Complex phase = (best > 0.0) ? std::conj(anchor) / std::abs(anchor)
                                     : Complex(1.0);
  u *= phase / norm;
  v *= phase / norm;
  return {ModePair{std::move(u), std::move(v)}};
}

}  // namespace

ModeSolveResult solve_coupled_mode(const ProblemConfig& config, long k,
                                   const ModeFunction& f, const ModeFunction& g,
                                   SystemKind kind, int base_degree) {
  CoupledModeParts parts = coupled_mode_parts(
      config, k, f.empty() ? nullptr : &f, g.empty() ? nullptr : &g, kind,
      base_degree);
  const double threshold = boundary_threshold(config, k, parts, -1.0);
  if (std::abs(parts.boundary_determinant) <= threshold)
    throw SingularModeError(k, parts.boundary_determinant, parts.boundary_rhs);

  const Complex s = parts.boundary_rhs / parts.boundary_determinant;
  ModeSolveResult result;
  result.u = parts.u_part + s * parts.u_hom;
  result.v = parts.v_part + s * parts.v_hom;
  result.boundary_determinant = parts.boundary_determinant;
  result.residual = mode_residual(config, k, result.u, result.v,
                                  f.empty() ? nullptr : &f,
                                  g.empty() ? nullptr : &g, kind);
  return result;
}

double mode_residual(const ProblemConfig& config, long k, const ModeFunction& u,
                     const ModeFunction& v, const ModeFunction* f,
                     const ModeFunction* g, SystemKind kind) {
  const Complex ikw = kI * (static_cast<double>(k) * config.omega);
  GridPtr grid = u.grid();
  ModeFunction du = u.derivative();
  ModeFunction dv = v.derivative();
  ModeFunction ru = ModeFunction::zero(grid);
  ModeFunction rv = ModeFunction::zero(grid);
  for (std::size_t s = 0; s < grid->num_segments(); ++s) {
    const double mid = 0.5 * (grid->segment_left(s) + grid->segment_right(s));
    const double a = config.a.value(mid), b = config.b.value(mid);
    const double c = config.c.value(mid), d = config.d.value(mid);
    for (std::size_t i = 0; i < grid->points_per_segment(); ++i) {
      const double x = grid->node(s, i);
      const Complex fu = f ? f->eval(x) : Complex(0.0);
      const Complex gv = g ? g->eval(x) : Complex(0.0);
      if (kind == SystemKind::primal) {
        ru.sample(s, i) =
            du.sample(s, i) + (a + ikw) * u.sample(s, i) + b * v.sample(s, i) - fu;
        rv.sample(s, i) =
            -dv.sample(s, i) + (d + ikw) * v.sample(s, i) + c * u.sample(s, i) - gv;
      } else {
        ru.sample(s, i) =
            -du.sample(s, i) + (a - ikw) * u.sample(s, i) + c * v.sample(s, i) - fu;
        rv.sample(s, i) =
            dv.sample(s, i) + (d - ikw) * v.sample(s, i) + b * u.sample(s, i) - gv;
      }
    }
  }
  double bc = 0.0;
  if (kind == SystemKind::primal) {
    bc = std::abs(u.eval(0.0) - config.r0 * v.eval(0.0)) +
         std::abs(v.eval_left(1.0) - config.r1 * u.eval_left(1.0));
  } else {
    bc = std::abs(v.eval(0.0) - config.r0 * u.eval(0.0)) +
         std::abs(u.eval_left(1.0) - config.r1 * v.eval_left(1.0));
  }
  const double data = (f ? std::sqrt(f->l2_norm_sq()) : 0.0) +
                      (g ? std::sqrt(g->l2_norm_sq()) : 0.0);
  return (std::sqrt(ru.l2_norm_sq()) + std::sqrt(rv.l2_norm_sq()) + bc) /
         (1.0 + data);
}

std::vector<ModePair> mode_kernel(const ProblemConfig& config, long k,
                                  int base_degree, double tolerance) {
  return kernel_impl(config, k, SystemKind::primal, base_degree, tolerance);
}

std::vector<ModePair> adjoint_mode_kernel(const ProblemConfig& config, long k,
                                          int base_degree, double tolerance) {
  return kernel_impl(config, k, SystemKind::adjoint, base_degree, tolerance);
}

BoundaryDeterminantProbe probe_boundary_determinant(const ProblemConfig& config,
                                                    long k, SystemKind kind,
                                                    int base_degree,
                                                    double tolerance) {
  CoupledModeParts parts =
      coupled_mode_parts(config, k, nullptr, nullptr, kind, base_degree);
  BoundaryDeterminantProbe probe;
  probe.abs_determinant = std::abs(parts.boundary_determinant);
  probe.threshold = boundary_threshold(config, k, parts, tolerance);
  return probe;
}

}  // namespace perihyp
