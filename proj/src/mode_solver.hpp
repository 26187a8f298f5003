#pragma once

#include <vector>

#include "errors.hpp"
#include "fourier_field.hpp"
#include "mode_function.hpp"

namespace perihyp {

struct Vec2 {
  Complex x, y;
};

struct Mat2 {
  Complex m00, m01, m10, m11;
  Vec2 apply(const Vec2& v) const {
    return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y};
  }
  Mat2 multiply(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }
  Complex det() const { return m00 * m11 - m01 * m10; }
};

/// Closed-form exp(t * M) for a 2x2 complex matrix, with the confluent branch
/// handled by series when the eigenvalue gap is small.
Mat2 mat2_exp(const Mat2& m, double t);

/// Which first-order 2x2 mode system: the problem itself or its adjoint.
enum class SystemKind { primal, adjoint };

struct TransferMatrix {
  Mat2 m;
  double x0 = 0.0;
  double x1 = 0.0;
};

struct ModeSolveResult {
  ModeFunction u, v;
  Complex boundary_determinant;
  double residual = 0.0;
};

/// Collocation degree used when solving mode k: the base degree, enlarged so
/// the oscillation k*omega*h per segment stays spectrally resolved.
int solve_degree(const ProblemConfig& config, long k, int base_degree);
GridPtr solve_grid(const ProblemConfig& config, long k, int base_degree);

/// Default resonance threshold for mode k: 1e-8 * max(1, |Delta_k|).
double singular_tolerance(const ProblemConfig& config, long k);

/// The boundary coupling functional
///   w_k(f,g) = r1 e^{-ikw-alpha(1)} int e^{ikw y+alpha(y)} f dy
///            + e^{ikw+delta(1)} int e^{-ikw y-delta(y)} g dy.
Complex boundary_functional(const ProblemConfig& config, long k,
                            const ModeFunction& f, const ModeFunction& g);

/// Closed-form solve of the decoupled (b = c = 0) mode boundary value problem.
/// Throws ConditionViolated if |Delta_k| drops below half the uniform lower
/// bound (which signals a nonresonance violation).
ModeSolveResult solve_decoupled_mode(const ProblemConfig& config, long k,
                                     const ModeFunction& f, const ModeFunction& g,
                                     int base_degree = 32);

/// Fundamental matrix of the coupled mode system across [x0, x1].
TransferMatrix transfer_matrix(const ProblemConfig& config, long k, double x0,
                               double x1, SystemKind kind = SystemKind::primal);

/// Homogeneous/particular decomposition of the coupled solve; every returned
/// candidate satisfies the mode ODEs and the left boundary condition, and the
/// full solution is part + s * hom with boundary_determinant * s = boundary_rhs.
struct CoupledModeParts {
  ModeFunction u_hom, v_hom;
  ModeFunction u_part, v_part;
  Complex boundary_determinant;
  Complex boundary_rhs;
};
CoupledModeParts coupled_mode_parts(const ProblemConfig& config, long k,
                                    const ModeFunction* f, const ModeFunction* g,
                                    SystemKind kind, int base_degree = 32);

/// Transfer-matrix solve of the coupled mode boundary value problem.  Throws
/// SingularModeError when the boundary determinant is below the resonance
/// threshold.
ModeSolveResult solve_coupled_mode(const ProblemConfig& config, long k,
                                   const ModeFunction& f, const ModeFunction& g,
                                   SystemKind kind = SystemKind::primal,
                                   int base_degree = 32);

/// Residual of a candidate solution in the coupled mode system (ODE defect
/// plus boundary defects, relative to 1 + data norm).
double mode_residual(const ProblemConfig& config, long k, const ModeFunction& u,
                     const ModeFunction& v, const ModeFunction* f,
                     const ModeFunction* g, SystemKind kind = SystemKind::primal);

/// Kernel of the homogeneous mode problem; dimension 0 or 1.  The basis is
/// normalized to unit L2 norm with a deterministic phase.
std::vector<ModePair> mode_kernel(const ProblemConfig& config, long k,
                                  int base_degree = 32, double tolerance = -1.0);
std::vector<ModePair> adjoint_mode_kernel(const ProblemConfig& config, long k,
                                          int base_degree = 32,
                                          double tolerance = -1.0);

/// |L_k| scaled decision value used by the kernel scan (also exposed for the
/// certification margin bookkeeping): returns |L_k| and the threshold actually
/// applied for this mode.
struct BoundaryDeterminantProbe {
  double abs_determinant = 0.0;
  double threshold = 0.0;
};
BoundaryDeterminantProbe probe_boundary_determinant(const ProblemConfig& config,
                                                    long k, SystemKind kind,
                                                    int base_degree = 32,
                                                    double tolerance = -1.0);

}  // namespace perihyp
