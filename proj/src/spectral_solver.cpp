#include "spectral_solver.hpp"

#include <algorithm>
#include <cmath>

namespace perihyp {

namespace {

const Complex kI(0.0, 1.0);

// Pointwise coefficient products need a grid refining the coefficient
// breakpoints; externally supplied fields may live on a coarser layout.
ModeFunction aligned(const ModeFunction& m, const ProblemConfig& config) {
  if (m.grid()->refines(config.merged_breakpoints())) return m;
  std::vector<double> cuts = config.merged_breakpoints();
  cuts.insert(cuts.end(), m.grid()->breakpoints().begin(),
              m.grid()->breakpoints().end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return m.resampled(SegmentGrid::create(cuts, m.grid()->degree()));
}

double mode_data_norm(const ModePair& pair) {
  return std::sqrt(pair.u.l2_norm_sq()) + std::sqrt(pair.v.l2_norm_sq());
}

// Complex pairing of a mode-k right-hand side against one adjoint kernel
// element: int (f conj(phi) + g conj(psi)) dx.
Complex mode_pairing(const ModePair& rhs, const ModePair& basis) {
  return l2_inner_product(rhs.u, basis.u) + l2_inner_product(rhs.v, basis.v);
}

}  // namespace

FourierField apply_operator(const ProblemConfig& config, OperatorKind which,
                            const FourierField& field) {
  FourierField out(field.gamma());
  for (const auto& [k, pair] : field.entries()) {
    const Complex ikw = kI * (static_cast<double>(k) * config.omega);
    ModeFunction u = aligned(pair.u, config);
    ModeFunction v = aligned(pair.v, config);
    ModeFunction ru, rv;
    switch (which) {
      case OperatorKind::A: {
        ru = u.derivative() + ikw * u + u.scaled_by(config.a);
        rv = Complex(-1.0) * v.derivative() + ikw * v + v.scaled_by(config.d);
        break;
      }
      case OperatorKind::B: {
        ru = v.scaled_by(config.b);
        rv = u.scaled_by(config.c);
        break;
      }
      case OperatorKind::A_adjoint: {
        ru = Complex(-1.0) * u.derivative() - ikw * u + u.scaled_by(config.a);
        rv = v.derivative() - ikw * v + v.scaled_by(config.d);
        break;
      }
      case OperatorKind::B_adjoint: {
        ru = v.scaled_by(config.c);
        rv = u.scaled_by(config.b);
        break;
      }
    }
    out.set_mode(k, std::move(ru), std::move(rv));
  }
  return out;
}

SolveReport solve_A(const ProblemConfig& config, const FourierField& rhs,
                    const SolverOptions& options) {
  config.validate();
  const ConditionReport cond = check_condition(config);
  if (!cond.satisfied) throw ConditionViolated(cond);

  SolveReport report;
  report.solution.set_gamma(rhs.gamma());
  for (const auto& [k, pair] : rhs.entries()) {
    ModeSolveResult mode =
        solve_decoupled_mode(config, k, pair.u, pair.v, options.degree);
    report.residual = std::max(report.residual, mode.residual);
    report.solution.set_mode(k, std::move(mode.u), std::move(mode.v));
  }
  return report;
}

SolveReport solve_full(const ProblemConfig& config, const FourierField& rhs,
                       const SolverOptions& options) {
  config.validate();
  const ConditionReport cond = check_condition(config);
  if (!cond.satisfied) throw ConditionViolated(cond);

  SolveReport report;
  report.solution.set_gamma(rhs.gamma());
  for (const auto& [k, pair] : rhs.entries()) {
    try {
      ModeSolveResult mode = solve_coupled_mode(config, k, pair.u, pair.v,
                                                SystemKind::primal, options.degree);
      report.residual = std::max(report.residual, mode.residual);
      report.solution.set_mode(k, std::move(mode.u), std::move(mode.v));
    } catch (const SingularModeError&) {
      const std::vector<ModePair> adj =
          adjoint_mode_kernel(config, k, options.degree);
      double defect = 0.0;
      for (const ModePair& basis : adj)
        defect = std::max(defect, std::abs(mode_pairing(pair, basis)));
      report.singular_modes.emplace_back(k, defect);
      const bool compatible =
          defect <= options.tolerance * (1.0 + mode_data_norm(pair));
      if (!compatible) {
        report.solvable = false;
        continue;  // no representative for an incompatible mode
      }
      CoupledModeParts parts = coupled_mode_parts(config, k, &pair.u, &pair.v,
                                                  SystemKind::primal,
                                                  options.degree);
      // minimum-norm member of the solution family part + s * hom
      const double hom_norm_sq =
          parts.u_hom.l2_norm_sq() + parts.v_hom.l2_norm_sq();
      const Complex overlap = l2_inner_product(parts.u_part, parts.u_hom) +
                              l2_inner_product(parts.v_part, parts.v_hom);
      const Complex s = (hom_norm_sq > 0.0) ? -overlap / hom_norm_sq : Complex(0.0);
      ModeFunction u = parts.u_part + s * parts.u_hom;
      ModeFunction v = parts.v_part + s * parts.v_hom;
      report.residual = std::max(
          report.residual,
          mode_residual(config, k, u, v, &pair.u, &pair.v, SystemKind::primal));
      report.solution.set_mode(k, std::move(u), std::move(v));
    }
  }
  return report;
}

namespace {

KernelReport kernel_scan(const ProblemConfig& config, long k_max,
                         SystemKind kind, const SolverOptions& options) {
  if (k_max < 1) throw std::invalid_argument("kernel scan needs k_max >= 1");
  config.validate();
  KernelReport report;
  report.k_max_scanned = k_max;

  std::vector<KernelModeEntry> nonneg;
  bool clean = true;
  for (long k = 0; k <= k_max; ++k) {
    KernelModeEntry entry;
    entry.k = k;
    const BoundaryDeterminantProbe probe =
        probe_boundary_determinant(config, k, kind, options.degree);
    entry.abs_boundary_determinant = probe.abs_determinant;
    entry.threshold = probe.threshold;
    if (probe.abs_determinant <= probe.threshold) {
      entry.basis = (kind == SystemKind::primal)
                        ? mode_kernel(config, k, options.degree)
                        : adjoint_mode_kernel(config, k, options.degree);
      entry.complex_dimension = static_cast<int>(entry.basis.size());
    } else if (probe.abs_determinant <= 10.0 * probe.threshold) {
      clean = false;  // uncomfortably close to the resonance threshold
    }
    nonneg.push_back(std::move(entry));
  }

  // modes -k mirror +k by conjugation (real coefficients)
  for (long k = k_max; k >= 1; --k) {
    const KernelModeEntry& src = nonneg[static_cast<std::size_t>(k)];
    KernelModeEntry entry;
    entry.k = -k;
    entry.complex_dimension = src.complex_dimension;
    entry.abs_boundary_determinant = src.abs_boundary_determinant;
    entry.threshold = src.threshold;
    for (const ModePair& pair : src.basis)
      entry.basis.push_back(ModePair{pair.u.conjugate(), pair.v.conjugate()});
    report.per_mode.push_back(std::move(entry));
  }
  int total = nonneg[0].complex_dimension;
  for (long k = 1; k <= k_max; ++k)
    total += 2 * nonneg[static_cast<std::size_t>(k)].complex_dimension;
  for (auto& entry : nonneg) report.per_mode.push_back(std::move(entry));
  report.total_real_dimension = total;
  report.certification = clean ? Certification::clean : Certification::heuristic;
  return report;
}

}  // namespace

KernelReport kernel(const ProblemConfig& config, long k_max,
                    const SolverOptions& options) {
  return kernel_scan(config, k_max, SystemKind::primal, options);
}

KernelReport adjoint_kernel(const ProblemConfig& config, long k_max,
                            const SolverOptions& options) {
  return kernel_scan(config, k_max, SystemKind::adjoint, options);
}

FredholmReport index_report(const ProblemConfig& config, long k_max,
                            const SolverOptions& options) {
  const ConditionReport cond = check_condition(config);
  if (!cond.satisfied) throw ConditionViolated(cond);
  FredholmReport report;
  report.condition_report = cond;
  report.kernel_report = kernel(config, k_max, options);
  report.adjoint_kernel_report = adjoint_kernel(config, k_max, options);
  report.dim_kernel = report.kernel_report.total_real_dimension;
  report.dim_adjoint_kernel = report.adjoint_kernel_report.total_real_dimension;
  report.index = report.dim_kernel - report.dim_adjoint_kernel;
  return report;
}

std::vector<SolvabilityDefect> solvability_test(const ProblemConfig& config,
                                                const FourierField& rhs, long k_max,
                                                const SolverOptions& options) {
  config.validate();
  std::vector<SolvabilityDefect> defects;
  for (long k = 0; k <= k_max; ++k) {
    const std::vector<ModePair> basis = adjoint_mode_kernel(config, k, options.degree);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      SolvabilityDefect d;
      d.k = k;
      d.element = static_cast<int>(j);
      if (rhs.has_mode(k))
        d.defect = std::abs(mode_pairing(rhs.mode(k), basis[j]));
      defects.push_back(d);
    }
  }
  return defects;
}

}  // namespace perihyp
