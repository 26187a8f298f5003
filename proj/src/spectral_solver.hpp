#pragma once

#include <string>
#include <vector>

#include "mode_solver.hpp"

namespace perihyp {

enum class OperatorKind { A, B, A_adjoint, B_adjoint };

/// Per-mode application of one of the four operators.  A and A_adjoint use
/// spectral differentiation; B and B_adjoint are the zero-order couplings.
FourierField apply_operator(const ProblemConfig& config, OperatorKind which,
                            const FourierField& field);

struct SolverOptions {
  long k_max = 64;
  int degree = 32;
  double tolerance = 1e-9;  // singular-mode defect acceptance threshold
};

struct SolveReport {
  FourierField solution;
  std::vector<std::pair<long, double>> singular_modes;  // (k, compatibility defect)
  double residual = 0.0;
  bool solvable = true;
};

/// Mode-wise closed-form solve of the decoupled problem A x = rhs.
/// Throws ConditionViolated when the nonresonance condition fails.
SolveReport solve_A(const ProblemConfig& config, const FourierField& rhs,
                    const SolverOptions& options = {});

/// Full solve of (A+B) x = rhs.  Resonant modes are handled by the Fredholm
/// alternative: the compatibility defect against the adjoint mode kernel is
/// reported, and when compatible the minimum-norm particular solution is
/// returned.  Never silently regularizes.
SolveReport solve_full(const ProblemConfig& config, const FourierField& rhs,
                       const SolverOptions& options = {});

enum class Certification { heuristic, clean };

struct KernelModeEntry {
  long k = 0;
  int complex_dimension = 0;
  double abs_boundary_determinant = 0.0;
  double threshold = 0.0;
  std::vector<ModePair> basis;
};

struct KernelReport {
  long k_max_scanned = 0;
  std::vector<KernelModeEntry> per_mode;  // ordered by k, from -k_max to k_max
  int total_real_dimension = 0;
  Certification certification = Certification::clean;
};

KernelReport kernel(const ProblemConfig& config, long k_max,
                    const SolverOptions& options = {});
KernelReport adjoint_kernel(const ProblemConfig& config, long k_max,
                            const SolverOptions& options = {});

struct FredholmReport {
  int dim_kernel = 0;
  int dim_adjoint_kernel = 0;
  int index = 0;
  ConditionReport condition_report;
  KernelReport kernel_report;
  KernelReport adjoint_kernel_report;
};

/// Assembles both kernel reports; throws ConditionViolated when (the
/// nonresonance condition) fails, since finite kernel support is not
/// guaranteed outside it.
FredholmReport index_report(const ProblemConfig& config, long k_max,
                            const SolverOptions& options = {});

struct SolvabilityDefect {
  long k = 0;           // mode carrying the adjoint kernel element
  int element = 0;      // basis element id within the mode
  double defect = 0.0;  // |<rhs, basis element>|
};

/// Orthogonality test of the right-hand side against the adjoint kernel.
/// An empty result means no constraint (solvable for every rhs).
std::vector<SolvabilityDefect> solvability_test(const ProblemConfig& config,
                                                const FourierField& rhs, long k_max,
                                                const SolverOptions& options = {});

}  // namespace perihyp
