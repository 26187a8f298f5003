#pragma once

#include <vector>

#include "spectral_solver.hpp"

namespace perihyp {

/// The explicit bounded-but-divergent sequence witnessing that the solution
/// space does not embed compactly: a single-mode field at k = l with
///   u_l = (1+l^2)^{-gamma/2} e^{-il omega x} x,
///   v_l = (1+l^2)^{-gamma/2} e^{ il omega x} (x-1).
FourierField noncompact_sequence(const ProblemConfig& config, long l);

struct SmoothingRow {
  long k = 0;
  double output_norm = 0.0;
  double ratio = 0.0;  // (1 + |k|) * output_norm, for slope inspection
};

/// Applies (B A^{-1}) twice to the characteristic-aligned unit right-hand side
/// f_k(x) = e^{-ik omega x}, g_k = 0 and tabulates the L2 norm of the result.
/// This right-hand side saturates the 1/(1+|k|) smoothing estimate (smooth
/// non-aligned data decays faster and would not witness the bound).
std::vector<SmoothingRow> smoothing_decay(const ProblemConfig& config,
                                          const std::vector<long>& k_list,
                                          int base_degree = 32);

/// Weighted translation modulus
///   sqrt( sum_k (1+k^2)^gamma int |u_k(x+xi) e^{ik omega tau} - u_k(x)|^2 dx )
/// summed over both components, with zero extension outside [0,1].
double shift_modulus(const FourierField& field, double omega, double xi,
                     double tau);

/// Least-squares slope of log(y) against log(1+k).
double log_log_slope(const std::vector<SmoothingRow>& rows);

}  // namespace perihyp
