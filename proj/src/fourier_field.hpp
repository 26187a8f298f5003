#pragma once

#include <map>
#include <optional>
#include <utility>

#include "mode_function.hpp"

namespace perihyp {

struct ModePair {
  ModeFunction u;
  ModeFunction v;
};

/// Finite family of Fourier modes k -> (u_k, v_k) together with the norm
/// weight exponent gamma.  Absent modes are identically zero.  Fields that
/// represent real-valued (u,v) carry conjugate-symmetric entries; complex
/// test elements (e.g. the noncompactness sequence) need not.
class FourierField {
 public:
  FourierField() = default;
  explicit FourierField(double gamma) : gamma_(gamma) {}

  double gamma() const { return gamma_; }
  void set_gamma(double g) { gamma_ = g; }

  bool has_mode(long k) const { return entries_.count(k) != 0; }
  const ModePair& mode(long k) const { return entries_.at(k); }
  void set_mode(long k, ModeFunction u, ModeFunction v);
  void erase_mode(long k) { entries_.erase(k); }
  const std::map<long, ModePair>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Max deviation of entry(-k) from conj(entry(k)) over collocation samples.
  double conjugate_symmetry_defect() const;
  /// Adds the missing -k entries as conjugates of the k > 0 entries.
  void complete_conjugate_modes();

 private:
  std::map<long, ModePair> entries_;
  double gamma_ = 1.0;
};

enum class Component { first, second };

/// Norm of one component family in H^{0,gamma}:
///   (2pi/omega) * sqrt( sum_k (1+k^2)^gamma int_0^1 |u_k|^2 dx ),
/// the verbatim norm with the stored-coefficient convention
/// int u e^{-ik omega t} dt = (2pi/omega) u_k.
double norm_h0gamma(const FourierField& field, Component component, double gamma,
                    double omega);

/// W^gamma norm: sqrt of the sum of the squared component norms.
double norm_w(const FourierField& field, double omega);

/// V^gamma norm; the transport image (ikw u_k + u_k', ikw v_k - v_k') is
/// computed by spectral differentiation unless `applied` supplies it.
double norm_v(const FourierField& field, const ProblemConfig& config,
              const FourierField* applied = nullptr);

/// Real inner product sum_k int (u_k conj(phi_k) + v_k conj(psi_k)) dx.
/// Both fields must be conjugate-symmetric; a larger-than-roundoff imaginary
/// residue raises std::invalid_argument.
double inner_product(const FourierField& x, const FourierField& y, double omega);

/// Per-mode one-sided boundary values at x.
std::map<long, std::pair<Complex, Complex>> trace(const FourierField& field, double x);

/// Real point values (u, v)(x, t) by summing the finite mode family.
std::pair<double, double> synthesize(const FourierField& field, double x, double t,
                                     double omega);

/// Transport image of the field: mode k maps to
/// (ikw u_k + u_k', ikw v_k - v_k').
FourierField transport_image(const FourierField& field, double omega);

}  // namespace perihyp
