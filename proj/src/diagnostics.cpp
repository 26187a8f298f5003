#include "diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace perihyp {

FourierField noncompact_sequence(const ProblemConfig& config, long l) {
  if (l < 1) throw std::invalid_argument("noncompact_sequence needs l >= 1");
  config.validate();
  const double scale = std::pow(1.0 + static_cast<double>(l) * l, -config.gamma / 2.0);
  const double lw = static_cast<double>(l) * config.omega;
  GridPtr grid = solve_grid(config, l, 32);
  ModeFunction u = ModeFunction::from_function(grid, [&](double x) {
    return scale * std::exp(Complex(0.0, -lw * x)) * x;
  });
  ModeFunction v = ModeFunction::from_function(grid, [&](double x) {
    return scale * std::exp(Complex(0.0, lw * x)) * (x - 1.0);
  });
  FourierField field(config.gamma);
  field.set_mode(l, std::move(u), std::move(v));
  return field;
}

std::vector<SmoothingRow> smoothing_decay(const ProblemConfig& config,
                                          const std::vector<long>& k_list,
                                          int base_degree) {
  config.validate();
  const ConditionReport cond = check_condition(config);
  if (!cond.satisfied) throw ConditionViolated(cond);

  std::vector<SmoothingRow> rows;
  rows.reserve(k_list.size());
  for (long k : k_list) {
    const double komega = static_cast<double>(k) * config.omega;
    GridPtr grid = solve_grid(config, k, base_degree);
    ModeFunction f = ModeFunction::from_function(grid, [&](double x) {
      return std::exp(Complex(0.0, -komega * x));
    });
    ModeSolveResult first =
        solve_decoupled_mode(config, k, f, ModeFunction(), base_degree);
    ModeFunction bu1 = first.v.scaled_by(config.b);
    ModeFunction bv1 = first.u.scaled_by(config.c);
    ModeSolveResult second =
        solve_decoupled_mode(config, k, bu1, bv1, base_degree);
    ModeFunction bu2 = second.v.resampled(grid).scaled_by(config.b);
    ModeFunction bv2 = second.u.resampled(grid).scaled_by(config.c);
    SmoothingRow row;
    row.k = k;
    row.output_norm = std::sqrt(bu2.l2_norm_sq() + bv2.l2_norm_sq());
    row.ratio = (1.0 + std::abs(static_cast<double>(k))) * row.output_norm;
    rows.push_back(row);
  }
  return rows;
}

double shift_modulus(const FourierField& field, double omega, double xi,
                     double tau) {
  if (!(std::abs(xi) < 1.0))
    throw std::domain_error("shift_modulus needs |xi| < 1");
  double sum = 0.0;
  for (const auto& [k, pair] : field.entries()) {
    const double weight =
        std::pow(1.0 + static_cast<double>(k) * static_cast<double>(k),
                 field.gamma());
    const Complex phase =
        std::exp(Complex(0.0, static_cast<double>(k) * omega * tau));
    for (const ModeFunction* m : {&pair.u, &pair.v}) {
      if (m->empty()) continue;
      // cut at the breakpoints of both the function and its shifted copy,
      // and at the point where x + xi leaves [0,1]
      std::vector<double> cuts = m->grid()->breakpoints();
      for (double bp : m->grid()->breakpoints()) {
        const double shifted = bp - xi;
        if (shifted > 0.0 && shifted < 1.0) cuts.push_back(shifted);
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      const int degree = m->grid()->degree() + 8;
      const ChebyshevBasis& basis = chebyshev_basis(degree);
      // the integrand may jump exactly at the cut points; evaluate the last
      // node of each cell by left limits so every cell sees its own side
      for (std::size_t cell = 0; cell + 1 < cuts.size(); ++cell) {
        const double half = 0.5 * (cuts[cell + 1] - cuts[cell]);
        double acc = 0.0;
        for (int i = 0; i <= degree; ++i) {
          const bool from_left = (i == degree);
          const double x = cuts[cell] + (basis.nodes[i] + 1.0) * half;
          const double y = x + xi;
          const bool inside = from_left ? (y > 0.0 && y <= 1.0)
                                        : (y >= 0.0 && y < 1.0);
          const Complex shifted_value =
              inside ? (from_left ? m->eval_left(y) : m->eval(y)) * phase
                     : Complex(0.0);
          const Complex here = from_left ? m->eval_left(x) : m->eval(x);
          acc += basis.quad_weights[i] * std::norm(shifted_value - here);
        }
        sum += weight * half * acc;
      }
    }
  }
  return std::sqrt(std::max(0.0, sum));
}

double log_log_slope(const std::vector<SmoothingRow>& rows) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t n = 0;
  for (const SmoothingRow& row : rows) {
    if (row.output_norm <= 0.0) continue;
    const double x = std::log(1.0 + std::abs(static_cast<double>(row.k)));
    const double y = std::log(row.output_norm);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw std::invalid_argument("slope fit needs two positive rows");
  const double denom = n * sxx - sx * sx;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace perihyp
