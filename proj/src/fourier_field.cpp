#include "fourier_field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace perihyp {

namespace {

double weight(double gamma, long k) {
  return std::pow(1.0 + static_cast<double>(k) * static_cast<double>(k), gamma);
}

}  // namespace

void FourierField::set_mode(long k, ModeFunction u, ModeFunction v) {
  if (u.empty() && v.empty())
    throw std::invalid_argument("mode entry needs at least one component");
  if (u.empty()) u = ModeFunction::zero(v.grid());
  if (v.empty()) v = ModeFunction::zero(u.grid());
  entries_[k] = ModePair{std::move(u), std::move(v)};
}

double FourierField::conjugate_symmetry_defect() const {
  double defect = 0.0;
  for (const auto& [k, pair] : entries_) {
    if (k < 0) continue;
    auto check = [&](const ModeFunction& pos, const ModeFunction& neg) {
      ModeFunction diff = neg.resampled(pos.grid()) - pos.conjugate();
      defect = std::max(defect, diff.sup_norm());
    };
    auto it = entries_.find(-k);
    if (it == entries_.end()) {  // k > 0 here: a one-sided entry counts fully
      defect = std::max({defect, pair.u.sup_norm(), pair.v.sup_norm()});
      continue;
    }
    check(pair.u, it->second.u);
    check(pair.v, it->second.v);
  }
  return defect;
}

void FourierField::complete_conjugate_modes() {
  std::map<long, ModePair> additions;
  for (const auto& [k, pair] : entries_)
    if (k > 0 && !has_mode(-k))
      additions[-k] = ModePair{pair.u.conjugate(), pair.v.conjugate()};
  for (auto& [k, pair] : additions) entries_[k] = std::move(pair);
}

double norm_h0gamma(const FourierField& field, Component component, double gamma,
                    double omega) {
  double sum = 0.0;
  for (const auto& [k, pair] : field.entries()) {
    const ModeFunction& f = (component == Component::first) ? pair.u : pair.v;
    if (f.empty()) continue;
    sum += weight(gamma, k) * f.l2_norm_sq();
  }
  const double factor = 2.0 * std::numbers::pi / omega;
  return factor * std::sqrt(sum);
}

double norm_w(const FourierField& field, double omega) {
  const double nu = norm_h0gamma(field, Component::first, field.gamma(), omega);
  const double nv = norm_h0gamma(field, Component::second, field.gamma(), omega);
  return std::sqrt(nu * nu + nv * nv);
}

FourierField transport_image(const FourierField& field, double omega) {
  FourierField out(field.gamma());
  const Complex i(0.0, 1.0);
  for (const auto& [k, pair] : field.entries()) {
    const Complex ikw = i * (static_cast<double>(k) * omega);
    ModeFunction tu = pair.u.derivative();
    ModeFunction udrift = pair.u;
    udrift *= ikw;
    tu += udrift;
    ModeFunction tv = pair.v.derivative();
    tv *= Complex(-1.0);
    ModeFunction vdrift = pair.v;
    vdrift *= ikw;
    tv += vdrift;
    out.set_mode(k, std::move(tu), std::move(tv));
  }
  return out;
}

double norm_v(const FourierField& field, const ProblemConfig& config,
              const FourierField* applied) {
  const double w = norm_w(field, config.omega);
  FourierField local;
  const FourierField* image = applied;
  if (!image) {
    local = transport_image(field, config.omega);
    image = &local;
  }
  const double t = norm_w(*image, config.omega);
  return std::sqrt(w * w + t * t);
}

double inner_product(const FourierField& x, const FourierField& y, double omega) {
  (void)omega;  // the mode-sum form of the pairing has no omega factor
  const double sx = x.conjugate_symmetry_defect();
  const double sy = y.conjugate_symmetry_defect();
  if (sx > 1e-9 || sy > 1e-9)
    throw std::invalid_argument("inner_product requires conjugate-symmetric fields");
  Complex sum(0.0);
  for (const auto& [k, pair] : x.entries()) {
    if (!y.has_mode(k)) continue;
    const ModePair& other = y.mode(k);
    sum += l2_inner_product(pair.u, other.u) + l2_inner_product(pair.v, other.v);
  }
  if (std::abs(sum.imag()) >= 1e-12 * std::max(1.0, std::abs(sum.real())))
    throw std::invalid_argument("inner_product imaginary residue too large");
  return sum.real();
}

std::map<long, std::pair<Complex, Complex>> trace(const FourierField& field,
                                                  double x) {
  if (x < 0.0 || x > 1.0) throw std::domain_error("trace argument outside [0,1]");
  std::map<long, std::pair<Complex, Complex>> out;
  for (const auto& [k, pair] : field.entries()) {
    Complex u, v;
    if (x >= 1.0) {
      u = pair.u.eval_left(1.0);
      v = pair.v.eval_left(1.0);
    } else {
      u = pair.u.eval(x);
      v = pair.v.eval(x);
    }
    out[k] = {u, v};
  }
  return out;
}

std::pair<double, double> synthesize(const FourierField& field, double x, double t,
                                     double omega) {
  Complex u(0.0), v(0.0);
  for (const auto& [k, pair] : field.entries()) {
    const Complex phase = std::exp(Complex(0.0, static_cast<double>(k) * omega * t));
    u += pair.u.eval(x) * phase;
    v += pair.v.eval(x) * phase;
  }
  return {u.real(), v.real()};
}

}  // namespace perihyp
