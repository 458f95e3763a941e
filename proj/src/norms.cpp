#include "fockvolt/norms.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fockvolt {

namespace {

constexpr double kMarginTol = 1e-12;

bool is_even_integer(double p) {
  if (p <= 0 || p != std::floor(p)) return false;
  return std::fmod(p, 2.0) == 0.0;
}

int trig_degree_hint(const EntireFunction& f, double p) {
  const GrowthEnvelope env = f.envelope();
  const int per_factor = std::max(1, static_cast<int>(std::ceil(p / 2.0)));
  return env.degree * (1 + per_factor);
}

struct IntegrandSetup {
  DecayBound bound;
  int trig_degree;
  bool angular_exact;
};

// Certified decay of |f|^p e^{-p psi_m} (optionally divided by D_m^p, which
// only helps). Throws nothing; the caller checks the margin first.
IntegrandSetup p_integrand_setup(const EntireFunction& f, const Weight& w, double p) {
  const GrowthEnvelope env = f.envelope();
  const double margin = 0.5 - env.quad;
  IntegrandSetup s;
  s.bound = DecayBound{p * margin, p * static_cast<double>(env.degree + w.m), p * env.lin};
  s.trig_degree = trig_degree_hint(f, p);
  s.angular_exact = (f.kind() == EntireFunction::Kind::Poly) && is_even_integer(p);
  return s;
}

NormResult infinite_p_norm(const EntireFunction& f, const Weight& w, double p) {
  const GrowthEnvelope env = f.envelope();
  std::ostringstream os;
  if (env.superquadratic)
    os << "integrand envelope has exponent degree >= 3";
  else
    os << "p-integral diverges: envelope quadratic coefficient " << env.quad
       << " >= 1/2 (p = " << p << ", m = " << w.m << ")";
  return NormResult::infinite(env.direction, os.str());
}

void require_p(double p) {
  if (!(p > 0.0) || !std::isfinite(p))
    throw std::invalid_argument("norm_p: exponent p must be positive and finite");
}

}  // namespace

NormResult norm_sup(const EntireFunction& f, const Weight& w, const QuadConfig& cfg) {
  return sup_search(f, w, cfg, SupWeight::Plain);
}

NormResult norm_p(const EntireFunction& f, const Weight& w, double p, const QuadConfig& cfg) {
  require_p(p);
  cfg.validate();
  if (f.is_zero()) return NormResult::finite_value(0.0, Complex{}, 0.0);
  const GrowthEnvelope env = f.envelope();
  if (env.superquadratic || env.quad >= 0.5 - kMarginTol) return infinite_p_norm(f, w, p);
  const IntegrandSetup s = p_integrand_setup(f, w, p);
  auto F = [&](Complex z) {
    const double r = std::abs(z);
    return std::pow(std::abs(f.eval_scaled(z, Complex{w.psi(r), 0.0}, cfg)), p);
  };
  const Integral I = integrate_plane(F, s.bound, cfg, s.trig_degree, s.angular_exact);
  const double value = std::pow(I.value, 1.0 / p);
  const double err = (I.value > 0.0) ? value * I.error / (p * I.value) : I.error;
  return NormResult::finite_value(value, Complex{}, err);
}

NormResult norm_sup_LP(const EntireFunction& f, const Weight& w, const QuadConfig& cfg) {
  const EntireFunction fd = f.derivative();
  NormResult s = sup_search(fd, w, cfg, SupWeight::LittlewoodPaley);
  if (!s.finite()) return s;
  const double head = std::abs(f.value_at_zero());
  NormResult res = NormResult::finite_value(head + s.value, s.argmax, s.err_estimate);
  res.note = s.note;
  return res;
}

NormResult norm_p_LP(const EntireFunction& f, const Weight& w, double p, const QuadConfig& cfg) {
  require_p(p);
  cfg.validate();
  const EntireFunction fd = f.derivative();
  const double head = std::abs(f.value_at_zero());
  if (fd.is_zero())
    return NormResult::finite_value(head, Complex{}, 0.0);
  const GrowthEnvelope env = fd.envelope();
  if (env.superquadratic || env.quad >= 0.5 - kMarginTol) return infinite_p_norm(fd, w, p);
  const IntegrandSetup s = p_integrand_setup(fd, w, p);
  auto F = [&](Complex z) {
    const double r = std::abs(z);
    return std::pow(std::abs(fd.eval_scaled(z, Complex{w.psi(r), 0.0}, cfg)) / w.normalizer(r), p);
  };
  const Integral I = integrate_plane(F, s.bound, cfg, s.trig_degree, s.angular_exact);
  const double total = std::pow(head, p) + I.value;
  const double value = std::pow(total, 1.0 / p);
  const double err = (total > 0.0) ? value * I.error / (p * total) : I.error;
  return NormResult::finite_value(value, Complex{}, err);
}

EquivalenceReport smoothing_check(const Poly& g, Complex lambda, const EntireFunction& f,
                               const Weight& w, const QuadConfig& cfg, std::string_view id) {
  if (g.degree() > 2) throw std::invalid_argument("smoothing_check: g must be quadratic at most");
  const double two_a = 2.0 * std::abs(g.coeff(2));
  if (!(std::abs(lambda) > two_a))
    throw std::invalid_argument("smoothing_check: requires |lambda| > 2|a|");
  const Poly q = (1.0 / lambda) * g;

  auto merged = [&](const EntireFunction& base) -> EntireFunction {
    switch (base.kind()) {
      case EntireFunction::Kind::Poly: return EntireFunction::exp_poly(base.poly_coeffs(), q);
      case EntireFunction::Kind::ExpPoly:
        return EntireFunction::exp_poly(base.exp_prefactor(), base.exp_exponent() + q);
      default:
        throw std::invalid_argument(
            "smoothing_check: test function must be polynomial or exp-polynomial");
    }
  };

  const NormResult lhs = sup_search(merged(f), w, cfg, SupWeight::Plain);
  const NormResult rhs_sup = sup_search(merged(f.derivative()), w, cfg, SupWeight::LittlewoodPaley);
  if (!lhs.finite() || !rhs_sup.finite())
    throw std::domain_error("smoothing_check: a side diverges; combined growth leaves the space");

  EquivalenceReport rep;
  rep.lhs = lhs.value;
  rep.rhs = std::abs(f.value_at_zero()) + rhs_sup.value;
  rep.ratio = (rep.rhs == 0.0 && rep.lhs == 0.0) ? 1.0 : rep.lhs / rep.rhs;
  rep.function_id = std::string(id);
  rep.m = w.m;
  rep.p = std::numeric_limits<double>::infinity();
  return rep;
}

}  // namespace fockvolt
