#include "fockvolt/spectrum.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fockvolt/norms.hpp"

namespace fockvolt {

namespace {

constexpr double kBoundaryTol = 1e-12;

SpectralStatus disk_status(double abs_lambda, double radius) {
  const double tol = kBoundaryTol * std::max(1.0, radius);
  if (std::abs(abs_lambda - radius) <= tol) return SpectralStatus::Boundary;
  return abs_lambda < radius ? SpectralStatus::InSpectrum : SpectralStatus::Resolvent;
}

}  // namespace

SpectrumDescription spectrum_of(const Poly& g, const Weight& /*w*/) {
  if (g.degree() > 2)
    throw std::invalid_argument(
        "spectrum_of: deg g > 2 makes V_g unbounded on the growth space; no spectrum here");
  SpectrumDescription d;
  d.a = g.coeff(2);
  d.radius = 2.0 * std::abs(d.a);
  d.characterization_note =
      "closed disk |lambda| <= 2|a|; equals {0} together with the closure of the nonzero lambda "
      "for which e^{g/lambda} falls outside the weighted sup space; radius 0 for deg g <= 1 "
      "(compact case)";
  return d;
}

SpectrumPointReport in_spectrum(const Poly& g, const Weight& w, Complex lambda) {
  const SpectrumDescription d = spectrum_of(g, w);
  SpectrumPointReport rep;
  rep.lambda = lambda;
  if (lambda == Complex{}) {
    rep.status = SpectralStatus::InSpectrum;
    rep.has_membership = false;
    rep.cross_check_ok = true;
    return rep;
  }
  rep.status = disk_status(std::abs(lambda), d.radius);
  rep.has_membership = true;
  rep.raw_membership = exp_poly_membership(Poly::constant(1.0), (1.0 / lambda) * g, w);
  switch (rep.status) {
    case SpectralStatus::Resolvent:
      rep.cross_check_ok = rep.raw_membership.sup_finite();
      break;
    case SpectralStatus::InSpectrum:
      rep.cross_check_ok = !rep.raw_membership.sup_finite();
      break;
    case SpectralStatus::Boundary:
      // The closure makes boundary points spectral regardless of the raw
      // predicate; any outcome is consistent.
      rep.cross_check_ok = true;
      break;
  }
  return rep;
}

std::vector<EntireFunction> default_spectral_testset(const QuadConfig& cfg) {
  std::vector<EntireFunction> set;
  set.push_back(EntireFunction::constant(1.0));
  set.push_back(EntireFunction::identity());
  set.push_back(EntireFunction::poly(Poly::monomial(2)));
  const KernelModel model = KernelModel::build(Weight{0}, KernelModel::default_truncation(3.0), cfg);
  set.push_back(EntireFunction::poly(model.normalized_kernel(Complex{1.0, 0.0})));
  set.push_back(EntireFunction::poly(model.normalized_kernel(Complex{2.0, 0.0})));
  set.push_back(EntireFunction::poly(model.normalized_kernel(Complex{0.0, 3.0})));
  set.push_back(EntireFunction::exp_poly(Poly::constant(1.0), Poly::monomial(2, 0.2)));
  return set;
}

ResolventScan resolvent_norm_scan(const Poly& g, const Weight& w,
                                  const std::vector<Complex>& lambdas,
                                  const std::vector<EntireFunction>& testset,
                                  const QuadConfig& cfg) {
  const SpectrumDescription d = spectrum_of(g, w);
  ResolventScan scan;
  scan.points.reserve(lambdas.size());
  for (Complex lambda : lambdas) {
    ResolventScanPoint pt;
    pt.lambda = lambda;
    pt.status = (lambda == Complex{}) ? SpectralStatus::InSpectrum
                                      : disk_status(std::abs(lambda), d.radius);
    if (pt.status != SpectralStatus::Resolvent) {
      pt.lower_bound = std::numeric_limits<double>::infinity();
      pt.notes.push_back(
          "inside the spectral disk (or on its boundary): resolvent images fall outside the "
          "space, norms are infinite by the membership predicate");
      scan.points.push_back(std::move(pt));
      continue;
    }
    double best = 0.0;
    for (const EntireFunction& h : testset) {
      try {
        const NormResult num = norm_sup_LP(resolvent_apply(g, lambda, h), w, cfg);
        const NormResult den = norm_sup_LP(h, w, cfg);
        if (!num.finite() || !den.finite() || den.value == 0.0) {
          pt.per_function.push_back(std::numeric_limits<double>::quiet_NaN());
          pt.notes.push_back("norm not finite for test function " + h.describe());
          continue;
        }
        const double ratio = num.value / den.value;
        pt.per_function.push_back(ratio);
        best = std::max(best, ratio);
      } catch (const QuadratureError& e) {
        pt.per_function.push_back(std::numeric_limits<double>::quiet_NaN());
        pt.notes.push_back(std::string("quadrature failure: ") + e.what());
      }
    }
    pt.lower_bound = best;
    scan.points.push_back(std::move(pt));
  }
  return scan;
}

double resolvent_defect(const Poly& g, Complex lambda, const EntireFunction& h,
                        const EntireFunction& f, Complex z, const QuadConfig& cfg) {
  const Poly gp = g.derivative();
  const Complex vgf =
      (z == Complex{} || gp.is_zero())
          ? Complex{}
          : integrate_segment([&](Complex u) { return f.evaluate(u, cfg) * gp.eval(u); }, Complex{},
                              z, cfg);
  return std::abs(lambda * f.evaluate(z, cfg) - vgf - h.evaluate(z, cfg));
}

}  // namespace fockvolt
