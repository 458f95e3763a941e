#pragma once

#include <string>
#include <vector>

#include "fockvolt/entire_function.hpp"
#include "fockvolt/kernel.hpp"
#include "fockvolt/poly.hpp"
#include "fockvolt/quadrature.hpp"
#include "fockvolt/weight.hpp"

namespace fockvolt {

/// The spectrum of V_g on the growth space for quadratic g = a z^2 + b z + c:
/// the closed disk of radius 2|a| about 0, independent of the order m.
struct SpectrumDescription {
  Complex a{};
  double radius = 0.0;
  std::string characterization_note;
};

enum class SpectralStatus { InSpectrum, Resolvent, Boundary };

struct SpectrumPointReport {
  Complex lambda{};
  SpectralStatus status = SpectralStatus::InSpectrum;
  bool has_membership = false;          // false only for lambda = 0
  MembershipReport raw_membership;      // predicate on e^{g/lambda}
  bool cross_check_ok = true;           // predicate agrees with the disk rule
};

struct ResolventScanPoint {
  Complex lambda{};
  SpectralStatus status = SpectralStatus::InSpectrum;
  double lower_bound = 0.0;             // max_h ||R_lambda h|| / ||h||; inf inside the disk
  std::vector<double> per_function;
  std::vector<std::string> notes;
};

struct ResolventScan {
  std::vector<ResolventScanPoint> points;
};

/// Requires deg g <= 2 (V_g is unbounded otherwise and has no spectrum here).
SpectrumDescription spectrum_of(const Poly& g, const Weight& w);

/// Disk rule first (lambda = 0 is always in the spectrum); the membership
/// predicate on e^{g/lambda} is recorded as a cross-check. On the boundary
/// circle the closure puts lambda in the spectrum regardless of the raw
/// predicate, which is reported as-is.
SpectrumPointReport in_spectrum(const Poly& g, const Weight& w, Complex lambda);

/// {1, z, z^2, three normalized kernels with |w| <= 3, e^{0.2 z^2}}.
std::vector<EntireFunction> default_spectral_testset(const QuadConfig& cfg);

/// Operator-norm lower bounds of the resolvent over a finite test set,
/// computed through the derivative-based norm and the ODE derivative of the
/// resolvent image. Per-function quadrature failures are recorded and the
/// scan continues.
ResolventScan resolvent_norm_scan(const Poly& g, const Weight& w,
                                  const std::vector<Complex>& lambdas,
                                  const std::vector<EntireFunction>& testset,
                                  const QuadConfig& cfg);

/// |lambda f(z) - V_g f(z) - h(z)|, with V_g f evaluated by segment quadrature.
double resolvent_defect(const Poly& g, Complex lambda, const EntireFunction& h,
                        const EntireFunction& f, Complex z, const QuadConfig& cfg);

}  // namespace fockvolt
