#pragma once

#include <string>
#include <vector>

#include "fockvolt/poly.hpp"
#include "fockvolt/quadrature.hpp"
#include "fockvolt/weight.hpp"

namespace fockvolt {

/// Symbolic boundedness/compactness verdict with numeric witnesses. The
/// verdict is decided exactly from the degree of g; the witnesses (ratio sups
/// over probe rings, growth-exponent fits, truncated integrals) only
/// illustrate it.
struct ClassifierVerdict {
  enum class Direction { IntoSup, FromSup };
  Direction direction = Direction::IntoSup;
  bool bounded = false;
  bool compact = false;
  std::string reason;

  // into-sup witness: B(w) = |g'(w)| / D_m(|w|)
  double sup_ratio = 0.0;       // max over the probe grid
  double growth_exponent = 0.0; // log-log LSQ slope over rings >= 8; NaN if g' = 0
  double limit_ratio = 0.0;     // ring max at |w| = 100
  std::vector<double> ring_radii;
  std::vector<double> ring_sups;

  // from-sup witness: truncated integrals of (|g'|/D_m)^p over growing disks
  std::vector<double> disk_radii;
  std::vector<double> disk_integrals;
  double fitted_limit = 0.0;     // A from the A + B/R fit on the largest disks
  double fitted_slope = 0.0;     // d I / d log R from the largest disks
  bool integral_divergent = false;  // symbolic rule, not a numeric discovery
};

/// |g'(w)| / D_m(|w|).
double symbol_ratio(const Poly& g, const Weight& w, Complex z);

/// Mapping into the sup-norm space: bounded iff deg g <= 2, compact iff
/// deg g <= 1, independent of p and m.
ClassifierVerdict classify_into_sup(const Poly& g, const Weight& w, double p);

/// Mapping out of the sup-norm space into the p-norm space (p finite):
/// bounded = compact = (deg g <= 1 and p > 2) or g constant.
ClassifierVerdict classify_from_sup(const Poly& g, const Weight& w, double p,
                                    const QuadConfig& cfg);

/// Density of the embedding measure: |g'(z)|^p (1+|z|)^{mp} / D_m(|z|)^p.
double carleson_density(const Poly& g, double p, const Weight& w, Complex z);

/// Gaussian-localized transform of the embedding measure,
///   int e^{-(t/2)|z-w|^2} (1+|z|)^{-mp} dmu(z),
/// by plane quadrature centred at w.
double berezin_tilde(const Poly& g, double p, const Weight& w, double t, Complex center,
                     const QuadConfig& cfg);

}  // namespace fockvolt
