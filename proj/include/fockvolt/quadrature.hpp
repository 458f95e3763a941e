#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "fockvolt/poly.hpp"

namespace fockvolt {

struct QuadConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  double max_radius = 50.0;
  int radial_panels = 8;
  int angular_samples = 32;
  int max_refinements = 12;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
      throw std::invalid_argument("QuadConfig: tolerances must be positive");
    if (!(max_radius >= 10.0)) throw std::invalid_argument("QuadConfig: max_radius must be >= 10");
    if (angular_samples < 8) throw std::invalid_argument("QuadConfig: angular_samples must be >= 8");
    if (radial_panels < 1 || max_refinements < 0)
      throw std::invalid_argument("QuadConfig: bad panel/refinement counts");
    if (!std::isfinite(rel_tol) || !std::isfinite(abs_tol) || !std::isfinite(max_radius))
      throw std::invalid_argument("QuadConfig: non-finite field");
  }

  QuadConfig tightened(double rel, double abs) const {
    QuadConfig c = *this;
    c.rel_tol = std::min(c.rel_tol, rel);
    c.abs_tol = std::min(c.abs_tol, abs);
    return c;
  }
};

/// Refinement cap reached before two successive estimates agreed.
struct QuadratureError : std::runtime_error {
  double estimate_prev;
  double estimate_last;
  QuadratureError(const std::string& what, double prev, double last)
      : std::runtime_error(what), estimate_prev(prev), estimate_last(last) {}
};

/// Certificate |F(z)| <= (1+|z|)^poly_degree * exp(-gauss_margin |z|^2 + lin_growth |z|)
/// supplied by the caller of the plane integrator.
struct DecayBound {
  double gauss_margin = 1.0;
  double poly_degree = 0.0;
  double lin_growth = 0.0;

  /// Radius beyond which the certified envelope stays below tol. Fixed point of
  /// mu R^2 = L + lin R + deg log(1+R).
  double cutoff_radius(double tol) const {
    if (!(gauss_margin > 0.0))
      throw std::invalid_argument("DecayBound: divergent integrand (gauss_margin <= 0)");
    const double L = std::log(1.0 / std::min(tol, 1e-6)) + 12.0;
    double r = std::sqrt(L / gauss_margin) + 1.0;
    for (int i = 0; i < 80; ++i) {
      double rhs = (L + lin_growth * r + poly_degree * std::log1p(r)) / gauss_margin;
      r = std::sqrt(std::max(rhs, 1.0));
    }
    return std::max(r, 10.0);
  }
};

struct Integral {
  double value = 0.0;
  double error = 0.0;
};

struct ComplexIntegral {
  Complex value{};
  double error = 0.0;
};

/// Weighted sup or integral outcome: a finite value with its maximizer and an
/// error estimate, or a divergence certificate (direction + growth report).
struct NormResult {
  enum class Kind { Finite, Infinite };
  Kind kind = Kind::Finite;
  double value = 0.0;
  Complex argmax{};
  double err_estimate = 0.0;
  double direction = 0.0;
  std::string growth_report;
  std::string note;

  bool finite() const { return kind == Kind::Finite; }
  static NormResult finite_value(double v, Complex arg, double err) {
    NormResult r;
    r.kind = Kind::Finite;
    r.value = v;
    r.argmax = arg;
    r.err_estimate = err;
    return r;
  }
  static NormResult infinite(double dir, std::string report) {
    NormResult r;
    r.kind = Kind::Infinite;
    r.direction = dir;
    r.growth_report = std::move(report);
    return r;
  }
};

namespace detail {
inline constexpr std::array<std::array<double, 2>, 15> kGauss15{{
    {-0.98799251802048542849, 0.030753241996117268355},
    {-0.93727339240070590431, 0.070366047488108124709},
    {-0.8482065834104272162, 0.10715922046717193501},
    {-0.72441773136017004742, 0.13957067792615431445},
    {-0.57097217260853884754, 0.16626920581699393355},
    {-0.3941513470775633699, 0.18616100001556221103},
    {-0.2011940939974345223, 0.19843148532711157646},
    {0.0, 0.20257824192556127288},
    {0.2011940939974345223, 0.19843148532711157646},
    {0.3941513470775633699, 0.18616100001556221103},
    {0.57097217260853884754, 0.16626920581699393355},
    {0.72441773136017004742, 0.13957067792615431445},
    {0.8482065834104272162, 0.10715922046717193501},
    {0.93727339240070590431, 0.070366047488108124709},
    {0.98799251802048542849, 0.030753241996117268355},
}};

double pairwise_sum(const double* x, std::size_t n);

template <class Fn>
Complex gauss15_segment(Fn&& f, Complex z0, Complex z1) {
  const Complex mid = 0.5 * (z0 + z1), half = 0.5 * (z1 - z0);
  Complex acc{};
  for (const auto& [x, w] : kGauss15) acc += w * f(mid + x * half);
  return acc * half;
}

template <class Fn>
struct SegmentWorker {
  Fn& f;
  double tol_per_len;
  int max_depth;
  Complex integrate(Complex z0, Complex z1, Complex whole, int depth) const {
    const Complex mid = 0.5 * (z0 + z1);
    const Complex left = gauss15_segment(f, z0, mid);
    const Complex right = gauss15_segment(f, mid, z1);
    const Complex refined = left + right;
    if (std::abs(refined - whole) <= tol_per_len * std::abs(z1 - z0)) return refined;
    if (depth >= max_depth)
      throw QuadratureError("integrate_segment: refinement cap reached", std::abs(whole),
                            std::abs(refined));
    return integrate(z0, mid, left, depth + 1) + integrate(mid, z1, right, depth + 1);
  }
};
}  // namespace detail

/// Contour integral of f over the straight segment [z0, z1]: adaptive bisection
/// with 15-point Gauss nodes per sub-segment, deterministic node placement.
template <class Fn>
Complex integrate_segment(Fn&& f, Complex z0, Complex z1, const QuadConfig& cfg,
                          double* err_out = nullptr) {
  const double len = std::abs(z1 - z0);
  if (len == 0.0) {
    if (err_out) *err_out = 0.0;
    return {};
  }
  const Complex whole = detail::gauss15_segment(f, z0, z1);
  // Scale the acceptance threshold by the first global estimate.
  const double tol = (cfg.abs_tol + cfg.rel_tol * std::abs(whole)) / len;
  detail::SegmentWorker<Fn> worker{f, tol, cfg.max_refinements};
  const Complex result = worker.integrate(z0, z1, whole, 0);
  if (err_out) *err_out = std::abs(result - whole) * 1e-3 + cfg.abs_tol;
  return result;
}

/// Adaptive composite Gauss quadrature of f on [0, r_max] (doubling panels
/// until two successive estimates agree).
Integral integrate_radial(const std::function<double(double)>& f, double r_max,
                          const QuadConfig& cfg);

/// Plane integral of a nonnegative integrand with certified decay: polar
/// product rule with adaptive radial panels and uniform trapezoid in the
/// angle (spectrally accurate for smooth periodic slices). trig_degree sizes
/// the initial angular grid; angular_exact pins it (trig-polynomial slices).
Integral integrate_plane(const std::function<double(Complex)>& F, const DecayBound& bound,
                         const QuadConfig& cfg, int trig_degree = 0, bool angular_exact = false);

/// Same product rule restricted to the disk |z| < radius; no decay required.
Integral integrate_disk(const std::function<double(Complex)>& F, double radius,
                        const QuadConfig& cfg, int trig_degree = 0, bool angular_exact = false);

/// Complex-valued variant (used by sesquilinear pairings).
ComplexIntegral integrate_plane_complex(const std::function<Complex(Complex)>& F,
                                        const DecayBound& bound, const QuadConfig& cfg,
                                        int trig_degree = 0);

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section maximization on [a, b].
template <class Fn>
GoldenResult golden_max(Fn&& f, double a, double b, double xtol, int max_iter = 200) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc > fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
}

}  // namespace fockvolt
