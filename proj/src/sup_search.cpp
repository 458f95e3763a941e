#include "fockvolt/sup_search.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fockvolt {

namespace {

struct PointEval {
  double value = 0.0;
  bool failed = false;
};

}  // namespace

NormResult sup_search(const EntireFunction& f, const Weight& w, const QuadConfig& cfg,
                      SupWeight form) {
  cfg.validate();
  const MembershipReport rep = membership(f, w);
  if (!rep.sup_finite()) return NormResult::infinite(rep.direction, rep.detail);
  if (f.is_zero()) return NormResult::finite_value(0.0, Complex{}, 0.0);

  const GrowthEnvelope env = f.envelope();
  const double margin = 0.5 - env.quad;
  double r_max = cfg.max_radius;
  if (margin > 1e-12) {
    DecayBound bound{margin, static_cast<double>(env.degree + w.m), env.lin};
    r_max = std::min(bound.cutoff_radius(cfg.abs_tol), cfg.max_radius);
  }

  int quad_failures = 0;
  auto weighted = [&](double r, double theta) -> double {
    const Complex z = std::polar(r, theta);
    double val;
    try {
      val = std::abs(f.eval_scaled(z, Complex{w.psi(r), 0.0}, cfg));
    } catch (const QuadratureError&) {
      ++quad_failures;
      return 0.0;
    }
    if (form == SupWeight::LittlewoodPaley) val /= w.normalizer(r);
    return std::isfinite(val) ? val : 0.0;
  };

  // Coarse polar grid: geometric radii plus the origin.
  const int n_theta = std::clamp(std::max(cfg.angular_samples, 4 * (env.degree + 1)), 8, 256);
  const int n_r = std::clamp(4 * (env.degree + w.m + 4), 48, 192);
  std::vector<double> radii;
  radii.reserve(static_cast<size_t>(n_r) + 1);
  radii.push_back(0.0);
  const double r_lo = 0.01;
  for (int i = 0; i < n_r; ++i)
    radii.push_back(r_lo * std::pow(r_max / r_lo, static_cast<double>(i) / (n_r - 1)));

  double best = weighted(0.0, 0.0);
  double best_theta = 0.0;
  int best_ir = 0;
  for (int j = 0; j < n_theta; ++j) {
    const double theta = 2.0 * M_PI * j / n_theta;
    for (int i = 1; i < static_cast<int>(radii.size()); ++i) {
      const double v = weighted(radii[static_cast<size_t>(i)], theta);
      if (v > best) {
        best = v;
        best_theta = theta;
        best_ir = i;
      }
    }
  }

  const auto radial_refine = [&](double theta, int ir_hint) -> GoldenResult {
    const int lo = std::max(0, ir_hint - 2);
    const int hi = std::min(static_cast<int>(radii.size()) - 1, ir_hint + 2);
    const double a = radii[static_cast<size_t>(lo)];
    const double b = (hi == ir_hint) ? std::min(r_max, radii.back() * 1.05)
                                     : radii[static_cast<size_t>(hi)];
    GoldenResult g = golden_max([&](double r) { return weighted(r, theta); }, a, b,
                                1e-12 * (1.0 + b), 250);
    const double at_zero = weighted(0.0, theta);
    if (at_zero > g.value) return {0.0, at_zero};
    return g;
  };

  GoldenResult best_radial = radial_refine(best_theta, best_ir);

  // Local angular refinement around the best direction.
  const double dtheta = 2.0 * M_PI / n_theta;
  GoldenResult best_angular = golden_max(
      [&](double theta) { return radial_refine(theta, best_ir).value; }, best_theta - dtheta,
      best_theta + dtheta, 1e-10, 120);
  double value = best_radial.value;
  double theta_star = best_theta, r_star = best_radial.x;
  if (best_angular.value > value) {
    value = best_angular.value;
    theta_star = best_angular.x;
    r_star = radial_refine(best_angular.x, best_ir).x;
  }
  if (best > value) {
    value = best;
    theta_star = best_theta;
    r_star = radii[static_cast<size_t>(best_ir)];
  }

  NormResult res = NormResult::finite_value(value, std::polar(r_star, theta_star),
                                            std::max(value * 1e-12, 0.0));
  if (quad_failures > 0) {
    res.err_estimate = std::max(res.err_estimate, value * 1e-3);
    res.note = std::to_string(quad_failures) +
               " point evaluations hit the quadrature refinement cap; value is best-so-far";
  }
  return res;
}

}  // namespace fockvolt
