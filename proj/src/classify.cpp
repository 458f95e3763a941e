#include "fockvolt/classify.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fockvolt {

namespace {

constexpr int kRingDirections = 16;

double ring_sup(const Poly& gp, const Weight& w, double r) {
  double best = 0.0;
  for (int j = 0; j < kRingDirections; ++j) {
    const double th = 2.0 * M_PI * j / kRingDirections;
    best = std::max(best, std::abs(gp.eval(std::polar(r, th))) / w.normalizer(r));
  }
  return best;
}

// Least-squares slope of y against x.
double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

double symbol_ratio(const Poly& g, const Weight& w, Complex z) {
  return std::abs(g.derivative().eval(z)) / w.normalizer(std::abs(z));
}

ClassifierVerdict classify_into_sup(const Poly& g, const Weight& w, double /*p*/) {
  ClassifierVerdict v;
  v.direction = ClassifierVerdict::Direction::IntoSup;
  const int deg = g.degree();
  v.bounded = deg <= 2;
  v.compact = deg <= 1;
  {
    std::ostringstream os;
    os << "deg g = " << deg << ": bounded iff deg <= 2, compact iff deg <= 1";
    v.reason = os.str();
  }

  const Poly gp = g.derivative();
  v.ring_radii = {1, 2, 4, 8, 16, 32, 64, 128};
  for (double r : v.ring_radii) {
    const double s = gp.is_zero() ? 0.0 : ring_sup(gp, w, r);
    v.ring_sups.push_back(s);
    v.sup_ratio = std::max(v.sup_ratio, s);
  }
  v.limit_ratio = gp.is_zero() ? 0.0 : ring_sup(gp, w, 100.0);

  if (gp.is_zero()) {
    v.growth_exponent = std::numeric_limits<double>::quiet_NaN();
    return v;
  }
  std::vector<double> lx, ly;
  for (size_t i = 0; i < v.ring_radii.size(); ++i) {
    if (v.ring_radii[i] < 8.0) continue;
    lx.push_back(std::log(v.ring_radii[i]));
    ly.push_back(std::log(v.ring_sups[i]));
  }
  v.growth_exponent = lsq_slope(lx, ly);
  return v;
}

ClassifierVerdict classify_from_sup(const Poly& g, const Weight& w, double p,
                                    const QuadConfig& cfg) {
  if (!(p > 0.0) || !std::isfinite(p))
    throw std::invalid_argument("classify_from_sup: p must be finite and positive");
  ClassifierVerdict v;
  v.direction = ClassifierVerdict::Direction::FromSup;
  const Poly gp = g.derivative();
  const int dgp = gp.degree();  // -1 when g is constant
  v.bounded = v.compact = gp.is_zero() || (dgp == 0 && p > 2.0);
  v.integral_divergent = !v.bounded;
  {
    std::ostringstream os;
    os << "deg g' = " << dgp << ", p = " << p
       << ": (|g'|/D_m)^p is area-integrable iff g' = 0 or (deg g' = 0 and p > 2)";
    v.reason = os.str();
  }

  // Truncated integrals over growing disks; the fits summarize the growth.
  // The last three disks drive both fits so the asymptotic regime dominates.
  v.disk_radii = {5, 10, 20, 25, 40, 50, 80, 100, 160};
  if (gp.is_zero()) {
    v.disk_integrals.assign(v.disk_radii.size(), 0.0);
    return v;
  }
  auto F = [&](Complex z) {
    return std::pow(std::abs(gp.eval(z)) / w.normalizer(std::abs(z)), p);
  };
  const int trig = std::max(0, dgp) * (1 + static_cast<int>(std::ceil(p / 2.0)));
  QuadConfig dcfg = cfg;
  dcfg.max_radius = std::max(cfg.max_radius, v.disk_radii.back());
  for (double R : v.disk_radii)
    v.disk_integrals.push_back(integrate_disk(F, R, dcfg, trig).value);

  const size_t n = v.disk_radii.size();
  // Convergence fit I(R) = A + B/R on {25, 50, 100}; slope fit on {40, 80, 160}.
  std::vector<double> fit_x, fit_y;
  for (size_t i = 0; i < n; ++i) {
    const double R = v.disk_radii[i];
    if (R == 25.0 || R == 50.0 || R == 100.0) {
      fit_x.push_back(1.0 / R);
      fit_y.push_back(v.disk_integrals[i]);
    }
  }
  const double B = lsq_slope(fit_x, fit_y);
  double mean_x = 0, mean_y = 0;
  for (size_t i = 0; i < fit_x.size(); ++i) {
    mean_x += fit_x[i];
    mean_y += fit_y[i];
  }
  mean_x /= fit_x.size();
  mean_y /= fit_y.size();
  v.fitted_limit = mean_y - B * mean_x;

  std::vector<double> sx, sy;
  for (size_t i = 0; i < n; ++i) {
    const double R = v.disk_radii[i];
    if (R == 40.0 || R == 80.0 || R == 160.0) {
      sx.push_back(std::log(R));
      sy.push_back(v.disk_integrals[i]);
    }
  }
  v.fitted_slope = lsq_slope(sx, sy);
  return v;
}

double carleson_density(const Poly& g, double p, const Weight& w, Complex z) {
  if (!(p > 0.0)) throw std::invalid_argument("carleson_density: p must be positive");
  const double r = std::abs(z);
  const double gpv = std::abs(g.derivative().eval(z));
  return std::pow(gpv, p) * std::pow(1.0 + r, w.m * p) / std::pow(w.normalizer(r), p);
}

double berezin_tilde(const Poly& g, double p, const Weight& w, double t, Complex center,
                     const QuadConfig& cfg) {
  if (!(t > 0.0)) throw std::invalid_argument("berezin_tilde: t must be positive");
  if (!(p > 0.0)) throw std::invalid_argument("berezin_tilde: p must be positive");
  const Poly gp = g.derivative();
  if (gp.is_zero()) return 0.0;
  // The (1+|z|)^{mp} factors of the density and the transform cancel exactly.
  auto F = [&](Complex s) {
    const Complex z = center + s;
    const double gauss = std::exp(-0.5 * t * std::norm(s));
    return gauss * std::pow(std::abs(gp.eval(z)) / w.normalizer(std::abs(z)), p);
  };
  const int dgp = std::max(0, gp.degree());
  DecayBound bound{0.5 * t, p * dgp, 0.0};
  const int trig = dgp * (1 + static_cast<int>(std::ceil(p / 2.0)));
  return integrate_plane(F, bound, cfg, trig).value;
}

}  // namespace fockvolt
