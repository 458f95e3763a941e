#include "fockvolt/quadrature.hpp"

#include <vector>

namespace fockvolt {

namespace detail {

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 8) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

namespace {

// One composite pass: n_panels uniform panels on [0, r_max], 15-pt Gauss each,
// ring values averaged over n_theta uniform angles (or f taken radially).
template <class RingFn>
double composite_polar(RingFn&& ring, double r_max, int n_panels) {
  std::vector<double> panel(static_cast<size_t>(n_panels));
  const double h = r_max / n_panels;
  for (int p = 0; p < n_panels; ++p) {
    const double r0 = p * h, r1 = r0 + h;
    const double mid = 0.5 * (r0 + r1), half = 0.5 * (r1 - r0);
    double acc = 0.0;
    for (const auto& [x, w] : kGauss15) {
      const double r = mid + x * half;
      acc += w * ring(r);
    }
    panel[static_cast<size_t>(p)] = acc * half;
  }
  return pairwise_sum(panel.data(), panel.size());
}

double angular_average(const std::function<double(Complex)>& F, double r, int n_theta) {
  std::vector<double> vals(static_cast<size_t>(n_theta));
  for (int j = 0; j < n_theta; ++j) {
    const double th = 2.0 * M_PI * j / n_theta;
    vals[static_cast<size_t>(j)] = F(Complex{r * std::cos(th), r * std::sin(th)});
  }
  return pairwise_sum(vals.data(), vals.size()) / n_theta;
}

Complex angular_average_c(const std::function<Complex(Complex)>& F, double r, int n_theta) {
  std::vector<double> re(static_cast<size_t>(n_theta)), im(static_cast<size_t>(n_theta));
  for (int j = 0; j < n_theta; ++j) {
    const double th = 2.0 * M_PI * j / n_theta;
    const Complex v = F(Complex{r * std::cos(th), r * std::sin(th)});
    re[static_cast<size_t>(j)] = v.real();
    im[static_cast<size_t>(j)] = v.imag();
  }
  return Complex{pairwise_sum(re.data(), re.size()), pairwise_sum(im.data(), im.size())} /
         static_cast<double>(n_theta);
}

int initial_angular(const QuadConfig& cfg, int trig_degree) {
  int n = std::max(cfg.angular_samples, 4 * (trig_degree + 1));
  return std::min(n, 1024);
}

struct PolarResult {
  double value;
  double error;
};

// Shared refinement loop for disk/plane integrals.
PolarResult refine_polar(const std::function<double(Complex)>& F, double r_max,
                         const QuadConfig& cfg, int trig_degree, bool angular_exact) {
  int n_theta = initial_angular(cfg, trig_degree);
  int n_panels = cfg.radial_panels;
  double prev = 0.0;
  bool have_prev = false;
  for (int level = 0;; ++level) {
    auto ring = [&](double r) { return 2.0 * M_PI * r * angular_average(F, r, n_theta); };
    const double val = composite_polar(ring, r_max, n_panels);
    if (have_prev) {
      const double diff = std::abs(val - prev);
      if (diff <= cfg.rel_tol * std::abs(val) + cfg.abs_tol) return {val, diff};
      if (level >= cfg.max_refinements)
        throw QuadratureError("integrate_plane: refinement cap reached", prev, val);
    }
    prev = val;
    have_prev = true;
    n_panels *= 2;
    if (!angular_exact) n_theta = std::min(2 * n_theta, 4096);
  }
}

}  // namespace
}  // namespace detail

Integral integrate_radial(const std::function<double(double)>& f, double r_max,
                          const QuadConfig& cfg) {
  int n_panels = cfg.radial_panels;
  double prev = 0.0;
  bool have_prev = false;
  for (int level = 0;; ++level) {
    const double val = detail::composite_polar(f, r_max, n_panels);
    if (have_prev) {
      const double diff = std::abs(val - prev);
      if (diff <= cfg.rel_tol * std::abs(val) + cfg.abs_tol) return {val, diff};
      if (level >= cfg.max_refinements)
        throw QuadratureError("integrate_radial: refinement cap reached", prev, val);
    }
    prev = val;
    have_prev = true;
    n_panels *= 2;
  }
}

Integral integrate_plane(const std::function<double(Complex)>& F, const DecayBound& bound,
                         const QuadConfig& cfg, int trig_degree, bool angular_exact) {
  cfg.validate();
  double r_max = std::min(bound.cutoff_radius(cfg.abs_tol), cfg.max_radius);
  const int n_probe = detail::initial_angular(cfg, trig_degree);
  for (;;) {
    detail::PolarResult res = detail::refine_polar(F, r_max, cfg, trig_degree, angular_exact);
    // Tail check: the ring max at the cutoff, extended by the certified
    // gaussian decay, must be negligible against the result.
    const double ring_max = [&] {
      double mx = 0.0;
      for (int j = 0; j < n_probe; ++j) {
        const double th = 2.0 * M_PI * j / n_probe;
        mx = std::max(mx, F(Complex{r_max * std::cos(th), r_max * std::sin(th)}));
      }
      return mx;
    }();
    const double tail = 2.0 * M_PI * ring_max * (r_max + 1.0) / (2.0 * bound.gauss_margin);
    if (tail <= cfg.abs_tol + cfg.rel_tol * std::abs(res.value) || r_max >= cfg.max_radius)
      return {res.value, res.error + tail};
    r_max = std::min(r_max * 1.25, cfg.max_radius);
  }
}

Integral integrate_disk(const std::function<double(Complex)>& F, double radius,
                        const QuadConfig& cfg, int trig_degree, bool angular_exact) {
  cfg.validate();
  if (!(radius > 0.0)) throw std::invalid_argument("integrate_disk: radius must be positive");
  detail::PolarResult res = detail::refine_polar(F, radius, cfg, trig_degree, angular_exact);
  return {res.value, res.error};
}

ComplexIntegral integrate_plane_complex(const std::function<Complex(Complex)>& F,
                                        const DecayBound& bound, const QuadConfig& cfg,
                                        int trig_degree) {
  cfg.validate();
  const double r_max = std::min(bound.cutoff_radius(cfg.abs_tol), cfg.max_radius);
  int n_theta = detail::initial_angular(cfg, trig_degree);
  int n_panels = cfg.radial_panels;
  Complex prev{};
  bool have_prev = false;
  for (int level = 0;; ++level) {
    std::vector<double> re, im;
    const double h = r_max / n_panels;
    re.reserve(static_cast<size_t>(n_panels) * 15);
    im.reserve(static_cast<size_t>(n_panels) * 15);
    for (int p = 0; p < n_panels; ++p) {
      const double mid = p * h + 0.5 * h, half = 0.5 * h;
      for (const auto& [x, w] : detail::kGauss15) {
        const double r = mid + x * half;
        const Complex ring = 2.0 * M_PI * r * detail::angular_average_c(F, r, n_theta);
        re.push_back(w * half * ring.real());
        im.push_back(w * half * ring.imag());
      }
    }
    const Complex val{detail::pairwise_sum(re.data(), re.size()),
                      detail::pairwise_sum(im.data(), im.size())};
    if (have_prev) {
      const double diff = std::abs(val - prev);
      if (diff <= cfg.rel_tol * std::abs(val) + cfg.abs_tol) return {val, diff};
      if (level >= cfg.max_refinements)
        throw QuadratureError("integrate_plane_complex: refinement cap reached", std::abs(prev),
                              std::abs(val));
    }
    prev = val;
    have_prev = true;
    n_panels *= 2;
    n_theta = std::min(2 * n_theta, 4096);
  }
}

}  // namespace fockvolt
