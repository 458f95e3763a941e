#include "fockvolt/kernel.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fockvolt {

namespace {

constexpr int kMaxTruncation = 160;  // factorial-scale moments overflow past this

std::string cache_file_name(int m, int N) {
  std::ostringstream os;
  os << "fockvolt_moments_m" << m << "_N" << N << ".json";
  return os.str();
}

bool load_cache(const std::string& dir, int m, int N, double tol, std::vector<double>& rho) {
  namespace fs = std::filesystem;
  const fs::path path = fs::path(dir) / cache_file_name(m, N);
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("m").get<int>() != m || j.at("N").get<int>() != N) return false;
    if (j.at("tol").get<double>() > tol) return false;  // cached run was looser
    auto vec = j.at("moments").get<std::vector<double>>();
    if (static_cast<int>(vec.size()) != N + 1) return false;
    rho = std::move(vec);
    return true;
  } catch (...) {
    return false;
  }
}

void save_cache(const std::string& dir, int m, int N, double tol, const std::vector<double>& rho) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  nlohmann::json j{{"m", m}, {"N", N}, {"tol", tol}, {"moments", rho}};
  // Write-then-rename so concurrent builders never observe a torn file.
  const fs::path target = fs::path(dir) / cache_file_name(m, N);
  const fs::path tmp = target.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    out << j.dump(2) << '\n';
  }
  fs::rename(tmp, target, ec);
}

}  // namespace

int KernelModel::default_truncation(double probe_radius) {
  const int n = static_cast<int>(std::ceil(2.0 * probe_radius * probe_radius + 20.0));
  return std::max(60, n);
}

KernelModel KernelModel::build(const Weight& w, int N, const QuadConfig& cfg,
                               const std::string& cache_dir) {
  if (N < 1) throw std::invalid_argument("KernelModel: truncation N must be >= 1");
  if (N > kMaxTruncation)
    throw std::invalid_argument("KernelModel: truncation beyond N = 160 overflows double moments");
  cfg.validate();

  KernelModel model;
  model.weight_ = w;
  model.N_ = N;
  model.tol_ = std::min(cfg.rel_tol, 1e-13);
  model.probe_radius_ = std::sqrt(std::max(0.0, (N - 20.0) / 2.0));

  if (!cache_dir.empty() && load_cache(cache_dir, w.m, N, model.tol_, model.rho_)) {
    model.finalize();
    return model;
  }

  QuadConfig mcfg = cfg.tightened(model.tol_, 1e-300);
  mcfg.max_refinements = std::max(mcfg.max_refinements, 16);
  model.rho_.resize(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    // Integrand in log form; the raw r^{2n+1} would overflow long before the
    // product does.
    const double deg = 2.0 * n + 1.0;
    auto f = [&, deg](double r) {
      if (r <= 0.0) return 0.0;
      const double ln = deg * std::log(r) - r * r + 2.0 * w.m * std::log1p(r);
      return 2.0 * std::exp(ln);
    };
    DecayBound bound{1.0, deg + 2.0 * w.m, 0.0};
    const double r_cut = bound.cutoff_radius(1e-18);
    model.rho_[static_cast<size_t>(n)] = integrate_radial(f, r_cut, mcfg).value;
    if (!(model.rho_[static_cast<size_t>(n)] > 0.0) ||
        !std::isfinite(model.rho_[static_cast<size_t>(n)]))
      throw std::runtime_error("KernelModel: moment computation failed");
  }
  if (!cache_dir.empty()) save_cache(cache_dir, w.m, N, model.tol_, model.rho_);
  model.finalize();
  return model;
}

void KernelModel::finalize() {
  rho_ratio_.assign(rho_.size(), 0.0);
  for (size_t n = 1; n < rho_.size(); ++n) rho_ratio_[n] = rho_[n] / rho_[n - 1];
  const double t_probe = probe_radius_ * probe_radius_;
  const double rem = tail_remainder(t_probe);
  tail_bound_ = std::isfinite(rem) ? rem * std::exp(-t_probe) : rem;
}

double KernelModel::tail_remainder(double t) const {
  // First omitted term t^{N+1}/rho_{N+1} bounded through the last moment
  // ratio, then a geometric tail with safety on the ratio estimate.
  const double q_next = rho_ratio_.back() * (static_cast<double>(N_) + 1.0) / N_;
  const double ratio = 1.2 * t / q_next;
  if (ratio >= 0.95) return std::numeric_limits<double>::infinity();
  double log_term = (N_ + 1.0) * std::log(std::max(t, 1e-300)) - std::log(rho_.back()) -
                    std::log(q_next);
  return std::exp(log_term) / (1.0 - ratio);
}

Complex KernelModel::eval(Complex w, Complex z) const {
  const Complex u = z * std::conj(w);
  const double t = std::abs(u);
  // Kahan-compensated accumulation in long double keeps the alternating sum
  // near one ulp of the working precision.
  std::complex<long double> acc{}, comp{};
  std::complex<long double> term{1.0L / static_cast<long double>(rho_[0]), 0.0L};
  const std::complex<long double> ul{u.real(), u.imag()};
  for (int n = 0;; ++n) {
    const std::complex<long double> y = term - comp;
    const std::complex<long double> s = acc + y;
    comp = (s - acc) - y;
    acc = s;
    if (n == N_) break;
    term *= ul / static_cast<long double>(rho_ratio_[static_cast<size_t>(n) + 1]);
  }
  const Complex partial{static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  const double rem = tail_remainder(t);
  const double scale = std::max(std::abs(partial), std::exp(-std::min(t, 700.0)));
  if (!(rem <= tol_ * 1e3 * scale)) {
    std::ostringstream os;
    os << "KernelModel::eval: truncation N = " << N_ << " insufficient at |w z| = " << t
       << " (tail bound " << rem << "); rebuild with larger N";
    throw std::domain_error(os.str());
  }
  return partial;
}

double KernelModel::norm_sq(Complex w) const {
  const double v = eval(w, w).real();
  if (!(v > 0.0)) throw std::runtime_error("KernelModel: nonpositive diagonal value");
  return v;
}

Poly KernelModel::normalized_kernel(Complex w) const {
  const double front = std::exp(-weight_.psi(std::abs(w)));
  std::vector<Complex> coeffs(static_cast<size_t>(N_) + 1);
  Complex cw{1.0, 0.0};
  for (int n = 0; n <= N_; ++n) {
    const double rho_n = rho_[static_cast<size_t>(n)];
    coeffs[static_cast<size_t>(n)] = front * cw / rho_n;
    cw *= std::conj(w);
  }
  return Poly{std::move(coeffs)};
}

KernelModel::AsymptoticReport KernelModel::asymptotic_check(
    const std::vector<double>& radii) const {
  AsymptoticReport rep;
  rep.radii = radii;
  rep.ratios.reserve(radii.size());
  for (double r : radii) {
    const double ratio = norm_sq(Complex{r, 0.0}) * std::exp(-2.0 * weight_.psi(r));
    rep.ratios.push_back(ratio);
  }
  rep.min_ratio = *std::min_element(rep.ratios.begin(), rep.ratios.end());
  rep.max_ratio = *std::max_element(rep.ratios.begin(), rep.ratios.end());
  return rep;
}

double KernelModel::reproducing_residual(const Poly& f, Complex w, const QuadConfig& cfg) const {
  // K_w as a raw polynomial (no e^{-psi(w)} normalization).
  std::vector<Complex> coeffs(static_cast<size_t>(N_) + 1);
  Complex cw{1.0, 0.0};
  for (int n = 0; n <= N_; ++n) {
    coeffs[static_cast<size_t>(n)] = cw / rho_[static_cast<size_t>(n)];
    cw *= std::conj(w);
  }
  const Poly kw{std::move(coeffs)};
  auto integrand = [&](Complex z) -> Complex {
    const double r = std::abs(z);
    const double weight = std::exp(-2.0 * weight_.psi(r));
    return f.eval(z) * std::conj(kw.eval(z)) * weight;
  };
  // |K_w(z)| <= e^{|w| r}; the e^{-r^2} weight certifies the tail.
  DecayBound bound{1.0, static_cast<double>(f.degree() + 2 * weight_.m), std::abs(w)};
  const int trig = f.degree() + N_;
  const ComplexIntegral I = integrate_plane_complex(integrand, bound, cfg, trig);
  const Complex inner = I.value / M_PI;
  return std::abs(inner - f.eval(w));
}

}  // namespace fockvolt
