#pragma once

#include <string>
#include <vector>

#include "fockvolt/entire_function.hpp"
#include "fockvolt/poly.hpp"
#include "fockvolt/quadrature.hpp"
#include "fockvolt/weight.hpp"

namespace fockvolt {

/// Truncated reproducing-kernel model of the order-m Hilbert space, built
/// from the radial moments rho_n = 2 int_0^inf r^{2n+1} e^{-r^2} (1+r)^{2m} dr
/// of the normalized area measure dA/pi. K(w, z) = sum_n (z conj(w))^n / rho_n.
/// For m = 0 the moments are exactly n! and K(w, z) = e^{conj(w) z}.
class KernelModel {
 public:
  /// N large enough that the series tail is negligible for |w|,|z| up to the
  /// probe radius: max(60, ceil(2 probe^2 + 20)).
  static int default_truncation(double probe_radius);

  /// Moments are computed once per (m, N, tol) by radial quadrature; when
  /// cache_dir is nonempty a JSON cache file is consulted and refreshed.
  static KernelModel build(const Weight& w, int N, const QuadConfig& cfg,
                           const std::string& cache_dir = {});

  int m() const { return weight_.m; }
  int truncation() const { return N_; }
  double tolerance() const { return tol_; }
  const std::vector<double>& moments() const { return rho_; }
  const Weight& weight() const { return weight_; }

  /// Geometric bound on sum_{n>N} t^n / rho_n; +inf when the ratio test fails.
  double tail_remainder(double t) const;
  /// Weighted tail bound at the design probe radius; decreases with N.
  double tail_bound() const { return tail_bound_; }

  /// K(w, z); throws std::domain_error with a "raise N" hint when the
  /// truncation cannot deliver the configured tolerance at |w z|.
  Complex eval(Complex w, Complex z) const;
  /// ||K_w||^2 = K(w, w), real and positive.
  double norm_sq(Complex w) const;
  /// xi_{(w,m)} = e^{-psi_m(|w|)} K_w as a degree-N polynomial.
  Poly normalized_kernel(Complex w) const;

  struct AsymptoticReport {
    std::vector<double> radii;
    std::vector<double> ratios;  // K(w,w) e^{-2 psi_m(w)}
    double min_ratio = 0.0;
    double max_ratio = 0.0;
  };
  AsymptoticReport asymptotic_check(const std::vector<double>& radii) const;

  /// | (1/pi) int f(z) conj(K_w(z)) e^{-2 psi_m} dA - f(w) |.
  double reproducing_residual(const Poly& f, Complex w, const QuadConfig& cfg) const;

 private:
  Weight weight_;
  int N_ = 0;
  double tol_ = 0.0;
  double probe_radius_ = 0.0;
  std::vector<double> rho_;
  std::vector<double> rho_ratio_;  // rho_n / rho_{n-1}
  double tail_bound_ = 0.0;

  void finalize();
};

}  // namespace fockvolt
