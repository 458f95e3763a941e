#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fockvolt {

enum class NormalizerMode {
  OnePlusR,    // D_m(r) = 1 + r
  ClampedRaw,  // D_m(r) = max(0.25, 1 + psi_m'(r)), for sensitivity studies
};

/// Radial weight psi_m(r) = r^2/2 - m log(1+r) of the order-m growth space,
/// together with a strictly positive normalizer equivalent to 1 + psi_m'.
/// The weight is radial; callers pass |z|.
struct Weight {
  int m = 0;
  NormalizerMode mode = NormalizerMode::OnePlusR;

  Weight() = default;
  Weight(int order) : m(order) {
    if (order < 0) throw std::invalid_argument("Weight: order m must be >= 0");
  }
  Weight(int order, NormalizerMode nm) : Weight(order) { mode = nm; }

  double psi(double r) const {
    require_radius(r);
    return 0.5 * r * r - static_cast<double>(m) * std::log1p(r);
  }

  double psi_prime(double r) const {
    require_radius(r);
    return r - static_cast<double>(m) / (1.0 + r);
  }

  /// Strictly positive everywhere. The raw 1 + psi_m'(r) vanishes at
  /// r = sqrt(m) - 1 for m >= 1, so the default uses 1 + r, which agrees
  /// with 1 + psi_m' up to a factor in [1, 1+m] once r >= 2 sqrt(m).
  double normalizer(double r) const {
    require_radius(r);
    if (mode == NormalizerMode::ClampedRaw) return std::max(0.25, 1.0 + psi_prime(r));
    return 1.0 + r;
  }

 private:
  static void require_radius(double r) {
    if (!(r >= 0.0)) throw std::domain_error("Weight: radius must be >= 0");
  }
};

}  // namespace fockvolt
