#pragma once

// Test-side numerical oracles. These stay independent of the library's
// quadrature and search code so the two routes can disagree.

#include <cmath>
#include <functional>

namespace oracle {

inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-13, int depth = 40) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

struct MaxResult {
  double x = 0.0;
  double value = 0.0;
};

// Dense grid plus ternary refinement.
inline MaxResult maximize(const std::function<double(double)>& f, double a, double b,
                          int grid = 4000, int iters = 300) {
  double best_x = a, best_v = f(a);
  for (int i = 1; i <= grid; ++i) {
    const double x = a + (b - a) * i / grid;
    const double v = f(x);
    if (v > best_v) {
      best_v = v;
      best_x = x;
    }
  }
  double lo = std::max(a, best_x - (b - a) / grid);
  double hi = std::min(b, best_x + (b - a) / grid);
  for (int i = 0; i < iters && hi - lo > 1e-15 * (1.0 + hi); ++i) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2))
      lo = m1;
    else
      hi = m2;
  }
  const double x = 0.5 * (lo + hi);
  const double v = f(x);
  return {x, std::max(v, best_v)};
}

inline double erf_series(double x) {
  double term = x, sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x * x / n;
    sum += term / (2.0 * n + 1.0);
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return 2.0 / std::sqrt(M_PI) * sum;
}

}  // namespace oracle
