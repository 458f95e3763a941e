#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>

#include "fockvolt/kernel.hpp"
#include "fockvolt/norms.hpp"
#include "oracles.hpp"

using namespace fockvolt;

namespace {
const QuadConfig kCfg{};

double closed_moment_m1(int n) {
  // Gamma(n+1) + 2 Gamma(n+3/2) + Gamma(n+2)
  return std::exp(std::lgamma(n + 1.0)) + 2.0 * std::exp(std::lgamma(n + 1.5)) +
         std::exp(std::lgamma(n + 2.0));
}
}  // namespace

TEST_CASE("moments: m = 0 factorial anchor") {
  const KernelModel model = KernelModel::build(Weight{0}, 40, kCfg);
  CHECK(model.moments()[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(model.moments()[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(model.moments()[2] == doctest::Approx(2.0).epsilon(1e-12));
  for (int n = 0; n <= 40; ++n)
    CHECK(model.moments()[static_cast<size_t>(n)] ==
          doctest::Approx(std::exp(std::lgamma(n + 1.0))).epsilon(1e-11));
}

TEST_CASE("moments: m = 1 gamma closed form") {
  const KernelModel model = KernelModel::build(Weight{1}, 20, kCfg);
  CHECK(model.moments()[0] == doctest::Approx(2.0 + std::sqrt(M_PI)).epsilon(1e-11));
  for (int n = 0; n <= 20; ++n)
    CHECK(model.moments()[static_cast<size_t>(n)] ==
          doctest::Approx(closed_moment_m1(n)).epsilon(1e-11));
}

TEST_CASE("moment ratios approach n") {
  for (int m : {0, 1, 2}) {
    const KernelModel model = KernelModel::build(Weight{m}, 70, kCfg);
    for (int n = 4 * m + 10; n <= 70; ++n) {
      const double ratio = model.moments()[static_cast<size_t>(n)] /
                           model.moments()[static_cast<size_t>(n) - 1];
      CHECK(ratio == doctest::Approx(static_cast<double>(n)).epsilon(0.20));
    }
  }
}

TEST_CASE("m = 0 kernel eval and norms reproduce the exponential kernel") {
  const KernelModel model = KernelModel::build(Weight{0}, 60, kCfg);
  const Complex w{1, 0}, z{2, 0};
  CHECK(std::abs(model.eval(w, z) - std::exp(Complex{2, 0})) < 1e-9 * std::exp(2.0));
  CHECK(model.norm_sq(Complex{2, 0}) == doctest::Approx(std::exp(4.0)).epsilon(1e-9));
  SUBCASE("w = 0 keeps only the constant term") {
    for (int m : {0, 1, 2}) {
      const KernelModel mm = KernelModel::build(Weight{m}, 60, kCfg);
      CHECK(std::abs(mm.eval(Complex{}, Complex{1.3, -0.4}) -
                     Complex{1.0 / mm.moments()[0], 0.0}) < 1e-12);
      CHECK(mm.norm_sq(Complex{}) == doctest::Approx(1.0 / mm.moments()[0]).epsilon(1e-12));
    }
  }
  SUBCASE("hermitian symmetry and positivity") {
    const Complex a{1.2, 0.7}, b{-0.4, 2.1};
    CHECK(std::abs(model.eval(a, b) - std::conj(model.eval(b, a))) < 1e-12 * std::abs(model.eval(a, b)));
    CHECK(model.norm_sq(a) > 0.0);
  }
  SUBCASE("tail validity guard") {
    CHECK_THROWS_AS(model.eval(Complex{9, 0}, Complex{-9, 0}), std::domain_error);
  }
}

TEST_CASE("normalized kernel values and uniform bounds") {
  const KernelModel m0 = KernelModel::build(Weight{0}, 60, kCfg);
  SUBCASE("w = 0, m = 0 is the constant 1") {
    const Poly xi = m0.normalized_kernel(Complex{});
    CHECK(std::abs(xi.coeff(0) - Complex{1, 0}) < 1e-12);
    CHECK(std::abs(xi.eval(Complex{0.5, 0.5}) - Complex{1, 0}) < 1e-12);
  }
  SUBCASE("m = 0, |w| = 3: weighted sup stays at most 1") {
    const Poly xi = m0.normalized_kernel(Complex{3, 0});
    const NormResult s = norm_sup(EntireFunction::poly(xi), Weight{0}, kCfg);
    REQUIRE(s.finite());
    CHECK(s.value <= 1.0 + 1e-6);
    CHECK(s.value >= 0.9);  // attained near z = w
  }
  SUBCASE("m = 1: norms bounded across p and w") {
    const KernelModel m1 = KernelModel::build(Weight{1}, KernelModel::default_truncation(6.0), kCfg);
    double recorded = 0.0;
    for (double r = 1.0; r <= 6.0; r += 1.0) {
      const EntireFunction xi = EntireFunction::poly(m1.normalized_kernel(Complex{r, 0}));
      for (double p : {1.0, 2.0, 4.0})
        recorded = std::max(recorded, norm_p(xi, Weight{1}, p, kCfg).value);
      recorded = std::max(recorded, norm_sup(xi, Weight{1}, kCfg).value);
    }
    CHECK(recorded <= 100.0);
    MESSAGE("recorded normalized-kernel bound (m=1): ", recorded);
  }
}

TEST_CASE("diagonal asymptotics") {
  std::vector<double> radii;
  for (int i = 0; i <= 12; ++i) radii.push_back(0.5 * i);
  SUBCASE("m = 0: ratio is identically 1") {
    const KernelModel model = KernelModel::build(Weight{0}, KernelModel::default_truncation(6.0), kCfg);
    const auto rep = model.asymptotic_check(radii);
    for (double x : rep.ratios) CHECK(x == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("m = 1: band within a factor 10, anchored at 1/rho_0") {
    const KernelModel model = KernelModel::build(Weight{1}, KernelModel::default_truncation(6.0), kCfg);
    const auto rep = model.asymptotic_check(radii);
    CHECK(rep.ratios[0] == doctest::Approx(1.0 / model.moments()[0]).epsilon(1e-10));
    CHECK(rep.max_ratio / rep.min_ratio <= 10.0);
    MESSAGE("m=1 band ", rep.min_ratio, " .. ", rep.max_ratio);
  }
}

TEST_CASE("upper kernel-norm bound against e^{psi_m(w)}") {
  for (int m : {0, 1}) {
    const Weight w{m};
    const KernelModel model = KernelModel::build(w, KernelModel::default_truncation(6.0), kCfg);
    double recorded = 0.0;
    for (double r : {0.0, 2.0, 4.0, 6.0}) {
      const Poly xi = model.normalized_kernel(Complex{r, 0});
      for (double p : {1.0, 2.0, 4.0}) {
        // ||K_w||_p = e^{psi(w)} ||xi_w||_p, so the bound is the xi norm itself.
        recorded = std::max(recorded, norm_p(EntireFunction::poly(xi), w, p, kCfg).value);
      }
    }
    CHECK(recorded <= 100.0);
    MESSAGE("recorded one-sided kernel bound (m=", m, "): ", recorded);
  }
}

TEST_CASE("reproducing property by plane quadrature") {
  const Poly f{{Complex{1, 0}, Complex{2, 0}, Complex{0, 0}, Complex{-1, 0}}};  // 1 + 2z - z^3
  for (int m : {0, 1, 2}) {
    const Weight w{m};
    const KernelModel model = KernelModel::build(w, 60, kCfg);
    const double fnorm = norm_p(EntireFunction::poly(f), w, 2.0, kCfg).value;
    for (Complex pt : {Complex{0.5, 0}, Complex{1, 1}, Complex{2.5, 0}}) {
      const double residual = model.reproducing_residual(f, pt, kCfg);
      CHECK(residual <= 1e-6 * (1.0 + fnorm));
    }
  }
}

TEST_CASE("tail bound decreases with N and the cache round-trips") {
  const KernelModel a = KernelModel::build(Weight{1}, 60, kCfg);
  const KernelModel b = KernelModel::build(Weight{1}, 80, kCfg);
  const KernelModel c = KernelModel::build(Weight{1}, 100, kCfg);
  CHECK(a.tail_bound() > b.tail_bound());
  CHECK(b.tail_bound() > c.tail_bound());

  const std::string dir = (std::filesystem::temp_directory_path() / "fockvolt_cache_test").string();
  std::filesystem::remove_all(dir);
  const KernelModel fresh = KernelModel::build(Weight{2}, 30, kCfg, dir);
  CHECK(std::filesystem::exists(dir));
  const KernelModel cached = KernelModel::build(Weight{2}, 30, kCfg, dir);
  for (size_t i = 0; i < fresh.moments().size(); ++i)
    CHECK(fresh.moments()[i] == cached.moments()[i]);
  std::filesystem::remove_all(dir);
}

TEST_CASE("truncation limits are enforced") {
  CHECK_THROWS_AS(KernelModel::build(Weight{0}, 0, kCfg), std::invalid_argument);
  CHECK_THROWS_AS(KernelModel::build(Weight{0}, 200, kCfg), std::invalid_argument);
}
