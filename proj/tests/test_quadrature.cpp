#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fockvolt/entire_function.hpp"
#include "fockvolt/quadrature.hpp"
#include "fockvolt/sup_search.hpp"
#include "oracles.hpp"

using namespace fockvolt;

namespace {
const QuadConfig kCfg{};  // defaults: rel 1e-8, abs 1e-12, radius 50
}

TEST_CASE("config validation") {
  QuadConfig bad = kCfg;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = kCfg;
  bad.max_radius = 5.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = kCfg;
  bad.angular_samples = 4;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("plane integrals with closed-form values") {
  auto gauss = [](Complex z) { return std::exp(-std::norm(z)); };
  CHECK(integrate_plane(gauss, {1.0, 0.0, 0.0}, kCfg).value ==
        doctest::Approx(M_PI).epsilon(1e-10));

  auto moment = [](Complex z) { return std::norm(z) * std::exp(-std::norm(z)); };
  CHECK(integrate_plane(moment, {1.0, 2.0, 0.0}, kCfg).value ==
        doctest::Approx(M_PI).epsilon(1e-10));

  auto order_one = [](Complex z) {
    const double r = std::abs(z);
    return std::exp(-r * r) * (1.0 + r) * (1.0 + r);
  };
  CHECK(integrate_plane(order_one, {1.0, 2.0, 0.0}, kCfg).value ==
        doctest::Approx(2.0 * M_PI + std::pow(M_PI, 1.5)).epsilon(1e-10));

  SUBCASE("divergent certificate rejected up front") {
    CHECK_THROWS_AS(integrate_plane(gauss, {-0.1, 0.0, 0.0}, kCfg), std::invalid_argument);
  }
}

TEST_CASE("plane integral matches the 1-d radial oracle") {
  auto F = [](Complex z) {
    const double r = std::abs(z);
    return std::pow(1.0 + r, 3) * std::exp(-1.3 * r * r);
  };
  const double lib = integrate_plane(F, {1.3, 3.0, 0.0}, kCfg).value;
  const double rad = 2.0 * M_PI * oracle::simpson([](double r) {
                       return r * std::pow(1.0 + r, 3) * std::exp(-1.3 * r * r);
                     }, 0.0, 12.0);
  CHECK(lib == doctest::Approx(rad).epsilon(1e-9));
}

TEST_CASE("segment integrals") {
  CHECK(std::abs(integrate_segment([](Complex) { return Complex{1, 0}; }, Complex{},
                                   Complex{1, 1}, kCfg) -
                 Complex{1, 1}) < 1e-12);
  CHECK(std::abs(integrate_segment([](Complex w) { return 2.0 * w; }, Complex{}, Complex{3, 0},
                                   kCfg) -
                 Complex{9, 0}) < 1e-10);
  const Complex erf2 = integrate_segment([](Complex w) { return std::exp(-w * w); }, Complex{},
                                         Complex{2, 0}, kCfg);
  CHECK(std::abs(erf2 - Complex{0.5 * std::sqrt(M_PI) * oracle::erf_series(2.0), 0.0}) < 1e-10);
}

TEST_CASE("segment refinement cap carries the last two estimates") {
  QuadConfig cramped = kCfg;
  cramped.max_refinements = 1;
  cramped.rel_tol = 1e-14;
  cramped.abs_tol = 1e-16;
  auto spike = [](Complex w) { return std::exp(-1e4 * std::norm(w - Complex{0.3, 0})); };
  try {
    integrate_segment(spike, Complex{}, Complex{1, 0}, cramped);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(std::isfinite(e.estimate_prev));
    CHECK(std::isfinite(e.estimate_last));
  }
}

TEST_CASE("sup search on closed-form maximizers") {
  const NormResult one = sup_search(EntireFunction::constant(1.0), Weight{0}, kCfg);
  REQUIRE(one.finite());
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(one.argmax) < 1e-6);

  const NormResult lin = sup_search(EntireFunction::identity(), Weight{0}, kCfg);
  REQUIRE(lin.finite());
  CHECK(lin.value == doctest::Approx(0.6065306597126334).epsilon(1e-10));
  CHECK(std::abs(std::abs(lin.argmax) - 1.0) < 1e-5);

  const NormResult m1 = sup_search(EntireFunction::constant(1.0), Weight{1}, kCfg);
  REQUIRE(m1.finite());
  CHECK(m1.value == doctest::Approx(1.3367333235968272).epsilon(1e-10));
  CHECK(std::abs(m1.argmax) == doctest::Approx(0.6180339887498949).epsilon(1e-4));
}

TEST_CASE("sup search divergence certificates come from the symbolic layer") {
  const EntireFunction hot = EntireFunction::exp_poly(Poly::constant(1.0), Poly::monomial(2, 0.7));
  const NormResult r = sup_search(hot, Weight{0}, kCfg);
  REQUIRE(!r.finite());
  CHECK(!r.growth_report.empty());
  const EntireFunction cubic = EntireFunction::exp_poly(Poly::constant(1.0), Poly::monomial(3, 0.01));
  CHECK(!sup_search(cubic, Weight{2}, kCfg).finite());
}

TEST_CASE("sup search scales under pointwise domination") {
  for (double c : {1.5, 3.0, 10.0}) {
    const EntireFunction f = EntireFunction::poly(Poly{{Complex{0.3, 0.4}, Complex{0, 1},
                                                        Complex{0.5, 0}}});
    const EntireFunction cf = scale(Complex{c, 0}, f);
    const double vf = sup_search(f, Weight{1}, kCfg).value;
    const double vcf = sup_search(cf, Weight{1}, kCfg).value;
    CHECK(vcf >= vf * (1.0 - 1e-12));
    CHECK(vcf == doctest::Approx(c * vf).epsilon(1e-10));
  }
}

TEST_CASE("determinism: identical inputs produce identical bits") {
  auto F = [](Complex z) {
    const double r = std::abs(z);
    return (1.0 + 0.3 * std::cos(2.0 * std::arg(z == Complex{} ? Complex{1, 0} : z))) *
           std::exp(-r * r);
  };
  const double a = integrate_plane(F, {1.0, 1.0, 0.0}, kCfg).value;
  const double b = integrate_plane(F, {1.0, 1.0, 0.0}, kCfg).value;
  CHECK(a == b);

  const EntireFunction f = EntireFunction::poly(Poly{{Complex{0.2, -0.1}, Complex{1, 2},
                                                      Complex{0, 0.7}}});
  const NormResult r1 = sup_search(f, Weight{2}, kCfg);
  const NormResult r2 = sup_search(f, Weight{2}, kCfg);
  CHECK(r1.value == r2.value);
  CHECK(r1.argmax == r2.argmax);
}
