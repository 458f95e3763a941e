#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fockvolt/classify.hpp"
#include "fockvolt/kernel.hpp"
#include "fockvolt/norms.hpp"
#include "oracles.hpp"

using namespace fockvolt;

namespace {
const QuadConfig kCfg{};

double closed_disk_p3(double R) {
  // 2 pi int_0^R r (1+r)^{-3} dr
  return 2.0 * M_PI * (0.5 - 1.0 / (1.0 + R) + 0.5 / ((1.0 + R) * (1.0 + R)));
}
}  // namespace

TEST_CASE("symbol_ratio point values") {
  CHECK(symbol_ratio(Poly::monomial(2), Weight{0}, Complex{10, 0}) ==
        doctest::Approx(20.0 / 11.0).epsilon(1e-12));
  const Poly g{{Complex{5, 0}, Complex{1, 0}}};  // z + 5
  for (int m : {0, 1, 2})
    CHECK(symbol_ratio(g, Weight{m}, Complex{}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(symbol_ratio(Poly::monomial(3), Weight{0}, Complex{10, 0}) ==
        doctest::Approx(300.0 / 11.0).epsilon(1e-12));
}

TEST_CASE("into-sup verdicts and growth witnesses") {
  const ClassifierVerdict bounded = classify_into_sup(
      Poly{{Complex{7, 0}, Complex{1, 0}, Complex{3, 0}}}, Weight{0}, 2.0);
  CHECK(bounded.bounded);
  CHECK(!bounded.compact);
  CHECK(bounded.limit_ratio == doctest::Approx(2.0 * 3.0).epsilon(0.05));

  const ClassifierVerdict compact = classify_into_sup(Poly::identity(), Weight{1}, 2.0);
  CHECK(compact.bounded);
  CHECK(compact.compact);
  CHECK(compact.limit_ratio < 0.02);

  const ClassifierVerdict cubic = classify_into_sup(Poly::monomial(3), Weight{0}, 2.0);
  CHECK(!cubic.bounded);
  CHECK(cubic.growth_exponent == doctest::Approx(1.0).epsilon(0.1));

  SUBCASE("verdicts independent of p and m") {
    for (double p : {1.0, 2.0, 100.0})
      for (int m : {0, 1, 2}) {
        const ClassifierVerdict v = classify_into_sup(Poly::monomial(2), Weight{m}, p);
        CHECK(v.bounded);
        CHECK(!v.compact);
      }
  }

  SUBCASE("growth exponent fit over degrees 1..5") {
    for (int d = 1; d <= 5; ++d)
      for (int m : {0, 1, 2}) {
        const ClassifierVerdict v = classify_into_sup(Poly::monomial(d), Weight{m}, 2.0);
        CHECK(std::abs(v.growth_exponent - (d - 2.0)) <= 0.1);
      }
  }
}

TEST_CASE("from-sup verdicts with integral witnesses") {
  SUBCASE("g = z, p = 3 converges to pi") {
    const ClassifierVerdict v = classify_from_sup(Poly::identity(), Weight{0}, 3.0, kCfg);
    CHECK(v.bounded);
    CHECK(v.compact);
    CHECK(!v.integral_divergent);
    for (size_t i = 0; i < v.disk_radii.size(); ++i)
      CHECK(v.disk_integrals[i] ==
            doctest::Approx(closed_disk_p3(v.disk_radii[i])).epsilon(1e-6));
    CHECK(v.fitted_limit == doctest::Approx(M_PI).epsilon(0.01));
  }
  SUBCASE("g = z, p = 2 grows like 2 pi log R") {
    const ClassifierVerdict v = classify_from_sup(Poly::identity(), Weight{0}, 2.0, kCfg);
    CHECK(!v.bounded);
    CHECK(v.integral_divergent);
    CHECK(v.fitted_slope == doctest::Approx(2.0 * M_PI).epsilon(0.05));
  }
  SUBCASE("constant symbols are trivially bounded") {
    const ClassifierVerdict v = classify_from_sup(Poly::constant(4.0), Weight{2}, 1.0, kCfg);
    CHECK(v.bounded);
    CHECK(v.compact);
    for (double I : v.disk_integrals) CHECK(I == 0.0);
  }
  SUBCASE("p > 2 required for nonconstant symbols") {
    CHECK(!classify_from_sup(Poly::identity(), Weight{0}, 1.5, kCfg).bounded);
    CHECK(!classify_from_sup(Poly::monomial(2), Weight{0}, 3.0, kCfg).bounded);
  }
}

TEST_CASE("carleson density and the localized transform") {
  SUBCASE("density formula") {
    const double v = carleson_density(Poly::monomial(2), 1.0, Weight{1}, Complex{2, 0});
    CHECK(v == doctest::Approx(4.0 * 3.0 / 3.0).epsilon(1e-12));  // |2z| (1+r)^m / D^1
  }
  SUBCASE("zero symbol gives a zero transform") {
    CHECK(berezin_tilde(Poly::constant(3.0), 2.0, Weight{0}, 1.0, Complex{4, 1}, kCfg) == 0.0);
  }
  SUBCASE("value at the origin against the radial oracle") {
    const double got = berezin_tilde(Poly::monomial(2), 1.0, Weight{0}, 1.0, Complex{}, kCfg);
    const double expect = 2.0 * M_PI * oracle::simpson([](double r) {
                            return 2.0 * r * r * std::exp(-0.5 * r * r) / (1.0 + r);
                          }, 0.0, 14.0);
    CHECK(got == doctest::Approx(expect).epsilon(1e-7));
    CHECK(got == doctest::Approx(6.500731833449655).epsilon(1e-7));
  }
  SUBCASE("constant-derivative symbols track |c|^p / D^p") {
    const Poly g = Poly::monomial(1, Complex{0, 2});  // g' = 2i
    double lo = 1e300, hi = 0.0;
    for (double r : {0.0, 5.0, 10.0, 20.0}) {
      const double tilde = berezin_tilde(g, 1.0, Weight{1}, 1.0, Complex{r, 0}, kCfg);
      const double closed = 2.0 / Weight{1}.normalizer(r);
      const double ratio = tilde / closed;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    CHECK(hi / lo <= 10.0);
    MESSAGE("berezin/closed-form band ", lo, " .. ", hi);
  }
}

TEST_CASE("kernel test functions witness the unboundedness mechanism") {
  const KernelModel model = KernelModel::build(Weight{0}, KernelModel::default_truncation(8.0), kCfg);
  auto value = [&](const Poly& g, double r) {
    const EntireFunction xi = EntireFunction::poly(model.normalized_kernel(Complex{r, 0}));
    return norm_sup_LP(volterra_apply(g, xi), Weight{0}, kCfg).value;
  };
  const double c2 = value(Poly::monomial(3), 2.0);
  const double c8 = value(Poly::monomial(3), 8.0);
  CHECK(c8 / c2 > 4.0);  // first-power growth; the acceptance gate uses squares
  const double z2 = value(Poly::identity(), 2.0);
  const double z8 = value(Poly::identity(), 8.0);
  CHECK(z8 < z2);
  CHECK(z8 < 0.25);
}
