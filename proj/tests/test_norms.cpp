#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fockvolt/norms.hpp"
#include "fockvolt/verify.hpp"
#include "oracles.hpp"

using namespace fockvolt;

namespace {
const QuadConfig kCfg{};

double lgamma_fact(int n) { return std::lgamma(n + 1.0); }
}  // namespace

TEST_CASE("norm_sup basics and symbolic divergence") {
  CHECK(norm_sup(EntireFunction::constant(1.0), Weight{0}, kCfg).value ==
        doctest::Approx(1.0).epsilon(1e-10));
  const EntireFunction ez2 = EntireFunction::exp_poly(Poly::constant(1.0), Poly::monomial(2));
  CHECK(!norm_sup(ez2, Weight{0}, kCfg).finite());
  const EntireFunction mild = EntireFunction::exp_poly(Poly::constant(1.0), Poly::monomial(2, 0.4));
  const NormResult r = norm_sup(mild, Weight{0}, kCfg);
  REQUIRE(r.finite());
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("norm_p against gamma-integral values") {
  CHECK(norm_p(EntireFunction::constant(1.0), Weight{0}, 2.0, kCfg).value ==
        doctest::Approx(std::sqrt(M_PI)).epsilon(1e-9));
  CHECK(norm_p(EntireFunction::identity(), Weight{0}, 2.0, kCfg).value ==
        doctest::Approx(std::sqrt(M_PI)).epsilon(1e-9));
  for (int n = 0; n <= 6; ++n) {
    const double expect = std::sqrt(M_PI * std::exp(lgamma_fact(n)));
    CHECK(norm_p(EntireFunction::poly(Poly::monomial(n)), Weight{0}, 2.0, kCfg).value ==
          doctest::Approx(expect).epsilon(1e-8));
  }
  SUBCASE("boundary gaussian diverges in the integral norm") {
    const EntireFunction half = EntireFunction::exp_poly(Poly::constant(1.0), Poly::monomial(2, 0.5));
    CHECK(!norm_p(half, Weight{0}, 2.0, kCfg).finite());
  }
}

TEST_CASE("norm_sup_LP closed forms") {
  CHECK(norm_sup_LP(EntireFunction::identity(), Weight{0}, kCfg).value ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(norm_sup_LP(EntireFunction::constant(1.0), Weight{0}, kCfg).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  // V_{z^2} 1 = z^2; the derivative route needs no quadrature and the value
  // is 2 max r e^{-r^2/2}/(1+r).
  const EntireFunction img = volterra_apply(Poly::monomial(2), EntireFunction::constant(1.0));
  const NormResult r = norm_sup_LP(img, Weight{0}, kCfg);
  REQUIRE(r.finite());
  CHECK(r.value == doctest::Approx(0.6470241313329107).epsilon(1e-9));
  const auto oracle_max = oracle::maximize(
      [](double t) { return 2.0 * t * std::exp(-0.5 * t * t) / (1.0 + t); }, 0.0, 10.0);
  CHECK(r.value == doctest::Approx(oracle_max.value).epsilon(1e-9));
}

TEST_CASE("norm_p_LP closed forms") {
  CHECK(norm_p_LP(EntireFunction::constant(1.0), Weight{0}, 2.0, kCfg).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  // f = z, m = 0, p = 2: sqrt(2 pi int r e^{-r^2} (1+r)^{-2} dr)
  const NormResult r = norm_p_LP(EntireFunction::identity(), Weight{0}, 2.0, kCfg);
  REQUIRE(r.finite());
  CHECK(r.value == doctest::Approx(1.0253310744315208).epsilon(1e-8));
  const double rad = 2.0 * M_PI * oracle::simpson([](double t) {
                       return t * std::exp(-t * t) / ((1.0 + t) * (1.0 + t));
                     }, 0.0, 12.0);
  CHECK(r.value == doctest::Approx(std::sqrt(rad)).epsilon(1e-8));
  SUBCASE("finite for z^2 at m = 1 and comparable to the direct norm") {
    const EntireFunction z2 = EntireFunction::poly(Poly::monomial(2));
    const double lp = norm_p_LP(z2, Weight{1}, 2.0, kCfg).value;
    const double direct = norm_p(z2, Weight{1}, 2.0, kCfg).value;
    CHECK(lp > 0.0);
    const double ratio = direct / lp;
    CHECK(ratio > 1.0 / 100.0);
    CHECK(ratio < 100.0);
  }
}

TEST_CASE("smoothing_check closed cases") {
  SUBCASE("g = z^2, lambda = 3, f = 1") {
    const EquivalenceReport rep = smoothing_check(Poly::monomial(2), Complex{3, 0},
                                               EntireFunction::constant(1.0), Weight{0}, kCfg);
    CHECK(rep.lhs == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.rhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("g = 0, lambda = 1, f = z reduces to the plain comparison") {
    const EquivalenceReport rep = smoothing_check(Poly{}, Complex{1, 0}, EntireFunction::identity(),
                                               Weight{0}, kCfg);
    CHECK(rep.ratio == doctest::Approx(std::exp(-0.5)).epsilon(1e-9));
  }
  SUBCASE("near the spectral boundary both sides stay finite") {
    const EquivalenceReport rep = smoothing_check(Poly::monomial(2), Complex{2.01, 0},
                                               EntireFunction::constant(1.0), Weight{0}, kCfg);
    CHECK(rep.lhs == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-8));
  }
  SUBCASE("hypothesis violations are rejected") {
    CHECK_THROWS_AS(smoothing_check(Poly::monomial(2), Complex{1.5, 0},
                                 EntireFunction::constant(1.0), Weight{0}, kCfg),
                    std::invalid_argument);
  }
}

TEST_CASE("containment: finite p-norm forces finite sup norm on the corpus") {
  const auto corpus = standard_corpus(8);
  double c_prime = 0.0;
  for (const CorpusEntry& e : corpus) {
    const NormResult p2 = norm_p(e.f, Weight{0}, 2.0, kCfg);
    if (!p2.finite()) continue;
    const NormResult sup = norm_sup(e.f, Weight{0}, kCfg);
    REQUIRE(sup.finite());
    if (p2.value > 0.0) c_prime = std::max(c_prime, sup.value / p2.value);
  }
  CHECK(c_prime > 0.0);
  CHECK(c_prime <= 100.0);
  MESSAGE("recorded containment constant C' = ", c_prime);
}

TEST_CASE("boundary gaussian: sup attained, integral infinite") {
  // |alpha| = 1/2 with no linear term and constant prefactor: the weighted
  // modulus is identically 1 along the maximizing rays.
  const EntireFunction half = EntireFunction::exp_poly(Poly::constant(1.0), Poly::monomial(2, 0.5));
  const NormResult sup = norm_sup(half, Weight{0}, kCfg);
  REQUIRE(sup.finite());
  CHECK(sup.value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(!norm_p(half, Weight{0}, 2.0, kCfg).finite());
  CHECK(!norm_sup(half, Weight{1}, kCfg).finite());
}

TEST_CASE("derivative-route divergence propagates") {
  const EntireFunction hot = EntireFunction::exp_poly(Poly::constant(1.0), Poly::monomial(2, 0.6));
  const NormResult r = norm_sup_LP(hot, Weight{0}, kCfg);
  CHECK(!r.finite());
  CHECK(!r.growth_report.empty());
}

TEST_CASE("lazy images classify through their envelopes") {
  const EntireFunction seed = EntireFunction::exp_poly(Poly::constant(1.0), Poly::monomial(2, 0.2));
  const EntireFunction img = volterra_apply(Poly::monomial(2), seed);
  CHECK(img.kind() == EntireFunction::Kind::VolterraImage);
  CHECK(membership(img, Weight{1}).sup_finite());
  const NormResult direct = norm_sup(img, Weight{1}, kCfg);
  REQUIRE(direct.finite());
  const NormResult lp = norm_sup_LP(img, Weight{1}, kCfg);  // no quadrature on this route
  REQUIRE(lp.finite());
  const double ratio = direct.value / lp.value;
  CHECK(ratio > 0.01);
  CHECK(ratio < 100.0);

  const EntireFunction res = resolvent_apply(Poly::monomial(2), Complex{10, 0}, seed);
  CHECK(membership(res, Weight{0}).sup_finite());
  // The resolvent envelope takes the max of the e^{g1/lambda} and h growth
  // rates: still finite at lambda = 2.2 (max(1/2.2, 0.2) < 1/2), infinite
  // once 1/lambda crosses 1/2.
  CHECK(membership(resolvent_apply(Poly::monomial(2), Complex{2.2, 0}, seed), Weight{0})
            .sup_finite());
  CHECK(!membership(resolvent_apply(Poly::monomial(2), Complex{1.8, 0}, seed), Weight{0})
             .sup_finite());
}

TEST_CASE("standard corpus is deterministic and has 50 entries") {
  const auto a = standard_corpus();
  const auto b = standard_corpus();
  REQUIRE(a.size() == 50);
  REQUIRE(b.size() == 50);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].f.value_at_zero() == b[i].f.value_at_zero());
  }
}

TEST_CASE("norm_p rejects bad exponents") {
  CHECK_THROWS_AS(norm_p(EntireFunction::identity(), Weight{0}, 0.0, kCfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(norm_p(EntireFunction::identity(), Weight{0},
                         std::numeric_limits<double>::infinity(), kCfg),
                  std::invalid_argument);
}
