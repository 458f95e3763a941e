#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fockvolt/weight.hpp"

using namespace fockvolt;

TEST_CASE("psi values") {
  CHECK(Weight{0}.psi(1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(Weight{0}.psi(0.0) == doctest::Approx(0.0));
  CHECK(Weight{1}.psi(1.0) == doctest::Approx(0.5 - std::log(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(Weight{0}.psi(-0.5), std::domain_error);
  CHECK_THROWS_AS(Weight{-1}, std::invalid_argument);
}

TEST_CASE("psi_prime values") {
  CHECK(Weight{0}.psi_prime(2.0) == doctest::Approx(2.0));
  CHECK(Weight{1}.psi_prime(0.0) == doctest::Approx(-1.0));
  CHECK(Weight{2}.psi_prime(1.0) == doctest::Approx(0.0));
}

TEST_CASE("normalizer values and degenerate point") {
  CHECK(Weight{0}.normalizer(3.0) == doctest::Approx(4.0));
  CHECK(Weight{1}.normalizer(0.0) == doctest::Approx(1.0));  // raw 1 + psi' would be 0
  const Weight w2{2};
  CHECK(w2.normalizer(100.0) == doctest::Approx(101.0));
  const double raw = 1.0 + w2.psi_prime(100.0);
  CHECK(raw == doctest::Approx(100.98019801980198).epsilon(1e-12));
  CHECK(w2.normalizer(100.0) / raw == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("clamped raw normalizer mode") {
  const Weight w{1, NormalizerMode::ClampedRaw};
  CHECK(w.normalizer(0.0) == doctest::Approx(0.25));  // clamp engages where 1+psi' vanishes
  CHECK(w.normalizer(10.0) == doctest::Approx(1.0 + w.psi_prime(10.0)));
}

TEST_CASE("monotone growth past 2 sqrt(m) + 1") {
  for (int m : {0, 1, 2, 3, 4}) {
    const Weight w{m};
    const double start = 2.0 * std::sqrt(static_cast<double>(m)) + 1.0;
    double prev_psi = w.psi(start), prev_dpsi = w.psi_prime(start);
    for (int i = 1; i <= 200; ++i) {
      const double r = start + 0.25 * i;
      CHECK(w.psi(r) > prev_psi);
      CHECK(w.psi_prime(r) > prev_dpsi);
      prev_psi = w.psi(r);
      prev_dpsi = w.psi_prime(r);
    }
  }
}

TEST_CASE("normalizer ratio band on r >= 2 sqrt(m)") {
  for (int m : {0, 1, 2, 3, 4}) {
    const Weight w{m};
    for (int i = 0; i <= 400; ++i) {
      const double r = 2.0 * std::sqrt(static_cast<double>(m)) + 0.1 * i;
      const double ratio = w.normalizer(r) / (1.0 + w.psi_prime(r));
      CHECK(ratio >= 1.0 - 1e-12);
      CHECK(ratio <= 1.0 + m + 1e-12);
    }
  }
}

TEST_CASE("finite differences match psi_prime at 1e-6 relative") {
  for (int m : {0, 1, 2}) {
    const Weight w{m};
    for (double r = 0.1; r <= 50.0; r += 0.37) {
      const double h = 1e-6 * (1.0 + r);
      const double fd = (w.psi(r + h) - w.psi(r - h)) / (2.0 * h);
      const double exact = w.psi_prime(r);
      CHECK(fd == doctest::Approx(exact).epsilon(1e-6));
    }
  }
}
