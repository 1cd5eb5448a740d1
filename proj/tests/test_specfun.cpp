#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "hardylab/specfun.hpp"

using namespace hardylab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("dimension validation") {
  CHECK(Dimension(2).value() == 2);
  CHECK(Dimension(7).value() == 7);
  CHECK_THROWS_AS(Dimension(1), std::domain_error);
  CHECK_THROWS_AS(Dimension(0), std::domain_error);
  CHECK_THROWS_AS(Dimension(-3), std::domain_error);
}

TEST_CASE("gamma at integers and half-integers") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK(gamma_fn(1.5) == doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
}

TEST_CASE("gamma recurrence chain is an independent oracle") {
  // Gamma(x+k) built from Gamma(x) by x Gamma(x) = Gamma(x+1) only.
  std::mt19937 rng(321u);
  std::uniform_real_distribution<double> ux(0.5, 1.5);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = ux(rng);
    double chain = gamma_fn(x);
    for (int k = 0; k < 20; ++k) {
      chain *= x + k;
      CHECK(gamma_fn(x + k + 1) == doctest::Approx(chain).epsilon(1e-12));
    }
  }
}

TEST_CASE("log_gamma agrees with gamma and survives large arguments") {
  for (double x : {0.3, 1.0, 2.5, 10.0, 50.0})
    CHECK(log_gamma(x) ==
          doctest::Approx(std::log(gamma_fn(x))).epsilon(1e-13));
  // Stirling check at x = 1000: log Gamma(x) ~ (x-1/2)log x - x + log(2 pi)/2.
  const double x = 1000.0;
  const double stirling = (x - 0.5) * std::log(x) - x +
                          0.5 * std::log(2.0 * kPi) + 1.0 / (12.0 * x);
  CHECK(log_gamma(x) == doctest::Approx(stirling).epsilon(1e-9));
}

TEST_CASE("beta function symmetry and Gamma identity") {
  CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta_fn(0.5, 0.5) == doctest::Approx(kPi).epsilon(1e-13));
  CHECK(beta_fn(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
  std::mt19937 rng(77u);
  std::uniform_real_distribution<double> uz(0.1, 8.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double z1 = uz(rng), z2 = uz(rng);
    CHECK(beta_fn(z1, z2) == doctest::Approx(beta_fn(z2, z1)).epsilon(1e-13));
    const double via_gamma =
        gamma_fn(z1) * gamma_fn(z2) / gamma_fn(z1 + z2);
    CHECK(beta_fn(z1, z2) == doctest::Approx(via_gamma).epsilon(1e-12));
  }
}

TEST_CASE("sphere measure and ball volume in low dimensions") {
  CHECK(sphere_measure(Dimension(2)) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
  CHECK(sphere_measure(Dimension(3)) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  CHECK(sphere_measure(Dimension(4)) ==
        doctest::Approx(2.0 * kPi * kPi).epsilon(1e-14));
  CHECK(ball_volume(Dimension(2)) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(ball_volume(Dimension(3)) ==
        doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-14));
}

TEST_CASE("sphere measure equals n times ball volume") {
  for (int n = 2; n <= 10; ++n)
    CHECK(sphere_measure(Dimension(n)) ==
          doctest::Approx(n * ball_volume(Dimension(n))).epsilon(1e-13));
}
