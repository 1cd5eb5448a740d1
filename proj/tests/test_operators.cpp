#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "hardylab/fields.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/operators.hpp"

using namespace hardylab;

namespace {

constexpr double kPi = std::numbers::pi;

RadialProfile exp_profile() {
  RadialProfile f;
  f.eval = [](double r) { return std::exp(-r); };
  f.decay_inf = -30.0;
  return f;
}

// Composite Simpson on [a, b], panels even.  Deliberately independent of the
// adaptive engine.
double simpson(const std::function<double(double)>& f, double a, double b,
               int panels) {
  const double h = (b - a) / panels;
  double acc = f(a) + f(b);
  for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

}  // namespace

TEST_CASE("ball average of the ball indicator") {
  for (int n : {2, 3}) {
    const Dimension dim(n);
    const RadialProfile h = hardy_radial(make_chi_ball(1.0), dim);
    for (double r : {0.1, 0.5, 1.0, 2.0, 7.5}) {
      const double expected = std::min(1.0, std::pow(r, -double(n)));
      CHECK(h.eval(r) == doctest::Approx(expected).epsilon(1e-11));
    }
  }
}

TEST_CASE("ball average of a power is a power") {
  // H(s^alpha)(r) = n r^alpha / (n + alpha).
  const Dimension dim(2);
  RadialProfile f;
  f.eval = [](double r) { return r; };
  f.decay_zero = 1.0;
  f.decay_inf = 1.0;
  const RadialProfile h = hardy_radial(f, dim);
  for (double r : {1e-3, 0.2, 1.0, 40.0})
    CHECK(h.eval(r) == doctest::Approx(2.0 * r / 3.0).epsilon(1e-11));
}

TEST_CASE("dual operator against the exponential integral") {
  // H*(e^{-s})(r) = n int_r^inf e^{-s}/s ds = n E1(r); E1(1) known.
  const Dimension dim(2);
  const RadialProfile h = dual_hardy_radial(exp_profile(), dim);
  CHECK(h.eval(1.0) ==
        doctest::Approx(2.0 * 0.21938393439552029).epsilon(1e-10));
  // Independent Simpson oracle at r = 0.5 over [0.5, 40].
  const double oracle =
      simpson([](double s) { return std::exp(-s) / s; }, 0.5, 40.0, 20000);
  CHECK(h.eval(0.5) == doctest::Approx(2.0 * oracle).epsilon(1e-9));
}

TEST_CASE("dual operator on a pure power tail") {
  // f = chi_{s>1} s^{-3}: H*(f)(r) = n / (3 max(r,1)^3).
  const Dimension dim(3);
  RadialProfile f;
  f.eval = [](double r) { return r > 1.0 ? std::pow(r, -3.0) : 0.0; };
  f.breakpoints = {1.0};
  f.decay_inf = -3.0;
  f.tail = PowerTail{1.0, -3.0, 1.0, nullptr, 0.0};
  const RadialProfile h = dual_hardy_radial(f, dim);
  for (double r : {0.2, 1.0, 2.0, 100.0})
    CHECK(h.eval(r) ==
          doctest::Approx(1.0 / std::pow(std::max(r, 1.0), 3.0))
              .epsilon(1e-11));
}

TEST_CASE("fractional operator on the ball indicator") {
  // n=2, beta=1: H_1(chi)(r) = sqrt(pi) r on (0,1], sqrt(pi)/r beyond.
  const Dimension dim(2);
  const RadialProfile h =
      fractional_hardy_radial(make_chi_ball(1.0), FractionalOrder(1.0, dim));
  for (double r : {0.05, 0.3, 1.0})
    CHECK(h.eval(r) == doctest::Approx(std::sqrt(kPi) * r).epsilon(1e-11));
  for (double r : {2.0, 10.0})
    CHECK(h.eval(r) == doctest::Approx(std::sqrt(kPi) / r).epsilon(1e-11));
}

TEST_CASE("fractional operator approaches the ball average as beta -> 0") {
  const Dimension dim(2);
  const RadialProfile f = exp_profile();
  const RadialProfile h0 = hardy_radial(f, dim);
  const RadialProfile hb = fractional_hardy_radial(f, FractionalOrder(1e-9, dim));
  for (double r : {0.3, 1.0, 5.0})
    CHECK(hb.eval(r) == doctest::Approx(h0.eval(r)).epsilon(1e-7));
}

TEST_CASE("dual fractional operator on the ball indicator") {
  // n=2, beta=1: H*_1(chi)(r) = 2 sqrt(pi) (1 - r) on [0,1], 0 beyond.
  const Dimension dim(2);
  const RadialProfile h = dual_fractional_hardy_radial(make_chi_ball(1.0),
                                                       FractionalOrder(1.0, dim));
  CHECK(h.eval(0.0) == doctest::Approx(2.0 * std::sqrt(kPi)).epsilon(1e-11));
  for (double r : {0.25, 0.5, 0.9})
    CHECK(h.eval(r) ==
          doctest::Approx(2.0 * std::sqrt(kPi) * (1.0 - r)).epsilon(1e-11));
  CHECK(h.eval(3.0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("fractional order validation") {
  CHECK_THROWS_AS(FractionalOrder(0.0, Dimension(2)), std::domain_error);
  CHECK_THROWS_AS(FractionalOrder(2.0, Dimension(2)), std::domain_error);
  CHECK_THROWS_AS(FractionalOrder(-1.0, Dimension(3)), std::domain_error);
  CHECK_NOTHROW(FractionalOrder(2.5, Dimension(3)));
}

TEST_CASE("spherical average of a separable field") {
  const SeparableField F = make_separable(
      exp_profile(),
      AngularProfile::circle([](double phi) { return 1.0 + std::cos(phi); }));
  const RadialProfile avg = spherical_average(F, Dimension(2));
  // Mean of 1 + cos phi over the circle is 1.
  for (double r : {0.2, 1.0, 4.0})
    CHECK(avg.eval(r) == doctest::Approx(std::exp(-r)).epsilon(1e-12));
}

TEST_CASE("direct oracle on a hand-computed non-radial input") {
  // F = chi_{|y|<1} (1 + cos phi), |x| = 2: the average over the ball of
  // radius 2 is (1/(4 pi)) * pi * 1 = 1/4.
  const SeparableField F = make_separable(
      make_chi_ball(1.0),
      AngularProfile::circle([](double phi) { return 1.0 + std::cos(phi); }));
  const QuadratureSpec spec;
  CHECK(hardy_direct_oracle(F, 2.0, Dimension(2), spec) ==
        doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("rotation reduction: ball average commutes with angular averaging") {
  const QuadratureSpec spec;
  const SeparableField F = make_separable(
      exp_profile(), AngularProfile::circle([](double phi) {
        return 1.0 + 0.7 * std::sin(phi) - 0.2 * std::cos(2.0 * phi);
      }));
  const RadialProfile havg =
      hardy_radial(spherical_average(F, Dimension(2), spec), Dimension(2), spec);
  for (double r : {0.3, 1.0, 2.5, 4.0})
    CHECK(havg.eval(r) ==
          doctest::Approx(hardy_direct_oracle(F, r, Dimension(2), spec))
              .epsilon(1e-9));
}

TEST_CASE("angular averaging contracts the mixed norm") {
  // Jensen: ||spherical average||_{L^p L^{pbar}} <= ||F||_{L^p L^{pbar}}.
  const QuadratureSpec spec;
  std::mt19937 rng(909u);
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = uc(rng), b = uc(rng), c = uc(rng);
    const SeparableField F = make_separable(
        exp_profile(), AngularProfile::circle([=](double phi) {
          return 2.0 + a * std::cos(phi) + b * std::sin(phi) +
                 c * std::cos(3.0 * phi);
        }));
    const MixedExponents e(2.0, 3.0, Dimension(2));
    const double lhs =
        mixed_norm_radial(spherical_average(F, Dimension(2), spec), e, spec);
    const double rhs = mixed_norm_separable(F, e, spec);
    CHECK(lhs <= rhs + 1e-9);
  }
}

TEST_CASE("ball average preserves positivity and scaling") {
  const Dimension dim(2);
  const RadialProfile f = exp_profile();
  const RadialProfile h = hardy_radial(f, dim);
  for (double r : {0.01, 0.5, 2.0, 25.0}) CHECK(h.eval(r) > 0.0);
  const RadialProfile h3 = hardy_radial(scale_profile(f, 3.0), dim);
  for (double r : {0.5, 2.0})
    CHECK(h3.eval(r) == doctest::Approx(3.0 * h.eval(r)).epsilon(1e-11));
}

TEST_CASE("ball average commutes with dilation") {
  // H(f(t .))(r) = H(f)(t r).
  const Dimension dim(2);
  const RadialProfile f = exp_profile();
  const double t = 2.5;
  const RadialProfile lhs = hardy_radial(dilate_profile(f, t), dim);
  const RadialProfile rhs = hardy_radial(f, dim);
  for (double r : {0.2, 1.0, 3.0})
    CHECK(lhs.eval(r) == doctest::Approx(rhs.eval(t * r)).epsilon(1e-10));
}
