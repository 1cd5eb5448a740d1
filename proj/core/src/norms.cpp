#include "hardylab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace hardylab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_finite_norm(const RadialProfile& f, double p, int n) {
  if (!(p * f.decay_zero + n > 0.0))
    throw std::domain_error("mixed norm divergent near the origin");
  if (f.compact_support()) return;
  const double e = f.tail ? f.tail->exponent : f.decay_inf;
  if (!(p * e + n < 0.0))
    throw std::domain_error("mixed norm divergent at infinity");
}

}  // namespace

MixedExponents::MixedExponents(double p_, double p_bar_, Dimension n_)
    : p(p_), p_bar(p_bar_), n(n_) {
  if (!(p > 1.0) || std::isinf(p) || !(p_bar > 1.0) || std::isinf(p_bar))
    throw std::domain_error("MixedExponents: exponents must lie in (1, inf)");
}

double mixed_norm_radial(const RadialProfile& f, const MixedExponents& e,
                         const QuadratureSpec& spec) {
  check_finite_norm(f, e.p, e.n.value());
  const RadialProfile fp = pow_abs_profile(f, e.p);
  const double ip = integrate_profile(fp, e.n.value() - 1.0, 0.0, kInf, spec);
  return std::pow(sphere_measure(e.n), 1.0 / e.p_bar) * std::pow(ip, 1.0 / e.p);
}

double mixed_norm_separable(const SeparableField& F, const MixedExponents& e,
                            const QuadratureSpec& spec) {
  check_finite_norm(F.radial, e.p, e.n.value());
  double angular;
  if (F.angular.is_constant) {
    angular = std::pow(std::abs(F.angular.constant_value), e.p_bar) *
              sphere_measure(e.n);
  } else {
    AngularProfile ap;
    ap.eval = [base = F.angular.eval, q = e.p_bar](double a1, double a2) {
      const double v = std::abs(base(a1, a2));
      return v == 0.0 ? 0.0 : std::pow(v, q);
    };
    angular = integrate_sphere(ap, e.n, spec);
  }
  const RadialProfile rp = pow_abs_profile(F.radial, e.p);
  const double radial = integrate_profile(rp, e.n.value() - 1.0, 0.0, kInf, spec);
  return std::pow(angular, 1.0 / e.p_bar) * std::pow(radial, 1.0 / e.p);
}

double weak_mixed_norm_monotone(const RadialProfile& g, const MixedExponents& e,
                                const QuadratureSpec& spec) {
  spec.validate();
  const int n = e.n.value();
  const double r_min = 1e-9;

  // Probe check: nonnegative, nonincreasing, vanishing at infinity.
  std::vector<double> probes = g.breakpoints;
  for (int k = 0; k <= 48; ++k)
    probes.push_back(1e-6 * std::pow(10.0, 12.0 * k / 48.0));
  std::sort(probes.begin(), probes.end());
  double top = g.eval(r_min);
  if (top < 0.0)
    throw std::domain_error("weak_mixed_norm_monotone: negative input");
  double prev = top;
  const double slack = 1e-9 * std::max(top, 1.0);
  for (double r : probes) {
    if (!(r > 0.0)) continue;
    const double v = g.eval(r);
    if (v < -slack || v > prev + slack)
      throw std::domain_error(
          "weak_mixed_norm_monotone: input is not nonincreasing");
    prev = std::min(prev, std::max(v, 0.0));
  }
  if (top == 0.0) return 0.0;

  const double omega_fac = std::pow(sphere_measure(e.n), 1.0 / e.p_bar);
  const double n_fac = std::pow(double(n), -1.0 / e.p);

  // r_lambda = sup{r : g(r) > lambda} by doubling and bisection.
  auto super_level_radius = [&](double lambda) -> double {
    if (!(g.eval(r_min) > lambda)) return 0.0;
    double lo = r_min, hi = std::max(1.0, 2.0 * r_min);
    int guard = 0;
    while (g.eval(hi) > lambda) {
      lo = hi;
      hi *= 2.0;
      if (++guard > 600)
        throw std::domain_error(
            "weak_mixed_norm_monotone: level set appears unbounded");
    }
    while (hi - lo > 1e-14 * hi) {
      const double mid = 0.5 * (lo + hi);
      (g.eval(mid) > lambda ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };

  auto objective = [&](double lambda) -> double {
    const double r = super_level_radius(lambda);
    if (r <= 0.0) return 0.0;
    return lambda * omega_fac * n_fac * std::exp((n / e.p) * std::log(r));
  };

  // Coarse scan over log lambda, then golden-section refinement.
  const double lam_hi = top * (1.0 - 1e-12);
  const double lam_lo = top * 1e-6;
  const int grid = 121;
  double best = 0.0;
  int best_idx = 0;
  std::vector<double> lams(grid);
  for (int j = 0; j < grid; ++j) {
    lams[j] = lam_hi * std::pow(lam_lo / lam_hi, double(j) / (grid - 1));
    const double v = objective(lams[j]);
    if (v > best) {
      best = v;
      best_idx = j;
    }
  }
  double lo = std::log(lams[std::min(best_idx + 1, grid - 1)]);
  double hi = std::log(lams[std::max(best_idx - 1, 0)]);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = objective(std::exp(x1)), f2 = objective(std::exp(x2));
  for (int it = 0; it < 120 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = objective(std::exp(x2));
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = objective(std::exp(x1));
    }
    best = std::max({best, f1, f2});
  }
  return best;
}

}  // namespace hardylab
