#include "hardylab/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hardylab {

Dimension::Dimension(int n) : n_(n) {
  if (n < 2) throw std::domain_error("Dimension: n must be >= 2");
}

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn: argument must be positive");
  if (x > 170.0) return std::exp(log_gamma(x));  // tgamma overflows past ~171
  return std::tgamma(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double beta_fn(double z1, double z2) {
  if (!(z1 > 0.0) || !(z2 > 0.0))
    throw std::domain_error("beta_fn: arguments must be positive");
  return std::exp(log_gamma(z1) + log_gamma(z2) - log_gamma(z1 + z2));
}

double sphere_measure(Dimension n) {
  const double h = 0.5 * n.value();
  return 2.0 * std::pow(std::numbers::pi, h) / gamma_fn(h);
}

double ball_volume(Dimension n) {
  const double h = 0.5 * n.value();
  return std::pow(std::numbers::pi, h) / gamma_fn(1.0 + h);
}

}  // namespace hardylab
