#include "hardylab/fields.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hardylab {

RadialProfile make_f_eps(double eps, double p, Dimension n) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::domain_error("make_f_eps: eps must lie in (0,1)");
  if (!(p > 1.0) || std::isinf(p))
    throw std::domain_error("make_f_eps: p must lie in (1,inf)");
  const double a = -(n.value() / p + eps);
  RadialProfile f;
  f.eval = [a](double r) {
    return r <= 1.0 ? 0.0 : std::exp(a * std::log(r));
  };
  f.breakpoints = {1.0};
  f.decay_zero = 0.0;
  f.decay_inf = a;
  PowerTail t;
  t.start = 1.0;
  t.exponent = a;
  t.coef = 1.0;
  f.tail = t;
  return f;
}

RadialProfile make_f0_fractional(double q, double beta, Dimension n) {
  if (!(q > 1.0) || std::isinf(q))
    throw std::domain_error("make_f0_fractional: q must lie in (1,inf)");
  if (!(beta > 0.0 && beta < n.value()))
    throw std::domain_error("make_f0_fractional: beta must lie in (0,n)");
  const double m = q * beta;
  const double expo = 1.0 + n.value() / m;
  RadialProfile f;
  // For r > 1 rewrite (1+r^m)^{-expo} = r^{-(m+n)} (1+r^{-m})^{-expo} so that
  // no intermediate overflows.
  f.eval = [m, expo](double r) {
    if (r <= 1.0) return std::pow(1.0 + std::pow(r, m), -expo);
    return std::exp(-(m * expo) * std::log(r)) *
           std::pow(1.0 + std::pow(r, -m), -expo);
  };
  f.decay_zero = 0.0;
  f.decay_inf = -(m + n.value());
  PowerTail t;
  t.start = 1.0;
  t.exponent = f.decay_inf;
  t.scale = [m, expo](double r) {
    return std::pow(1.0 + std::pow(r, -m), -expo);
  };
  t.scale_bound = 1.0;
  f.tail = t;
  return f;
}

RadialProfile make_chi_ball(double r) {
  if (!(r > 0.0)) throw std::domain_error("make_chi_ball: radius must be > 0");
  RadialProfile f;
  f.eval = [r](double s) { return s <= r ? 1.0 : 0.0; };
  f.breakpoints = {r};
  f.decay_zero = 0.0;
  f.decay_inf = 0.0;
  PowerTail t;
  t.start = r;
  t.exponent = 0.0;
  t.coef = 0.0;  // identically zero beyond r
  f.tail = t;
  return f;
}

SeparableField make_separable(RadialProfile radial, AngularProfile angular) {
  return SeparableField{std::move(radial), std::move(angular)};
}

RadialProfile scale_profile(const RadialProfile& f, double c) {
  RadialProfile g = f;
  g.eval = [base = f.eval, c](double r) { return c * base(r); };
  if (g.tail) {
    if (g.tail->pure()) {
      g.tail->coef *= c;
    } else {
      g.tail->scale = [sc = f.tail->scale, c](double r) { return c * sc(r); };
      g.tail->scale_bound *= std::abs(c);
    }
  }
  return g;
}

RadialProfile dilate_profile(const RadialProfile& f, double t) {
  if (!(t > 0.0)) throw std::domain_error("dilate_profile: t must be > 0");
  RadialProfile g;
  g.eval = [base = f.eval, t](double r) { return base(t * r); };
  for (double b : f.breakpoints) g.breakpoints.push_back(b / t);
  g.decay_zero = f.decay_zero;
  g.decay_inf = f.decay_inf;
  if (f.tail) {
    PowerTail tail;
    tail.start = f.tail->start / t;
    tail.exponent = f.tail->exponent;
    if (f.tail->pure()) {
      tail.coef = f.tail->coef * std::pow(t, f.tail->exponent);
    } else {
      const double te = std::pow(t, f.tail->exponent);
      tail.scale = [sc = f.tail->scale, t, te](double r) {
        return te * sc(t * r);
      };
      tail.scale_bound = f.tail->scale_bound * te;
    }
    g.tail = tail;
  }
  return g;
}

double f_eps_norm(double eps, double p, double pbar, Dimension n) {
  return std::pow(sphere_measure(n), 1.0 / pbar) * std::pow(p * eps, -1.0 / p);
}

double chi_ball_norm(double r, double p, double pbar, Dimension n) {
  return std::pow(sphere_measure(n), 1.0 / pbar) *
         std::pow(r, n.value() / p) * std::pow(n.value(), -1.0 / p);
}

}  // namespace hardylab
