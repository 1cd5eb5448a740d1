#ifndef HARDYLAB_FIELDS_HPP_
#define HARDYLAB_FIELDS_HPP_

#include "hardylab/quadrature.hpp"
#include "hardylab/specfun.hpp"

namespace hardylab {

// f(r theta) = radial(r) * angular(theta).
struct SeparableField {
  RadialProfile radial;
  AngularProfile angular;

  // Pointwise evaluation; a1/a2 follow the AngularProfile angle convention.
  double value(double r, double a1, double a2 = 0.0) const {
    return radial.eval(r) * angular.eval(a1, a2);
  }
};

// Extremizer family for the Hardy sharp constant:
//   f_eps(r) = 0 for r <= 1, r^{-(n/p + eps)} for r > 1,  0 < eps < 1.
RadialProfile make_f_eps(double eps, double p, Dimension n);

// Extremizer for the fractional sharp constant:
//   f_0(r) = (1 + r^{q beta})^{-(1 + n/(q beta))},  q > 1, 0 < beta < n.
RadialProfile make_f0_fractional(double q, double beta, Dimension n);

// Indicator of the ball of radius r as a radial profile.
RadialProfile make_chi_ball(double r);

SeparableField make_separable(RadialProfile radial, AngularProfile angular);

// c * f, with tail and envelopes rescaled.
RadialProfile scale_profile(const RadialProfile& f, double c);

// r -> f(t r), t > 0.
RadialProfile dilate_profile(const RadialProfile& f, double t);

// Closed-form mixed norms the extremizers admit.
// ||f_eps||_{L^p L^{pbar}} = w_n^{1/pbar} (p eps)^{-1/p}
double f_eps_norm(double eps, double p, double pbar, Dimension n);
// ||chi_r||_{L^p L^{pbar}} = w_n^{1/pbar} r^{n/p} / n^{1/p}
double chi_ball_norm(double r, double p, double pbar, Dimension n);

}  // namespace hardylab

#endif  // HARDYLAB_FIELDS_HPP_
