#ifndef HARDYLAB_OPERATORS_HPP_
#define HARDYLAB_OPERATORS_HPP_

#include "hardylab/fields.hpp"
#include "hardylab/quadrature.hpp"
#include "hardylab/specfun.hpp"

namespace hardylab {

// Fractional order 0 < beta < n.
struct FractionalOrder {
  FractionalOrder(double beta, Dimension n);
  double beta;
  Dimension n;
};

// H(f)(r) = (n / r^n) int_0^r f(s) s^{n-1} ds, the ball average of f.
// The result is lazily evaluated; cumulative integrals are memoized.
RadialProfile hardy_radial(const RadialProfile& f, Dimension n,
                           const QuadratureSpec& spec = {});

// H*(f)(r) = n int_r^inf f(s) s^{-1} ds.
RadialProfile dual_hardy_radial(const RadialProfile& f, Dimension n,
                                const QuadratureSpec& spec = {});

// H_beta(f)(r) = w_n Omega_n^{beta/n - 1} r^{beta-n} int_0^r f(s) s^{n-1} ds.
RadialProfile fractional_hardy_radial(const RadialProfile& f,
                                      FractionalOrder order,
                                      const QuadratureSpec& spec = {});

// H*_beta(f)(r) = w_n Omega_n^{(beta-n)/n} int_r^inf f(s) s^{beta-1} ds.
RadialProfile dual_fractional_hardy_radial(const RadialProfile& f,
                                           FractionalOrder order,
                                           const QuadratureSpec& spec = {});

// g(r) = (1/w_n) int_{S^{n-1}} F(r theta) dtheta.  For separable F this is
// the radial factor scaled by the angular mean.
RadialProfile spherical_average(const SeparableField& F, Dimension n,
                                const QuadratureSpec& spec = {});

// Independent check of H on non-radial inputs: full product quadrature in
// polar coordinates over the ball of radius |x|, no radial reduction.
double hardy_direct_oracle(const SeparableField& F, double radius, Dimension n,
                           const QuadratureSpec& spec);

}  // namespace hardylab

#endif  // HARDYLAB_OPERATORS_HPP_
