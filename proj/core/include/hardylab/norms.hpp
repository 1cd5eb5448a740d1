#ifndef HARDYLAB_NORMS_HPP_
#define HARDYLAB_NORMS_HPP_

#include "hardylab/fields.hpp"
#include "hardylab/quadrature.hpp"
#include "hardylab/specfun.hpp"

namespace hardylab {

// Exponent pair (p, pbar) of L^p_{|x|} L^{pbar}_theta, both in (1, inf).
struct MixedExponents {
  MixedExponents(double p, double p_bar, Dimension n);

  double p;
  double p_bar;
  Dimension n;

  double p_conj() const { return p / (p - 1.0); }
  double p_bar_conj() const { return p_bar / (p_bar - 1.0); }
};

// ||f|| = w_n^{1/pbar} (int_0^inf |f(r)|^p r^{n-1} dr)^{1/p} for radial f.
// Divergence is detected from decay metadata before any quadrature runs.
double mixed_norm_radial(const RadialProfile& f, const MixedExponents& e,
                         const QuadratureSpec& spec = {});

// Separable field: the norm factorizes into an angular L^{pbar} factor and a
// radial L^p factor.
double mixed_norm_separable(const SeparableField& F, const MixedExponents& e,
                            const QuadratureSpec& spec = {});

// Weak mixed norm sup_{lambda>0} lambda ||chi_{{|g|>lambda}}|| for a
// nonnegative nonincreasing radial g with g(r) -> 0:
//   sup_lambda lambda w_n^{1/pbar} (r_lambda^n / n)^{1/p},
// r_lambda = sup{r : g(r) > lambda}.  Monotonicity is probe-checked.
double weak_mixed_norm_monotone(const RadialProfile& g, const MixedExponents& e,
                                const QuadratureSpec& spec = {});

}  // namespace hardylab

#endif  // HARDYLAB_NORMS_HPP_
