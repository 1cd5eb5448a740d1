#ifndef HARDYLAB_SHARPNESS_HPP_
#define HARDYLAB_SHARPNESS_HPP_

#include <optional>
#include <random>
#include <string>

#include "hardylab/norms.hpp"
#include "hardylab/operators.hpp"
#include "hardylab/quadrature.hpp"
#include "hardylab/specfun.hpp"

namespace hardylab {

// Hypotheses of the strong and weak Hardy bounds: n >= 2, exponents in (1,inf).
struct HardyConfig {
  HardyConfig(Dimension n, double p, double p_bar_1, double p_bar_2);
  Dimension n;
  double p;
  double p_bar_1;
  double p_bar_2;
};

// Hypotheses of the fractional bound, including the scaling relation
// 1/p - 1/q = beta/n (enforced to 1e-12).
struct FractionalConfig {
  FractionalConfig(Dimension n, double beta, double p, double q, double p_bar,
                   double q_bar);
  // Derive q from (p, beta) via the scaling relation.
  static FractionalConfig from_p_beta(Dimension n, double beta, double p,
                                      double p_bar, double q_bar);
  Dimension n;
  double beta;
  double p;
  double q;
  double p_bar;
  double q_bar;
};

enum class OperatorKind {
  hardy,
  dual_hardy,
  fractional_hardy,
  dual_fractional_hardy,
  hardy_weak,  // H measured in the weak output norm
};

// One experiment result.
struct ReportRow {
  std::string command;
  int n = 0;
  std::optional<double> p, q, pbar1, pbar2, beta;
  std::optional<double> family_param;
  std::optional<double> numerical_ratio;
  std::optional<double> closed_form_constant;
  std::optional<double> lower_bound;
  std::optional<double> relative_gap;
  std::string anchor;
};

// ||H|| = p/(p-1) * w_n^{1/pbar2 - 1/pbar1}
double sharp_hardy_constant(const HardyConfig& c);
// ||H*|| = p * w_n^{1/pbar2 - 1/pbar1}
double sharp_dual_constant(const HardyConfig& c);
// C_{p,q,n,beta} = (p'/q)^{1/q} ((n/(q beta)) B(n/(q beta), n/(q' beta)))^{-beta/n}
double fractional_core_constant(double p, double q, Dimension n, double beta);
// ||H_beta|| = C_{p,q,n,beta} * w_n^{1/qbar - 1/pbar + beta/n}
double sharp_fractional_constant(const FractionalConfig& c);
// ||H||_{strong -> weak} = w_n^{1/pbar2 - 1/pbar1}
double sharp_weak_constant(const HardyConfig& c);

// Lower-bound factor from the f_eps family (the omega factor is applied by
// the caller):  n eps^eps (1 - eps^{n - eps - n/p}) / (n - eps - n/p).
// Tends to p/(p-1) as eps -> 0+.
double eps_lower_bound(double eps, double p, Dimension n);

// ||T f||_out / ||f||_in with the matching closed-form constant and gap.
// `beta` is consulted only by the fractional kinds.
ReportRow ratio_experiment(OperatorKind op, const RadialProfile& f,
                           const MixedExponents& in_exps,
                           const MixedExponents& out_exps,
                           const QuadratureSpec& spec, double beta = 0.0);

// Seeded family for upper-bound property tests: sums of up to three
// piecewise-power bumps plus an optional power-law tail, nonnegative, with
// finite norms for the given input exponent.
RadialProfile random_admissible_profile(std::mt19937& rng, Dimension n,
                                        double p);

}  // namespace hardylab

#endif  // HARDYLAB_SHARPNESS_HPP_
