#ifndef HARDYLAB_QUADRATURE_HPP_
#define HARDYLAB_QUADRATURE_HPP_

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardylab/specfun.hpp"

namespace hardylab {

// Raised when adaptive subdivision runs out of budget before the requested
// tolerance is met.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 10000;
  double tail_tol = 1e-12;

  void validate() const;
};

// Exact description of a profile beyond `start`:
//   f(r) = coef * r^exponent                (scale empty)
//   f(r) = scale(r) * r^exponent            (scale set; |scale| <= scale_bound)
// The scale function must be evaluable without overflow or underflow for
// arbitrarily large r; it carries the bounded part of sums of powers so
// integration can work in log coordinates far beyond double range.
struct PowerTail {
  double start = 1.0;
  double exponent = 0.0;
  double coef = 0.0;
  std::function<double(double)> scale;
  double scale_bound = 0.0;

  bool pure() const { return !scale; }
  double bound() const;
};

// A scalar function of radius with the metadata the quadrature engine needs:
// sorted breakpoints where it is non-smooth, power-law envelopes at 0 and
// infinity, and (optionally) an exact tail representation.
struct RadialProfile {
  std::function<double(double)> eval;
  std::vector<double> breakpoints;
  double decay_zero = 0.0;  // |f(r)| = O(r^decay_zero) as r -> 0+
  double decay_inf = 0.0;   // |f(r)| = O(r^decay_inf) as r -> inf
  std::optional<PowerTail> tail;

  double operator()(double r) const { return eval(r); }
  // True when the profile vanishes identically beyond some radius.
  bool compact_support() const { return tail && tail->pure() && tail->coef == 0.0; }
};

// Function on S^{n-1}.  For n=2 eval is called as eval(phi, 0) with phi the
// polar angle on the circle; for n=3 as eval(theta, phi) with theta in [0,pi]
// (angle from the pole) and phi the azimuth.
struct AngularProfile {
  std::function<double(double, double)> eval;
  bool is_constant = false;
  double constant_value = 0.0;

  static AngularProfile constant(double c);
  static AngularProfile circle(std::function<double(double)> f);
  static AngularProfile sphere(std::function<double(double, double)> f);
};

// integral_a^b f(r) r^weight dr, with b = +infinity allowed.  Splits at the
// profile breakpoints, treats an integrable singularity at r = 0 and the far
// tail in log coordinates, and integrates exact power-law tails analytically.
double integrate_profile(const RadialProfile& f, double weight, double a,
                         double b, const QuadratureSpec& spec);

// integral_0^inf f(r) r^{n-1} dr.
double integrate_radial(const RadialProfile& f, Dimension n,
                        const QuadratureSpec& spec);

// F(r) = integral_0^r f(s) s^{n-1} ds.
double cumulative_radial(const RadialProfile& f, Dimension n, double r,
                         const QuadratureSpec& spec);

// integral_{S^{n-1}} a(theta) dtheta (surface measure, unnormalized).
// Supported for n in {2, 3}; constant profiles work in any dimension.
double integrate_sphere(const AngularProfile& a, Dimension n,
                        const QuadratureSpec& spec);

// |f|^p as a profile, with decay metadata and tail transformed accordingly.
RadialProfile pow_abs_profile(const RadialProfile& f, double p);

}  // namespace hardylab

#endif  // HARDYLAB_QUADRATURE_HPP_
