#ifndef HARDYLAB_SPECFUN_HPP_
#define HARDYLAB_SPECFUN_HPP_

namespace hardylab {

// Spatial dimension n >= 2.  Rejects anything smaller.
class Dimension {
 public:
  explicit Dimension(int n);
  int value() const { return n_; }

 private:
  int n_;
};

// Gamma function for x > 0.  Relative accuracy better than 1e-12 on (0, 50].
double gamma_fn(double x);

// log Gamma(x) for x > 0.
double log_gamma(double x);

// Beta function B(z1, z2) = Gamma(z1)Gamma(z2)/Gamma(z1+z2), z1, z2 > 0.
// Evaluated in log space so large arguments do not overflow.
double beta_fn(double z1, double z2);

// Surface measure of the unit sphere S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
double sphere_measure(Dimension n);

// Volume of the unit ball: pi^{n/2} / Gamma(1 + n/2).  sphere = n * ball.
double ball_volume(Dimension n);

}  // namespace hardylab

#endif  // HARDYLAB_SPECFUN_HPP_
