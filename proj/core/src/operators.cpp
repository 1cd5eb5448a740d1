#include "hardylab/operators.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace hardylab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Cumulative integrals are the dominant cost of norm quadrature over operator
// outputs; cache them per profile, keyed by the exact evaluation radius.
struct Memo {
  std::mutex mu;
  std::unordered_map<double, double> vals;

  template <class F>
  double get(double key, F&& compute) {
    {
      std::lock_guard<std::mutex> lk(mu);
      auto it = vals.find(key);
      if (it != vals.end()) return it->second;
    }
    const double v = compute();
    std::lock_guard<std::mutex> lk(mu);
    vals.emplace(key, v);
    return v;
  }
};

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

// kappa * F * r^{expo} without overflow in r^{expo} for extreme r.
double scaled_power(double kappa, double f_value, double expo, double r) {
  if (f_value == 0.0) return 0.0;
  return kappa * sign_of(f_value) *
         std::exp(std::log(std::abs(f_value)) + expo * std::log(r));
}

void append_breakpoint(std::vector<double>& bps, double b) {
  for (double x : bps)
    if (x == b) return;
  bps.push_back(b);
  std::sort(bps.begin(), bps.end());
}

// Smallest R beyond which int_R^inf |f| s^{n-1} ds <= target, from tail
// metadata (or probing when the profile carries none).
double remainder_radius(const RadialProfile& f, int n, double target,
                        double floor_r) {
  double bound, expo;
  if (f.tail) {
    if (f.compact_support()) return std::max(f.tail->start, floor_r);
    bound = f.tail->bound();
    expo = f.tail->exponent;
    floor_r = std::max(floor_r, f.tail->start);
  } else {
    expo = f.decay_inf;
    double b0 = std::max(1.0, floor_r);
    for (double bp : f.breakpoints) b0 = std::max(b0, 2.0 * bp);
    bound = 0.0;
    for (int k = 0; k <= 24; ++k) {
      const double r = b0 * std::pow(2.0, 0.5 * k);
      const double v = std::abs(f.eval(r)) * std::pow(r, -expo);
      if (std::isfinite(v)) bound = std::max(bound, v);
    }
    bound *= 2.0;
    floor_r = std::max(floor_r, b0);
  }
  const double s = expo + n;
  if (!(s < 0.0))
    throw std::domain_error("remainder_radius: tail not integrable");
  if (bound == 0.0) return floor_r;
  const double r = std::pow(target * (-s) / bound, 1.0 / s);
  return std::max(r, floor_r);
}

// Shared core of H and H_beta: out(r) = kappa r^{beta-n} int_0^r f s^{n-1} ds.
RadialProfile hardy_like(const RadialProfile& f, Dimension dim, double beta,
                         const QuadratureSpec& spec) {
  spec.validate();
  const int n = dim.value();
  if (!(f.decay_zero + n > 0.0))
    throw std::domain_error("hardy operator: f not integrable near the origin");
  const double kappa =
      sphere_measure(dim) * std::pow(ball_volume(dim), beta / n - 1.0);

  auto memo = std::make_shared<Memo>();
  auto fc = std::make_shared<RadialProfile>(f);
  auto cum = [memo, fc, n, spec](double r) {
    return memo->get(
        r, [&] { return integrate_profile(*fc, n - 1.0, 0.0, r, spec); });
  };
  auto body = [cum, kappa, beta, n, fz = f.eval](double r) {
    if (r <= 0.0) return beta > 0.0 ? 0.0 : fz(0.0);  // limit value
    return scaled_power(kappa, cum(r), beta - n, r);
  };

  RadialProfile out;
  out.breakpoints = f.breakpoints;
  out.decay_zero = f.decay_zero + beta;

  const bool pure_tail =
      f.tail && f.tail->pure() &&
      (f.tail->coef == 0.0 || std::abs(f.tail->exponent + n) > 1e-9);
  if (pure_tail) {
    const double ts = f.tail->start;
    const double c = f.tail->coef;
    const double e = f.tail->exponent;
    const double f_ts = integrate_profile(f, n - 1.0, 0.0, ts, spec);
    PowerTail t;
    t.start = ts;
    double p_coef = 0.0, q_coef = kappa * f_ts;
    if (c != 0.0) {
      const double ac = c / (e + n);
      p_coef = kappa * ac;
      q_coef = kappa * (f_ts - ac * std::pow(ts, e + n));
    }
    // out(r >= ts) = p_coef r^{e+beta} + q_coef r^{beta-n}
    if (c != 0.0 && e > -n) {
      t.exponent = e + beta;
      t.scale = [p_coef, q_coef, e, n](double r) {
        return p_coef + q_coef * std::pow(r, -double(n) - e);
      };
      t.scale_bound =
          std::abs(p_coef) + std::abs(q_coef) * std::pow(ts, -double(n) - e);
    } else if (c != 0.0) {  // e < -n: the r^{beta-n} term dominates
      t.exponent = beta - n;
      t.scale = [p_coef, q_coef, e, n](double r) {
        return q_coef + p_coef * std::pow(r, e + n);
      };
      t.scale_bound = std::abs(q_coef) + std::abs(p_coef) * std::pow(ts, e + n);
    } else {
      t.exponent = beta - n;
      t.coef = q_coef;
    }
    out.tail = t;
    out.decay_inf = t.exponent;
    append_breakpoint(out.breakpoints, ts);
    out.eval = [body, p_coef, q_coef, e, beta, n, ts](double r) {
      if (r < ts) return body(r);
      return p_coef * std::pow(r, e + beta) +
             q_coef * std::pow(r, beta - double(n));
    };
    return out;
  }

  const bool convergent =
      (f.tail && !f.tail->pure() && f.tail->exponent + n < 0.0) ||
      (!f.tail && f.decay_inf + n < 0.0);
  if (convergent) {
    const double f_tot = integrate_profile(f, n - 1.0, 0.0, kInf, spec);
    const double ts = remainder_radius(
        f, n, spec.tail_tol * std::max(std::abs(f_tot), spec.abs_tol), 1.0);
    PowerTail t;
    t.start = ts;
    t.exponent = beta - n;
    t.coef = kappa * f_tot;
    out.tail = t;
    out.decay_inf = t.exponent;
    append_breakpoint(out.breakpoints, ts);
    out.eval = [body, coef = t.coef, beta, n, ts](double r) {
      if (r < ts) return body(r);
      return coef * std::pow(r, beta - double(n));
    };
    return out;
  }

  // Divergent mass at infinity with no exact tail: evaluate directly and only
  // record the asymptotic envelope.
  out.decay_inf = std::max(beta - n, f.decay_inf + beta);
  out.eval = body;
  return out;
}

// Shared core of H* and H*_beta: out(r) = kappa int_r^inf f(s) s^{beta-1} ds.
RadialProfile dual_like(const RadialProfile& f, Dimension dim, double beta,
                        const QuadratureSpec& spec) {
  spec.validate();
  const int n = dim.value();
  const double kappa =
      sphere_measure(dim) * std::pow(ball_volume(dim), beta / n - 1.0);

  auto memo = std::make_shared<Memo>();
  auto fc = std::make_shared<RadialProfile>(f);

  RadialProfile out;
  out.breakpoints = f.breakpoints;
  const double z = f.decay_zero + beta;
  out.decay_zero = z > 0.0 ? 0.0 : (z == 0.0 ? -0.01 : z);

  if (f.tail && f.tail->pure()) {
    const double ts = f.tail->start;
    const double c = f.tail->coef;
    const double e = f.tail->exponent;
    if (c != 0.0 && !(e + beta < 0.0))
      throw std::domain_error("dual operator: divergent tail integral");
    const double t_ts = c == 0.0 ? 0.0 : c * std::pow(ts, e + beta) / (-(e + beta));
    PowerTail t;
    t.start = ts;
    t.exponent = c == 0.0 ? 0.0 : e + beta;
    t.coef = c == 0.0 ? 0.0 : kappa * c / (-(e + beta));
    out.tail = t;
    out.decay_inf = t.exponent;
    append_breakpoint(out.breakpoints, ts);
    out.eval = [memo, fc, kappa, beta, ts, t_ts, tail_coef = t.coef,
                tail_exp = t.exponent, spec](double r) {
      if (r < 0.0) throw std::domain_error("dual operator: negative radius");
      if (r >= ts)
        return tail_coef == 0.0 ? 0.0 : tail_coef * std::pow(r, tail_exp);
      const double inner = memo->get(r, [&] {
        return integrate_profile(*fc, beta - 1.0, r, ts, spec);
      });
      return kappa * (inner + t_ts);
    };
    return out;
  }

  const double e = f.tail ? f.tail->exponent : f.decay_inf;
  if (!(e + beta < 0.0))
    throw std::domain_error("dual operator: divergent tail integral");
  auto eval = [memo, fc, kappa, beta, spec](double r) {
    if (r < 0.0) throw std::domain_error("dual operator: negative radius");
    return kappa * memo->get(r, [&] {
      return integrate_profile(*fc, beta - 1.0, r, kInf, spec);
    });
  };
  out.eval = eval;
  out.decay_inf = e + beta;
  if (f.tail) {
    PowerTail t;
    t.start = f.tail->start;
    t.exponent = e + beta;
    t.scale = [eval, ee = t.exponent](double r) {
      return eval(r) * std::pow(r, -ee);
    };
    t.scale_bound = kappa * f.tail->scale_bound / (-(e + beta));
    out.tail = t;
    append_breakpoint(out.breakpoints, t.start);
  }
  return out;
}

}  // namespace

FractionalOrder::FractionalOrder(double b, Dimension dim) : beta(b), n(dim) {
  if (!(b > 0.0 && b < dim.value()))
    throw std::domain_error("FractionalOrder: beta must lie in (0, n)");
}

RadialProfile hardy_radial(const RadialProfile& f, Dimension n,
                           const QuadratureSpec& spec) {
  return hardy_like(f, n, 0.0, spec);
}

RadialProfile fractional_hardy_radial(const RadialProfile& f,
                                      FractionalOrder order,
                                      const QuadratureSpec& spec) {
  return hardy_like(f, order.n, order.beta, spec);
}

RadialProfile dual_hardy_radial(const RadialProfile& f, Dimension n,
                                const QuadratureSpec& spec) {
  return dual_like(f, n, 0.0, spec);
}

RadialProfile dual_fractional_hardy_radial(const RadialProfile& f,
                                           FractionalOrder order,
                                           const QuadratureSpec& spec) {
  return dual_like(f, order.n, order.beta, spec);
}

RadialProfile spherical_average(const SeparableField& F, Dimension n,
                                const QuadratureSpec& spec) {
  const double mean = integrate_sphere(F.angular, n, spec) / sphere_measure(n);
  return scale_profile(F.radial, mean);
}

double hardy_direct_oracle(const SeparableField& F, double radius, Dimension n,
                           const QuadratureSpec& spec) {
  if (!(radius > 0.0))
    throw std::domain_error("hardy_direct_oracle: radius must be > 0");
  RadialProfile shell;
  shell.eval = [&F, &n, &spec](double s) {
    AngularProfile slice;
    slice.eval = [&F, s](double a1, double a2) { return F.value(s, a1, a2); };
    return integrate_sphere(slice, n, spec);
  };
  shell.breakpoints = F.radial.breakpoints;
  shell.decay_zero = F.radial.decay_zero;
  shell.decay_inf = F.radial.decay_inf;
  const double vol = integrate_profile(shell, n.value() - 1.0, 0.0, radius, spec);
  return vol / (ball_volume(n) * std::pow(radius, n.value()));
}

}  // namespace hardylab
