#include "hardylab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace hardylab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// 15-point Kronrod / 7-point Gauss pair on [-1,1].  Odd-index abscissae are
// the embedded Gauss nodes.
constexpr double kXgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
constexpr double kWg[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

struct Panel {
  double a, b, val, err;
};

struct PanelLess {
  bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

template <class F>
Panel gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double rk = kWgk[7] * fc;
  double rg = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double s = f(c - dx) + f(c + dx);
    rk += kWgk[i] * s;
    if (i & 1) rg += kWg[i / 2] * s;
  }
  return Panel{a, b, rk * h, std::abs((rk - rg) * h)};
}

// Globally adaptive bisection over the given cut points.  `ext_ref` widens the
// relative-tolerance reference when the piece being integrated is known to be
// a small part of a larger total.
template <class F>
double adaptive(const F& f, const std::vector<double>& cuts,
                const QuadratureSpec& spec, int& budget, double ext_ref) {
  std::priority_queue<Panel, std::vector<Panel>, PanelLess> heap;
  double total = 0.0, errsum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i + 1] > cuts[i])) continue;
    Panel p = gk15(f, cuts[i], cuts[i + 1]);
    total += p.val;
    errsum += p.err;
    heap.push(p);
  }
  double stuck = 0.0;
  while (!heap.empty()) {
    const double tol = std::max(
        spec.abs_tol, spec.rel_tol * std::max(std::abs(total), ext_ref));
    if (errsum <= tol) break;
    Panel p = heap.top();
    heap.pop();
    const double width = p.b - p.a;
    if (!(width > std::abs(p.a) * 1e-15 + 1e-300)) {
      errsum -= p.err;
      stuck += p.err;
      if (stuck > tol)
        throw QuadratureError("quadrature stalled on an unresolvable interval");
      continue;
    }
    if (--budget < 0)
      throw QuadratureError("max_subdivisions exceeded before convergence");
    const double m = 0.5 * (p.a + p.b);
    Panel l = gk15(f, p.a, m);
    Panel r = gk15(f, m, p.b);
    total += l.val + r.val - p.val;
    errsum += l.err + r.err - p.err;
    heap.push(l);
    heap.push(r);
  }
  return total;
}

std::vector<double> make_cuts(const RadialProfile& f, double lo, double hi) {
  std::vector<double> cuts;
  cuts.push_back(lo);
  for (double b : f.breakpoints)
    if (b > lo && b < hi) cuts.push_back(b);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

// Geometric pre-split of a (possibly very long) interval in log coordinates.
std::vector<double> log_cuts(double u0, double u1) {
  std::vector<double> cuts{u0};
  double step = 1.0;
  double u = u0;
  while (u + step < u1) {
    u += step;
    cuts.push_back(u);
    step *= 2.0;
  }
  cuts.push_back(u1);
  return cuts;
}

// C such that |f(r)| <= C * r^expo plausibly holds near r0 (probing toward
// infinity or toward zero).  Used only to size truncation radii.
double probe_envelope(const RadialProfile& f, double expo, double r0,
                      bool toward_inf) {
  double c = 0.0;
  for (int k = 0; k <= 24; ++k) {
    const double r = toward_inf ? r0 * std::pow(2.0, 0.5 * k)
                                : r0 * std::pow(2.0, -0.5 * k);
    if (!(r > 0.0) || !std::isfinite(r)) break;
    const double v = std::abs(f.eval(r)) * std::pow(r, -expo);
    if (std::isfinite(v)) c = std::max(c, v);
  }
  return 2.0 * c;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(tail_tol > 0.0) ||
      max_subdivisions < 1)
    throw std::domain_error("QuadratureSpec: tolerances must be positive and "
                            "max_subdivisions >= 1");
}

double PowerTail::bound() const { return pure() ? std::abs(coef) : scale_bound; }

AngularProfile AngularProfile::constant(double c) {
  AngularProfile a;
  a.eval = [c](double, double) { return c; };
  a.is_constant = true;
  a.constant_value = c;
  return a;
}

AngularProfile AngularProfile::circle(std::function<double(double)> f) {
  AngularProfile a;
  a.eval = [g = std::move(f)](double phi, double) { return g(phi); };
  return a;
}

AngularProfile AngularProfile::sphere(std::function<double(double, double)> f) {
  AngularProfile a;
  a.eval = std::move(f);
  return a;
}

double integrate_profile(const RadialProfile& f, double weight, double a,
                         double b, const QuadratureSpec& spec) {
  spec.validate();
  if (!(a >= 0.0)) throw std::domain_error("integrate_profile: a must be >= 0");
  if (b <= a) return 0.0;
  if (!f.eval) throw std::domain_error("integrate_profile: profile has no eval");

  int budget = spec.max_subdivisions;
  const bool infinite = std::isinf(b);
  const double ts = f.tail ? f.tail->start : kInf;

  // Where direct panel integration ends and tail handling begins.
  enum class TailMode { none, exact, probe };
  TailMode mode = TailMode::none;
  double body_end = b;
  if (f.tail && b > ts) {
    mode = TailMode::exact;
    body_end = std::max(a, ts);
  } else if (infinite) {
    mode = TailMode::probe;
    double bp_max = 0.0;
    for (double bp : f.breakpoints) bp_max = std::max(bp_max, bp);
    body_end = std::max({1.0, a, 2.0 * bp_max});
  }

  const auto g = [&f, weight](double r) {
    return f.eval(r) * std::pow(r, weight);
  };
  const auto gu = [&f, weight](double u) {
    const double r = std::exp(u);
    return f.eval(r) * std::exp((weight + 1.0) * u);
  };

  // Integrable singularity at the origin is deferred until a reference value
  // is known, then done in log coordinates.
  const bool singular_head =
      (a == 0.0) && (f.decay_zero + weight < 0.0) && body_end > 0.0;
  if (singular_head && !(f.decay_zero + weight + 1.0 > 1e-13))
    throw std::domain_error("integrate_profile: integrand divergent at origin");

  std::vector<double> cuts = make_cuts(f, a, body_end);
  double head_cut = cuts.size() > 1 ? cuts[1] : body_end;
  if (singular_head) cuts.erase(cuts.begin());  // drop [0, first cut]

  double body = 0.0;
  if (cuts.size() > 1) body = adaptive(g, cuts, spec, budget, 0.0);

  double ref = std::max(std::abs(body), spec.abs_tol);

  double tail = 0.0;
  if (mode == TailMode::exact) {
    const double lo = std::max(a, ts);
    const double e = f.tail->exponent;
    const double s = e + weight + 1.0;
    if (f.tail->pure()) {
      const double c = f.tail->coef;
      if (c != 0.0) {
        if (infinite) {
          if (s >= 0.0)
            throw std::domain_error("integrate_profile: divergent power tail");
          tail = -c * std::pow(lo, s) / s;
        } else if (std::abs(s) < 1e-14) {
          tail = c * std::log(b / lo);
        } else {
          tail = c * (std::pow(b, s) - std::pow(lo, s)) / s;
        }
      }
    } else {
      const double bound = f.tail->scale_bound;
      double u1;
      if (infinite) {
        if (s >= 0.0)
          throw std::domain_error("integrate_profile: divergent tail");
        const double tail_cap = bound * std::pow(lo, s) / (-s);
        const double target =
            spec.tail_tol * std::max(ref, tail_cap) * (-s) /
            std::max(bound, 1e-300);
        u1 = std::log(target) / s;  // s < 0, target < 1 in practice
        u1 = std::max(u1, std::log(lo) + 1.0);
      } else {
        u1 = std::log(b);
      }
      const auto scale = f.tail->scale;
      const auto tu = [&scale, e, weight](double u) {
        return scale(std::exp(u)) * std::exp((e + weight + 1.0) * u);
      };
      tail = adaptive(tu, log_cuts(std::log(lo), u1), spec, budget, ref);
    }
  } else if (mode == TailMode::probe) {
    const double s = f.decay_inf + weight + 1.0;
    if (s >= 0.0)
      throw std::domain_error(
          "integrate_profile: decay metadata implies a divergent tail");
    const double c = probe_envelope(f, f.decay_inf, body_end, true);
    if (c > 0.0) {
      // The probed envelope constant can overshoot badly for super-power
      // decay, so the truncation target is sized against the body integral
      // only; overshooting just lengthens the (cheap) log-domain interval.
      const double target = spec.tail_tol * ref * (-s) / c;
      double u1 = std::log(target) / s;
      u1 = std::max(u1, std::log(body_end) + 1.0);
      tail = adaptive(gu, log_cuts(std::log(body_end), u1), spec, budget, ref);
    }
  }
  ref = std::max(ref, std::abs(body + tail));

  double head = 0.0;
  if (singular_head) {
    const double c0 = probe_envelope(f, f.decay_zero, head_cut, false);
    if (c0 > 0.0) {
      const double sh = f.decay_zero + weight + 1.0;  // > 0
      double eps0 =
          std::pow(spec.tail_tol * std::max(ref, spec.abs_tol) * sh / c0,
                   1.0 / sh);
      eps0 = std::min(eps0, 0.5 * head_cut);
      std::vector<double> hcuts = log_cuts(std::log(eps0), std::log(head_cut));
      head = adaptive(gu, hcuts, spec, budget, ref);
    }
  }

  return body + tail + head;
}

double integrate_radial(const RadialProfile& f, Dimension n,
                        const QuadratureSpec& spec) {
  return integrate_profile(f, n.value() - 1.0, 0.0, kInf, spec);
}

double cumulative_radial(const RadialProfile& f, Dimension n, double r,
                         const QuadratureSpec& spec) {
  if (r == 0.0) return 0.0;
  if (!(r > 0.0)) throw std::domain_error("cumulative_radial: r must be >= 0");
  return integrate_profile(f, n.value() - 1.0, 0.0, r, spec);
}

namespace {

void legendre_nodes(int m, std::vector<double>& x, std::vector<double>& w) {
  x.assign(m, 0.0);
  w.assign(m, 0.0);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (m + 0.5));
    double p1 = 0.0, dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      p1 = t;
      for (int j = 2; j <= m; ++j) {
        const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = -t;
    x[m - 1 - i] = t;
    w[i] = w[m - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

}  // namespace

double integrate_sphere(const AngularProfile& a, Dimension n,
                        const QuadratureSpec& spec) {
  spec.validate();
  if (!a.eval && !a.is_constant)
    throw std::domain_error("integrate_sphere: profile has no eval");
  if (a.is_constant) return a.constant_value * sphere_measure(n);
  const int nd = n.value();
  if (nd == 2) {
    // Trapezoid rule on the circle: spectrally accurate for periodic data.
    auto trap = [&a](int N) {
      double s = 0.0;
      for (int k = 0; k < N; ++k) s += a.eval(2.0 * kPi * k / N, 0.0);
      return s * 2.0 * kPi / N;
    };
    double prev = trap(16);
    for (int N = 32; N <= (1 << 21); N *= 2) {
      const double cur = trap(N);
      if (std::abs(cur - prev) <=
          std::max(spec.abs_tol, 0.5 * spec.rel_tol * std::abs(cur)))
        return cur;
      prev = cur;
    }
    throw QuadratureError("integrate_sphere: circle rule did not converge");
  }
  if (nd == 3) {
    // Gauss-Legendre in cos(theta) x trapezoid in azimuth.
    std::vector<double> x, w;
    auto rule = [&](int m, int N) {
      legendre_nodes(m, x, w);
      double s = 0.0;
      for (int i = 0; i < m; ++i) {
        const double theta = std::acos(x[i]);
        double ring = 0.0;
        for (int k = 0; k < N; ++k) ring += a.eval(theta, 2.0 * kPi * k / N);
        s += w[i] * ring * 2.0 * kPi / N;
      }
      return s;
    };
    double prev = rule(8, 16);
    for (int m = 16, N = 32; m <= 4096; m *= 2, N *= 2) {
      const double cur = rule(m, N);
      if (std::abs(cur - prev) <=
          std::max(spec.abs_tol, 0.5 * spec.rel_tol * std::abs(cur)))
        return cur;
      prev = cur;
    }
    throw QuadratureError("integrate_sphere: product rule did not converge");
  }
  throw std::domain_error("integrate_sphere: only n in {2,3} is supported");
}

RadialProfile pow_abs_profile(const RadialProfile& f, double p) {
  if (!(p > 0.0)) throw std::domain_error("pow_abs_profile: p must be > 0");
  RadialProfile g;
  g.eval = [base = f.eval, p](double r) {
    const double v = std::abs(base(r));
    return v == 0.0 ? 0.0 : std::pow(v, p);
  };
  g.breakpoints = f.breakpoints;
  g.decay_zero = p * f.decay_zero;
  g.decay_inf = p * f.decay_inf;
  if (f.tail) {
    PowerTail t;
    t.start = f.tail->start;
    t.exponent = p * f.tail->exponent;
    if (f.tail->pure()) {
      t.coef = f.tail->coef == 0.0 ? 0.0 : std::pow(std::abs(f.tail->coef), p);
    } else {
      t.scale = [sc = f.tail->scale, p](double r) {
        const double v = std::abs(sc(r));
        return v == 0.0 ? 0.0 : std::pow(v, p);
      };
      t.scale_bound = std::pow(f.tail->scale_bound, p);
    }
    g.tail = t;
  }
  return g;
}

}  // namespace hardylab
