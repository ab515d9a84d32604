#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "partlim/chebyshev.hpp"
#include "partlim/errors.hpp"
#include "partlim/quadrature.hpp"

namespace partlim {

inline constexpr int kDefaultRMax = 20;
inline constexpr int kDefaultModelDegree = 64;
inline constexpr int kOdeSteps = 2048;

// Slack for breakpoint classification and the closed domains of the
// closed forms: the limit function is continuous, so admitting the left
// breakpoint of each interval is harmless and is needed when seeding the
// ODE at x0 = 1/r.
inline constexpr double kBreakpointSlack = 1e-12;

// Index r of the interval (1/(r+1), 1/r] containing x; points within
// kBreakpointSlack of a breakpoint 1/r classify as the interval whose
// right endpoint they are.
inline int interval_index(double x) {
  if (!(x > 0.0) || x > 1.0 + kBreakpointSlack)
    throw std::invalid_argument("interval_index: x must lie in (0, 1], got " +
                                std::to_string(x));
  const int r = static_cast<int>(std::floor(1.0 / x + kBreakpointSlack));
  return std::max(r, 1);
}

// Closed form on [1/2, 1]: F(x) = (1 - x)/x.
inline double f1(double x) {
  if (x < 0.5 - kBreakpointSlack || x > 1.0 + kBreakpointSlack)
    throw std::invalid_argument("f1: x outside [1/2, 1], got " + std::to_string(x));
  return (1.0 - x) / x;
}

// Closed form on [1/3, 1/2]: F(x) = (2 - 3x)/x - ((1-x)/x) * ln((1-x)/x).
inline double f2(double x) {
  if (x < 1.0 / 3.0 - kBreakpointSlack || x > 0.5 + kBreakpointSlack)
    throw std::invalid_argument("f2: x outside [1/3, 1/2], got " + std::to_string(x));
  const double u = (1.0 - x) / x;
  return (2.0 - 3.0 * x) / x - u * std::log(u);
}

// Piecewise evaluator of the scaling limit F on (1/(r_max+1), 1].
//
// F is defined interval by interval: on (1/(r+1), 1/r],
//
//   F_r(x) = (1-x)/x * [ 1 - ( I_1 + ... + I_{r-2}
//                             + integral_{x/(1-x)}^{1/(r-1)} F_{r-1} ) ],
//
// with F_1 = f1 and I_s the integral of F over the s-th interval.  A
// literal implementation re-evaluates F_{r-1} inside the integrand the
// same way, which costs Theta(c^r) function evaluations and is hopeless
// past r ~ 6.  The structure built here therefore keeps, per interval, a
// Chebyshev interpolant of F_s fitted bottom-up; eval_F still performs
// its single outer integral adaptively at every call, but the integrand
// reads F_{r-1} from the cached interpolant.  Consistency of the cache
// against the pure recursion is checked in the test suite.
struct PiecewiseLimit {
  int r_max = kDefaultRMax;
  QuadratureConfig quad;
  std::vector<double> interval_integrals;   // I_s, s = 1 .. r_max-1 at [s-1]
  std::vector<double> cumulative;           // cumulative[s] = I_1 + ... + I_s
  std::vector<ChebyshevModel> pieces;       // model of F_s on [1/(s+1), 1/s] at [s-1]

  // I_1 + ... + I_{upto}; upto = 0 gives 0.
  double cumulative_integral(int upto) const {
    if (upto < 0 || upto >= static_cast<int>(cumulative.size()))
      throw std::invalid_argument("PiecewiseLimit: cumulative integral up to " +
                                  std::to_string(upto) + " was not built");
    return cumulative[static_cast<std::size_t>(upto)];
  }
};

namespace detail {

// Direct recurrence evaluation of F_r(x) for x in interval r, with the
// integrand served by the already-built interpolant of F_{r-1} (or f1
// when r = 2).  The outer integral is always done adaptively here; this
// is the production eval path.
inline double eval_piece(const PiecewiseLimit& pw, int r, double x) {
  if (r == 1) return f1(x);
  const double hi = 1.0 / (r - 1);
  double y = x / (1.0 - x);  // lies in [1/r, 1/(r-1)] up to roundoff
  y = std::clamp(y, 1.0 / r, hi);
  double inner;
  if (r == 2) {
    inner = integrate([](double t) { return f1(t); }, y, hi, pw.quad);
  } else {
    const ChebyshevModel& m = pw.pieces[static_cast<std::size_t>(r - 2)];
    inner = integrate([&m](double t) { return m(t); }, y, hi, pw.quad);
  }
  const double tail = pw.cumulative_integral(r - 2) + inner;
  return (1.0 - x) / x * (1.0 - tail);
}

}  // namespace detail

// Builds the piecewise structure out to interval r_max: interpolants of
// F_1 .. F_{r_max} and the interval integrals I_1 .. I_{r_max - 1}, each
// I_s computed by adaptive quadrature of the piece evaluator over
// (1/(s+1), 1/s].  Build order is bottom-up; a quadrature failure
// propagates as computation_error naming the offending interval.
inline PiecewiseLimit build_piecewise(int r_max = kDefaultRMax, QuadratureConfig quad = {},
                                      int degree = kDefaultModelDegree) {
  if (r_max < 1) throw std::invalid_argument("build_piecewise: r_max must be >= 1");
  PiecewiseLimit pw;
  pw.r_max = r_max;
  pw.quad = quad;
  pw.cumulative.assign(1, 0.0);
  pw.pieces.reserve(static_cast<std::size_t>(r_max));
  for (int s = 1; s <= r_max; ++s) {
    const double lo = 1.0 / (s + 1);
    const double hi = 1.0 / s;
    if (s == 1) {
      pw.pieces.push_back(ChebyshevModel::fit([](double x) { return f1(x); }, lo, hi, degree));
    } else if (s == 2) {
      pw.pieces.push_back(ChebyshevModel::fit([](double x) { return f2(x); }, lo, hi, degree));
    } else {
      // Sample the recurrence; the inner integral of the previous piece
      // is exact (antiderivative of its interpolant), so fitting costs
      // O(degree) evaluations rather than a quadrature per sample.
      const ChebyshevModel& prev = pw.pieces[static_cast<std::size_t>(s - 2)];
      const double cum = pw.cumulative_integral(s - 2);
      const double prev_hi = 1.0 / (s - 1);
      pw.pieces.push_back(ChebyshevModel::fit(
          [&prev, cum, s, prev_hi](double x) {
            double y = x / (1.0 - x);
            y = std::clamp(y, 1.0 / s, prev_hi);
            const double tail = cum + prev.integral_to_upper(y);
            return (1.0 - x) / x * (1.0 - tail);
          },
          lo, hi, degree));
    }
    if (s <= r_max - 1) {
      const double i_s = integrate([&pw, s](double t) { return detail::eval_piece(pw, s, t); },
                                   lo, hi, quad);
      pw.interval_integrals.push_back(i_s);
      pw.cumulative.push_back(pw.cumulative.back() + i_s);
    }
  }
  return pw;
}

// F(x) by the recurrence: closed form on interval 1, one adaptive
// integral per call elsewhere.  Refuses x outside (0, 1] and x below the
// built range.
inline double eval_F(const PiecewiseLimit& pw, double x) {
  const int r = interval_index(x);
  if (r > pw.r_max)
    throw computation_error("eval_F: x = " + std::to_string(x) + " lies in interval " +
                            std::to_string(r) + " but the structure was built to r_max = " +
                            std::to_string(pw.r_max));
  return detail::eval_piece(pw, r, x);
}

// F(x) by integrating the equivalent ODE for u(x) = x/(1-x) * F(x),
//
//   u'(x) = F_{r-1}(x/(1-x)) / (1-x)^2,
//
// from the right breakpoint x0 = 1/r down to x with fixed-step classical
// fourth-order Runge-Kutta (kOdeSteps steps), seeded by continuity:
// u(x0) = x0/(1-x0) * F(x0) = 1/(r-1) * F_{r-1}(1/r).  Interval 1 falls
// back to the closed form (there is no shallower piece to integrate).
inline double eval_F_ode(const PiecewiseLimit& pw, double x) {
  const int r = interval_index(x);
  if (r > pw.r_max)
    throw computation_error("eval_F_ode: x = " + std::to_string(x) + " lies in interval " +
                            std::to_string(r) + " but the structure was built to r_max = " +
                            std::to_string(pw.r_max));
  if (r == 1) return f1(x);
  const double x0 = 1.0 / r;
  const double prev_hi = 1.0 / (r - 1);
  const auto rhs = [&pw, r, prev_hi](double t) {
    double y = t / (1.0 - t);
    y = std::clamp(y, 1.0 / r, prev_hi);
    const double v = (r - 1 == 1) ? f1(y) : detail::eval_piece(pw, r - 1, y);
    return v / ((1.0 - t) * (1.0 - t));
  };
  double u = detail::eval_piece(pw, r - 1, x0) / (r - 1);
  const double h = (x - x0) / kOdeSteps;  // negative: integrating downward
  double t = x0;
  for (int i = 0; i < kOdeSteps; ++i) {
    const double k1 = rhs(t);
    const double k2 = rhs(t + 0.5 * h);
    const double k3 = k2;  // the right side has no u-dependence
    const double k4 = rhs(t + h);
    u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = x0 + (i + 1) * h;
  }
  return u * (1.0 - x) / x;
}

}  // namespace partlim
