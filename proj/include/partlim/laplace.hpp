#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "partlim/errors.hpp"
#include "partlim/exp_integral.hpp"
#include "partlim/limit_function.hpp"
#include "partlim/quadrature.hpp"

namespace partlim {

// Minimum t * x_max accepted by the transform: below this the truncated
// tail (~ e^{-t x_max}) is not negligible against the 1% constancy
// checks downstream.  7.5 admits the smallest required configuration
// (t = 0.5 at x_max = 15, e^{-7.5} ~ 5.5e-4) and rejects anything looser.
inline constexpr double kLaplaceTailGuard = 7.5;

inline constexpr double kDefaultXMax = 15.0;
inline constexpr double kDelayDefaultH = 1e-5;

// Reciprocal-variable view of the limit function: G(x) = F(1/x) for
// x > 1, and G identically 0 on [0, 1].  Continuous, kinks at integers.
inline double G(const PiecewiseLimit& pw, double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("G: x must be >= 0, got " + std::to_string(x));
  if (x <= 1.0 + kBreakpointSlack) return 0.0;
  const double inv = 1.0 / x;
  const int r = interval_index(inv);
  if (r > pw.r_max)
    throw computation_error("G: x = " + std::to_string(x) + " needs interval " +
                            std::to_string(r) + " but the structure was built to r_max = " +
                            std::to_string(pw.r_max));
  return detail::eval_piece(pw, r, inv);
}

// Residual of the delay differential equation
//   G(x) - (x - 1) G'(x) = G(x - 1)
// with G' taken as the symmetric difference at step h.  Refuses points
// whose stencil straddles a kink: the difference quotient is meaningless
// across the integer breakpoints.
inline double delay_ode_residual(const PiecewiseLimit& pw, double x, double h = kDelayDefaultH) {
  if (!(x > 1.0)) throw std::invalid_argument("delay_ode_residual: x must be > 1");
  if (!(h > 0.0)) throw std::invalid_argument("delay_ode_residual: h must be > 0");
  for (double p : {x - h, x, x + h, x - 1.0}) {
    if (std::abs(p - std::round(p)) <= h)
      throw computation_error("delay_ode_residual: stencil point " + std::to_string(p) +
                              " is within h of an integer kink; move x or shrink h");
  }
  const double dG = (G(pw, x + h) - G(pw, x - h)) / (2.0 * h);
  return G(pw, x) - (x - 1.0) * dG - G(pw, x - 1.0);
}

struct LaplaceValue {
  double value;       // integral over [1, x_max] plus the tail estimate
  double tail_bound;  // the added tail term itself: G(x_max) e^{-t x_max} / t
};

// Truncated Laplace transform of G:
//   Ghat(t) ~ integral_1^{x_max} e^{-t x} G(x) dx + G(x_max) e^{-t x_max} / t,
// the tail modelled as constant G beyond x_max (G approaches a plateau).
// Integration is adaptive per unit subinterval so the integrand's kinks
// at the integers land on panel boundaries.
inline LaplaceValue laplace_numeric(const PiecewiseLimit& pw, double t, double x_max = kDefaultXMax) {
  if (!(t > 0.0)) throw std::invalid_argument("laplace_numeric: t must be > 0");
  if (!(x_max > 1.0)) throw std::invalid_argument("laplace_numeric: x_max must be > 1");
  if (x_max > static_cast<double>(pw.r_max) + kBreakpointSlack)
    throw std::invalid_argument("laplace_numeric: x_max = " + std::to_string(x_max) +
                                " exceeds the built range r_max = " + std::to_string(pw.r_max));
  if (t * x_max < kLaplaceTailGuard)
    throw std::invalid_argument("laplace_numeric: t * x_max = " + std::to_string(t * x_max) +
                                " is below the truncation guard " +
                                std::to_string(kLaplaceTailGuard) +
                                "; the discarded tail would not be negligible");
  double total = 0.0;
  const auto integrand = [&pw, t](double x) { return std::exp(-t * x) * G(pw, x); };
  for (double lo = 1.0; lo < x_max; lo += 1.0) {
    const double hi = std::min(lo + 1.0, x_max);
    total += integrate(integrand, lo, hi, pw.quad);
  }
  const double tail = G(pw, x_max) * std::exp(-t * x_max) / t;
  return LaplaceValue{total + tail, tail};
}

struct LaplaceCheckRow {
  double t;
  double g_hat;            // truncated transform value
  double invariant_ratio;  // t^2 * exp(t + E1(t)) * g_hat; constant iff the closed form holds
};

struct LaplaceCheck {
  std::vector<LaplaceCheckRow> rows;
  double empirical_k = 0.0;      // mean invariant ratio
  double max_rel_spread = 0.0;   // max |ratio - mean| / mean
  double x_max = 0.0;
  int r_max = 0;
};

// Closed-form consistency check: if Ghat(t) = K t^{-2} exp(Ei(-t) - t)
// then t^2 exp(t + E1(t)) Ghat(t) == K for every t (Ei(-t) = -E1(t) for
// t > 0).  Evaluates the ratio on a grid and reports the empirical K and
// the relative spread around it.
inline LaplaceCheck closed_form_check(const PiecewiseLimit& pw, const std::vector<double>& ts,
                                      double x_max = kDefaultXMax) {
  if (ts.empty()) throw std::invalid_argument("closed_form_check: empty t grid");
  LaplaceCheck out;
  out.x_max = x_max;
  out.r_max = pw.r_max;
  for (double t : ts) {
    const LaplaceValue v = laplace_numeric(pw, t, x_max);
    const double ratio = t * t * std::exp(t + exp_integral_E1(t)) * v.value;
    out.rows.push_back(LaplaceCheckRow{t, v.value, ratio});
  }
  double mean = 0.0;
  for (const auto& r : out.rows) mean += r.invariant_ratio;
  mean /= static_cast<double>(out.rows.size());
  out.empirical_k = mean;
  double spread = 0.0;
  for (const auto& r : out.rows)
    spread = std::max(spread, std::abs(r.invariant_ratio - mean) / std::abs(mean));
  out.max_rel_spread = spread;
  return out;
}

}  // namespace partlim
