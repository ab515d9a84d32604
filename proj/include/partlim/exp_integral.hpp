#pragma once

#include <cmath>
#include <string>

#include "partlim/constants.hpp"
#include "partlim/errors.hpp"

namespace partlim {

// E1(t) for t > 0 via the alternating power series
//   E1(t) = -gamma - ln t + sum_{k>=1} (-1)^{k+1} t^k / (k * k!),
// accurate and fast for small t (terms decay like t^k/k!).
inline double e1_series(double t, int max_terms = 60) {
  if (!(t > 0.0)) throw std::invalid_argument("e1_series: t must be > 0");
  double term = 1.0;  // (-t)^k / k!
  double sum = 0.0;
  for (int k = 1; k <= max_terms; ++k) {
    term *= -t / k;
    const double contrib = -term / k;  // (-1)^{k+1} t^k / (k * k!)
    sum += contrib;
    if (std::abs(contrib) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return -euler_gamma() - std::log(t) + sum;
}

// E1(t) for t > 0 via the modified Lentz evaluation of the continued
// fraction
//   E1(t) = e^{-t} / (t + 1 - 1^2/(t + 3 - 2^2/(t + 5 - ...))),
// which converges quickly for t >= 1 and avoids the series' cancellation
// for large t.
inline double e1_continued_fraction(double t, double tol = 1e-15, int max_iter = 300) {
  if (!(t > 0.0)) throw std::invalid_argument("e1_continued_fraction: t must be > 0");
  const double tiny = 1e-300;
  double b = t + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= max_iter; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = b + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < tol) return std::exp(-t) * h;
  }
  throw computation_error("e1_continued_fraction: no convergence for t = " + std::to_string(t));
}

// Exponential integral E1(t), t > 0.  Series below the switchover,
// continued fraction above; the two branches agree to ~1e-15 at the
// seam, which the test suite pins down.
inline double exp_integral_E1(double t) {
  if (!(t > 0.0))
    throw std::invalid_argument("exp_integral_E1: defined here only for t > 0, got " +
                                std::to_string(t));
  return (t <= 1.0) ? e1_series(t) : e1_continued_fraction(t);
}

}  // namespace partlim
