#pragma once

#include <cmath>
#include <string>

#include "partlim/errors.hpp"

namespace partlim {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  int max_depth = 40;
};

namespace detail {

inline double simpson_rule(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// Recursive adaptive Simpson with Richardson extrapolation.  The 15x
// factor on the acceptance test comes from the h^4 order of the rule:
// |S_fine - S_coarse| ~ 15 * (true error of S_fine).
template <typename F>
double adaptive_step(F&& f, double a, double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth, int max_depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_rule(a, m, fa, flm, fm);
  const double right = simpson_rule(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth >= max_depth)
    throw computation_error("integrate: no convergence on [" + std::to_string(a) + ", " +
                            std::to_string(b) + "] at depth " + std::to_string(depth));
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1, max_depth) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

// Adaptive Simpson integral of f over [a, b] to absolute tolerance
// cfg.abs_tol.  Refuses (computation_error) if the interval subdivision
// exceeds cfg.max_depth without meeting the tolerance.
template <typename F>
double integrate(F&& f, double a, double b, QuadratureConfig cfg = {}) {
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw std::invalid_argument("integrate: endpoints must be finite");
  if (a > b) throw std::invalid_argument("integrate: need a <= b");
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = detail::simpson_rule(a, b, fa, fm, fb);
  return detail::adaptive_step(f, a, fa, b, fb, m, fm, whole, cfg.abs_tol, 0, cfg.max_depth);
}

}  // namespace partlim
