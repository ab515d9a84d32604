#pragma once

#include <atomic>
#include <cmath>

namespace partlim {

// Euler-Mascheroni constant, rounded to nearest double.
inline constexpr double kEulerGamma = 0.5772156649015329;

namespace detail {
inline std::atomic<double>& gamma_offset() {
  static std::atomic<double> off{0.0};
  return off;
}
}  // namespace detail

// Diagnostic hook: shifts the value returned by euler_gamma() by eps.
// Used by the self-check harness to demonstrate that downstream
// consistency checks are actually sensitive to the constant; production
// code paths never set this.
inline void set_gamma_perturbation(double eps) { detail::gamma_offset().store(eps); }
inline double gamma_perturbation() { return detail::gamma_offset().load(); }

inline double euler_gamma() { return kEulerGamma + detail::gamma_offset().load(); }

inline double exp_euler_gamma() { return std::exp(euler_gamma()); }

// e^gamma * v; the bridge between the partition statistic scale and the
// limit-function scale.
inline double scale_by_e_gamma(double v) { return exp_euler_gamma() * v; }

}  // namespace partlim
