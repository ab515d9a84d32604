#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "partlim/asymptotics.hpp"
#include "partlim/constants.hpp"
#include "partlim/exp_integral.hpp"
#include "partlim/format.hpp"
#include "partlim/laplace.hpp"
#include "partlim/limit_function.hpp"
#include "partlim/partition.hpp"
#include "partlim/triangle.hpp"

namespace partlim {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

namespace detail {

inline void add(std::vector<CheckResult>& out, const std::string& name, bool pass,
                const std::string& detail) {
  out.push_back(CheckResult{name, pass, detail});
}

}  // namespace detail

// Cross-module consistency checks.  The quick set stays under a few
// seconds; the full set rebuilds the large tables and the deep piecewise
// structure and takes tens of seconds.  Every check is deterministic.
inline std::vector<CheckResult> run_selfchecks(bool full) {
  std::vector<CheckResult> out;

  // --- tables ---------------------------------------------------------
  {
    const int n_quick = 100;
    const ExactTriangle exact = build_exact_triangle(n_quick);
    const FloatTriangle flt = build_float_triangle(full ? 4000 : 1200);

    bool base_ok = true;
    for (int n = 1; n <= n_quick && base_ok; ++n) {
      if (exact.value(n, n) != Rational(1, n)) base_ok = false;
      if (n >= 2 && exact.value(n, 1) != Rational(1)) base_ok = false;
    }
    detail::add(out, "triangle base laws", base_ok,
                "diagonal 1/n and first column 1 up to n = " + std::to_string(n_quick));

    const int oracle_n = full ? 24 : 15;
    bool oracle_ok = true;
    for (int n = 1; n <= oracle_n && oracle_ok; ++n)
      for (int k = 1; k <= n && oracle_ok; ++k)
        if (brute_force_b(n, k) != exact.value(n, k)) oracle_ok = false;
    detail::add(out, "oracle agreement", oracle_ok,
                "enumeration vs recurrence, all (n, k) with n <= " + std::to_string(oracle_n));

    const bool spots = exact.row_total(3) == Rational(11, 6) &&
                       exact.row_total(4) == Rational(7, 3) &&
                       exact.value(4, 2) == Rational(3, 4);
    detail::add(out, "spot values", spots, "b(3) = 11/6, b(4) = 7/3, b(4, 2) = 3/4");

    double max_rel = 0.0;
    for (int n = 1; n <= n_quick; ++n)
      for (int k = 1; k <= n; ++k) {
        const double e = to_double(exact.value(n, k));
        max_rel = std::max(max_rel, std::abs(flt.value(n, k) - e) / e);
      }
    detail::add(out, "float fidelity", max_rel < 1e-10,
                "max rel error " + format_double(max_rel) + " over n <= " +
                    std::to_string(n_quick));

    // Growth of the row totals: e^gamma b(n)/n climbs toward 1 from
    // below; the distance to 1 must shrink along a doubling ladder.
    std::vector<int> ns = full ? std::vector<int>{500, 1000, 2000, 4000}
                               : std::vector<int>{150, 300, 600, 1200};
    const LehmerReport lr = lehmer_report(flt, ns);
    bool trend_ok = true;
    for (std::size_t i = 0; i < lr.rows.size(); ++i) {
      const double ratio = lr.rows[i].ratio;
      if (!(ratio > 1.0 / 1.1 && ratio < 1.0)) trend_ok = false;
      if (i > 0 && !(std::abs(ratio - 1.0) < std::abs(lr.rows[i - 1].ratio - 1.0)))
        trend_ok = false;
    }
    detail::add(out, "lehmer trend", trend_ok,
                "e^g b(n)/n in (1/1.1, 1) approaching 1 from below; last ratio " +
                    format_double(lr.rows.back().ratio));
  }

  // --- limit function ---------------------------------------------------
  {
    const PiecewiseLimit pw = build_piecewise(full ? kDefaultRMax : 8);

    const bool ii = interval_index(1.0) == 1 && interval_index(0.75) == 1 &&
                    interval_index(0.5) == 2 && interval_index(0.4) == 2 &&
                    interval_index(1.0 / 3.0) == 3 && interval_index(0.3) == 3 &&
                    interval_index(0.15) == 6;
    detail::add(out, "interval index", ii, "breakpoints land in the right pieces");

    double worst_closed = 0.0;
    const int pts = 40;
    for (int i = 1; i <= pts; ++i) {
      const double x1 = 0.5 + 0.5 * i / pts;
      worst_closed = std::max(worst_closed, std::abs(eval_F(pw, x1) - f1(x1)));
      const double x2 = 1.0 / 3.0 + (0.5 - 1.0 / 3.0) * i / pts;
      worst_closed = std::max(worst_closed, std::abs(eval_F(pw, x2) - f2(x2)));
    }
    detail::add(out, "closed forms", worst_closed < 1e-8,
                "quadrature vs f1/f2, worst |diff| = " + format_double(worst_closed));

    const double i1 = pw.interval_integrals.at(0);
    const double i1_expected = std::log(2.0) - 0.5;
    detail::add(out, "interval integral I1", std::abs(i1 - i1_expected) < 1e-10,
                "I_1 = " + format_double(i1) + " vs ln 2 - 1/2");

    if (full) {
      double worst_m = 0.0;
      for (int i = 1; i <= 200; ++i) {
        const double x = 1.0 / 6.0 + (1.0 - 1.0 / 6.0) * i / 200.0;
        worst_m = std::max(worst_m, std::abs(eval_F(pw, x) - eval_F_ode(pw, x)));
      }
      detail::add(out, "method agreement", worst_m < 1e-6,
                  "quadrature vs ODE on (1/6, 1], worst |diff| = " + format_double(worst_m));

      double worst_c = 0.0;
      for (int r = 2; r <= 6; ++r) {
        const double bp = 1.0 / r;
        const double left = eval_F(pw, bp);                      // interval r side
        const double right = detail::eval_piece(pw, r - 1, bp);  // interval r-1 side
        worst_c = std::max(worst_c, std::abs(left - right));
      }
      detail::add(out, "breakpoint continuity", worst_c < 1e-5,
                  "one-sided values at 1/r, r = 2..6, worst gap " + format_double(worst_c));
    }

    // --- reciprocal view / delay equation / transform -------------------
    const bool support_ok = G(pw, 0.0) == 0.0 && G(pw, 0.7) == 0.0 && G(pw, 1.0) == 0.0 &&
                            std::abs(G(pw, 1.5) - 0.5) < 1e-12 &&
                            std::abs(G(pw, 2.0) - 1.0) < 1e-11;
    detail::add(out, "reciprocal support", support_ok,
                "G vanishes on [0, 1], G(1.5) = 1/2, G(2) = 1");

    double worst_delay = 0.0;
    const std::vector<double> delay_xs =
        full ? std::vector<double>{1.5, 2.5, 3.25, 4.5, 5.75, 6.5} : std::vector<double>{1.5, 2.5};
    for (double x : delay_xs)
      worst_delay = std::max(worst_delay, std::abs(delay_ode_residual(pw, x)));
    detail::add(out, "delay equation", worst_delay < 1e-4,
                "worst residual " + format_double(worst_delay) + " over " +
                    std::to_string(delay_xs.size()) + " points");

    if (full) {
      const LaplaceCheck lc = closed_form_check(pw, {0.5, 1.0, 1.5, 2.0, 2.5, 3.0});
      const bool lap_ok = lc.max_rel_spread < 0.01 && lc.empirical_k > 0.9 &&
                          lc.empirical_k < 1.1;
      detail::add(out, "laplace closed form", lap_ok,
                  "invariant ratio spread " + format_double(lc.max_rel_spread) +
                      ", empirical K = " + format_double(lc.empirical_k));

      const LaplaceValue big = laplace_numeric(pw, 8.0, kDefaultXMax);
      const double sanity = big.value * 64.0 * std::exp(8.0);
      detail::add(out, "laplace large-t sanity", sanity > 0.8 && sanity < 1.05,
                  "t^2 e^t Ghat at t = 8 gives " + format_double(sanity));
    }
  }

  // --- exponential integral -------------------------------------------
  {
    const double e1_frozen = 0.21938393439552027;  // E1(1), series summed in extended precision
    const double s1 = e1_series(1.0);
    const double c1 = e1_continued_fraction(1.0);
    detail::add(out, "E1 reference value", std::abs(s1 - e1_frozen) < 1e-11,
                "series E1(1) = " + format_double(s1));
    const double seam = std::max(std::abs(s1 - c1), std::abs(e1_series(1.2) -
                                                             e1_continued_fraction(1.2)));
    detail::add(out, "E1 branch seam", seam < 5e-12,
                "series vs continued fraction near t = 1, worst gap " + format_double(seam));

    const double eg = std::exp(0.5772156649015329);
    detail::add(out, "gamma scaling bridge", std::abs(scale_by_e_gamma(1.0) - eg) < 1e-13,
                "e^gamma = " + format_double(scale_by_e_gamma(1.0)));
  }

  return out;
}

}  // namespace partlim
