#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "partlim/constants.hpp"
#include "partlim/errors.hpp"
#include "partlim/limit_function.hpp"
#include "partlim/triangle.hpp"

namespace partlim {

// A horizontal coordinate x in (0, 1] that remembers whether it was
// given as an exact ratio p/q or as a decimal, because the two need
// different floor semantics for k = floor(x * n): exact integer
// arithmetic for ratios, an epsilon-nudged floor for decimals (so that
// 0.3 * 1000 = 299.999... still floors to 300).
struct XValue {
  double value = 0.0;
  bool is_ratio = false;
  std::int64_t num = 0;
  std::int64_t den = 1;

  static XValue from_double(double v) {
    XValue x;
    x.value = v;
    return x;
  }

  static XValue from_ratio(std::int64_t p, std::int64_t q) {
    if (q <= 0) throw std::invalid_argument("XValue: denominator must be > 0");
    XValue x;
    x.is_ratio = true;
    x.num = p;
    x.den = q;
    x.value = static_cast<double>(p) / static_cast<double>(q);
    return x;
  }

  // Accepts "p/q" or a decimal literal.
  static XValue parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
      if (slash != std::string::npos) {
        const std::int64_t p = std::stoll(s.substr(0, slash));
        const std::int64_t q = std::stoll(s.substr(slash + 1));
        return from_ratio(p, q);
      }
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing characters");
      return from_double(v);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("XValue: cannot parse '" + s + "'");
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("XValue: value out of range in '" + s + "'");
    }
  }

  std::int64_t floor_mul(int n) const {
    if (is_ratio) return (num * static_cast<std::int64_t>(n)) / den;
    return static_cast<std::int64_t>(std::floor(value * n + 1e-12));
  }
};

struct LehmerRow {
  int n;
  double b_n;    // row total of the float table
  double ratio;  // e^gamma * b_n / n; approaches 1 as n grows
};

struct LehmerReport {
  std::vector<LehmerRow> rows;
};

// Growth diagnostic for the row totals: b(n) ~ e^{-gamma} n, so the
// reported ratio e^gamma b(n)/n tends to 1.  Computation shows the
// approach is from below on this scale (the ratio dips to ~0.907 near
// n = 13 and climbs monotonically toward 1 afterwards).
inline LehmerReport lehmer_report(const FloatTriangle& table, const std::vector<int>& ns) {
  if (ns.empty()) throw std::invalid_argument("lehmer_report: empty n list");
  LehmerReport out;
  out.rows.reserve(ns.size());
  for (int n : ns) {
    if (n < 1 || n > table.n_max())
      throw std::invalid_argument("lehmer_report: n = " + std::to_string(n) +
                                  " outside the built table [1, " +
                                  std::to_string(table.n_max()) + "]");
    const double b_n = table.row_total(n);
    out.rows.push_back(LehmerRow{n, b_n, scale_by_e_gamma(b_n) / n});
  }
  return out;
}

struct ConvergenceRow {
  double x;
  int n;
  std::int64_t k;  // floor(x * n)
  double scaled;   // e^gamma * b(n, k)
  double limit;    // F(x)
  double abs_error;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  std::vector<std::string> warnings;  // skipped combinations (k = 0)
};

// Convergence of the scaled table entries toward the limit function:
// e^gamma * b(n, floor(x n)) -> F(x).  Combinations where floor(x n)
// is 0 are skipped with a warning rather than refused.
inline ConvergenceReport convergence_report(const FloatTriangle& table, const PiecewiseLimit& pw,
                                            const std::vector<XValue>& xs,
                                            const std::vector<int>& ns) {
  if (xs.empty()) throw std::invalid_argument("convergence_report: empty x list");
  if (ns.empty()) throw std::invalid_argument("convergence_report: empty n list");
  ConvergenceReport out;
  for (const XValue& x : xs) {
    if (!(x.value > 0.0) || x.value > 1.0 + kBreakpointSlack)
      throw std::invalid_argument("convergence_report: x must lie in (0, 1]");
    const double limit = eval_F(pw, x.value);
    for (int n : ns) {
      if (n < 1 || n > table.n_max())
        throw std::invalid_argument("convergence_report: n = " + std::to_string(n) +
                                    " outside the built table [1, " +
                                    std::to_string(table.n_max()) + "]");
      const std::int64_t k = x.floor_mul(n);
      if (k == 0) {
        out.warnings.push_back("skipped x = " + std::to_string(x.value) + ", n = " +
                               std::to_string(n) + ": floor(x n) = 0 has no table entry");
        continue;
      }
      const double scaled = scale_by_e_gamma(table.value(n, static_cast<int>(k)));
      out.rows.push_back(
          ConvergenceRow{x.value, n, k, scaled, limit, std::abs(scaled - limit)});
    }
  }
  return out;
}

}  // namespace partlim
