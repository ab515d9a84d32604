#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "partlim/errors.hpp"
#include "partlim/rational.hpp"

namespace partlim {

// Table caps.  The exact table's entries grow thousand-digit denominators
// near n = 500 (lcm-like blowup); the float table is O(n^2) memory, about
// 200 MB of doubles at n = 5000 counting the prefix rows.
inline constexpr int kExactCap = 500;
inline constexpr int kFloatBudget = 5000;

namespace detail {

// Flat storage offsets for a 1-based triangle: row n holds entries
// k = 1..n at off(n) + (k-1), and prefix row n holds P(n, 0..n) at
// poff(n) + k.
inline std::size_t tri_offset(int n) {
  return static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n) / 2;
}
inline std::size_t prefix_offset(int n) {
  return static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n + 2) / 2;
}

inline void check_query(const char* who, int n_max, int n, int k) {
  if (n < 1 || n > n_max)
    throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(n) +
                                " outside the built range [1, " + std::to_string(n_max) + "]");
  if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be >= 1");
}

}  // namespace detail

// Triangle of the weighted partition counts b(n, k) = sum of 1/(product
// of parts) over partitions of n with largest part exactly k, built by
// the prefix-sum form of the recurrence
//
//     b(n, k) = (1/k) * sum_{i=1}^{min(k, n-k)} b(n-k, i),   b(n, n) = 1/n,
//
// which costs O(1) big-number operations per entry once each row's
// prefix sums are kept.
class ExactTriangle {
 public:
  explicit ExactTriangle(int n_max) : n_max_(n_max) {
    entries_.resize(detail::tri_offset(n_max + 1));
    prefix_.resize(detail::prefix_offset(n_max + 1));
    for (int n = 1; n <= n_max; ++n) {
      const std::size_t off = detail::tri_offset(n);
      for (int k = 1; k < n; ++k) {
        const int m = n - k;
        entries_[off + k - 1] = prefix(m, std::min(k, m)) / k;
      }
      entries_[off + n - 1] = Rational(1, n);
      const std::size_t poff = detail::prefix_offset(n);
      prefix_[poff] = Rational(0);
      for (int k = 1; k <= n; ++k)
        prefix_[poff + k] = prefix_[poff + k - 1] + entries_[off + k - 1];
    }
  }

  int n_max() const { return n_max_; }

  // b(n, k); returns 0 for k > n (no partition of n has largest part > n).
  const Rational& value(int n, int k) const {
    detail::check_query("ExactTriangle::value", n_max_, n, k);
    if (k > n) return zero_;
    return entries_[detail::tri_offset(n) + k - 1];
  }

  // P(n, k) = sum_{i=1}^{k} b(n, i); prefix(n, n) is the row total.
  const Rational& prefix(int n, int k) const {
    detail::check_query("ExactTriangle::prefix", n_max_, n, std::max(k, 1));
    return prefix_[detail::prefix_offset(n) + std::min(k, n)];
  }

  // b(n) = sum over all largest parts = P(n, n).
  const Rational& row_total(int n) const { return prefix(n, n); }

 private:
  int n_max_;
  std::vector<Rational> entries_;
  std::vector<Rational> prefix_;
  Rational zero_{0};
};

// Same table in doubles.  Entries are all positive and each is a short
// positive sum times 1/k, so plain accumulation is already accurate to a
// few ulps; a compensated (Kahan) prefix accumulation is available behind
// a flag for sensitivity checks.
class FloatTriangle {
 public:
  explicit FloatTriangle(int n_max, bool compensated = false) : n_max_(n_max) {
    entries_.resize(detail::tri_offset(n_max + 1));
    prefix_.resize(detail::prefix_offset(n_max + 1));
    for (int n = 1; n <= n_max; ++n) {
      const std::size_t off = detail::tri_offset(n);
      for (int k = 1; k < n; ++k) {
        const int m = n - k;
        entries_[off + k - 1] = prefix(m, std::min(k, m)) / k;
      }
      entries_[off + n - 1] = 1.0 / n;
      const std::size_t poff = detail::prefix_offset(n);
      prefix_[poff] = 0.0;
      if (compensated) {
        double sum = 0.0, c = 0.0;
        for (int k = 1; k <= n; ++k) {
          const double y = entries_[off + k - 1] - c;
          const double t = sum + y;
          c = (t - sum) - y;
          sum = t;
          prefix_[poff + k] = sum;
        }
      } else {
        for (int k = 1; k <= n; ++k)
          prefix_[poff + k] = prefix_[poff + k - 1] + entries_[off + k - 1];
      }
    }
  }

  int n_max() const { return n_max_; }

  double value(int n, int k) const {
    detail::check_query("FloatTriangle::value", n_max_, n, k);
    if (k > n) return 0.0;
    return entries_[detail::tri_offset(n) + k - 1];
  }

  double prefix(int n, int k) const {
    detail::check_query("FloatTriangle::prefix", n_max_, n, std::max(k, 1));
    return prefix_[detail::prefix_offset(n) + std::min(k, n)];
  }

  double row_total(int n) const { return prefix(n, n); }

 private:
  int n_max_;
  std::vector<double> entries_;
  std::vector<double> prefix_;
};

inline ExactTriangle build_exact_triangle(int n_max, int cap = kExactCap) {
  if (n_max < 1) throw std::invalid_argument("build_exact_triangle: n_max must be >= 1");
  if (n_max > cap)
    throw computation_error("build_exact_triangle: n_max = " + std::to_string(n_max) +
                            " exceeds the exact-table cap " + std::to_string(cap));
  return ExactTriangle(n_max);
}

inline FloatTriangle build_float_triangle(int n_max, int budget = kFloatBudget,
                                          bool compensated = false) {
  if (n_max < 1) throw std::invalid_argument("build_float_triangle: n_max must be >= 1");
  if (n_max > budget)
    throw computation_error("build_float_triangle: n_max = " + std::to_string(n_max) +
                            " exceeds the float-table budget " + std::to_string(budget));
  return FloatTriangle(n_max, compensated);
}

}  // namespace partlim
